"""Time the compiled and pure-Python kernels on the same random workloads.

    python benchmarks/bench_kernels.py [--n 12] [--k 5] [--repeat 5]
"""

import argparse
import random
import timeit
from itertools import combinations

from tropblade.kernels import backends
from tropblade.separation import flip_walk, w0


def workloads(n, k, seed):
    rng = random.Random(seed)
    subsets = [sum(1 << (x - 1) for x in c) for c in combinations(range(1, n + 1), k)]
    pairs = [(rng.choice(subsets), rng.choice(subsets)) for _ in range(20000)]
    W = flip_walk(w0(n, k), 50, seed)
    masks = sorted(s.mask for s in W.sets)
    full = (1 << n) - 1
    return {
        "weakly_separated x20000": lambda mod: [mod.weakly_separated(a, b, n) for a, b in pairs],
        "first_bad_pair (maximal W)": lambda mod: mod.first_bad_pair(masks, n),
        "greedy_extend (all k-subsets)": lambda mod: mod.greedy_extend([], subsets, n),
        "distance x20000": lambda mod: [mod.distance(a, b, n, full) for a, b in pairs],
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=12)
    ap.add_argument("--k", type=int, default=5)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    mods = backends()
    jobs = workloads(args.n, args.k, args.seed)
    print(f"n={args.n} k={args.k}, best of {args.repeat}, backends: {', '.join(mods)}")
    print(f"{'kernel':32s}" + "".join(f"{name:>12s}" for name in mods) + "     speedup")
    for label, job in jobs.items():
        times = {}
        for name, mod in mods.items():
            times[name] = min(timeit.repeat(lambda: job(mod), number=1, repeat=args.repeat))
        row = f"{label:32s}" + "".join(f"{times[name] * 1e3:10.2f}ms" for name in mods)
        if "cython" in times:
            row += f"   {times['python'] / times['cython']:8.1f}x"
        print(row)


if __name__ == "__main__":
    main()
