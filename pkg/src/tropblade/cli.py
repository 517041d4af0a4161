"""Command-line front end. Exit status: 0 success or true verdict, 1 false verdict, 2 bad input."""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Sequence

from . import io
from .bladecomplex import (
    BladeArrangement,
    LVector,
    L_to_beta,
    beta_to_L,
    expand_L,
    pi_coefficients,
    pi_coefficients_operator,
)
from .blades import multisplit_cells, osp_of
from .cones import Verdict, is_minimal_in_S
from .cyclic import CyclicGround, KSubset, format_labels, is_frozen, parse_labels
from .errors import TropBladeError
from .plabic import build_tiling, plabic_boundary, structures_isomorphic
from .separation import (
    addable,
    boundary_collection,
    complete,
    find_flips,
    flip_walk,
    is_maximal,
    validate_collection,
    w0,
)
from .tropical import (
    OctahedronClass,
    PluckerVector,
    d_vector,
    extend_from_seed,
    first_violation,
    is_finest,
    verdicts,
)

OK, FALSE, BAD_INPUT = 0, 1, 2


class InputError(TropBladeError):
    pass


def _emit(args, data, text: str) -> None:
    if args.format == "json":
        print(io.dumps(data))
    else:
        print(text)


def _sets_from_args(args, allow_empty=False):
    if args.input:
        W = io.collection_from_json(io.load(args.input))
        if args.n is not None and args.n != W.n:
            raise InputError(f"--n {args.n} disagrees with the file's n={W.n}")
        if args.k is not None and args.k != W.k:
            raise InputError(f"--k {args.k} disagrees with the file's k={W.k}")
        return W.ground, W.k, list(W.sets)
    if args.sets is None:
        if allow_empty:
            return None
        raise InputError("give --sets or --in")
    if args.n is None:
        raise InputError("--sets needs --n")
    if args.n > 9:
        raise InputError("compact --sets notation needs n <= 9; use --in with JSON lists")
    ground = CyclicGround(args.n)
    sets = [KSubset.of(parse_labels(t), ground) for t in args.sets.split(",") if t.strip()]
    k = args.k if args.k is not None else (len(sets[0]) if sets else None)
    if k is None:
        raise InputError("cannot infer k from an empty --sets")
    for s in sets:
        if len(s) != k:
            raise InputError(f"{s} does not have k={k} elements")
    return ground, k, sets


def _collection(args):
    ground, k, sets = _sets_from_args(args)
    return validate_collection(sets, ground, k)


def _maximal_or_w0(args):
    got = _sets_from_args(args, allow_empty=True)
    if got is None:
        if args.n is None or args.k is None:
            raise InputError("give --sets/--in or both --n and --k")
        return w0(args.n, args.k)
    return validate_collection(got[2], got[0], got[1])


def _single(args) -> KSubset:
    if args.set is None or args.n is None:
        raise InputError("give --set and --n")
    return KSubset.of(parse_labels(args.set), CyclicGround(args.n))


def _labels(text: str | None) -> tuple[int, ...]:
    if not text:
        return ()
    return parse_labels(text) if "," not in text else tuple(int(x) for x in text.split(","))


def _plucker(args) -> PluckerVector:
    if args.input:
        return io.plucker_from_json(io.load(args.input))
    if args.sets is not None:
        ground, k, sets = _sets_from_args(args)
        total = PluckerVector.zero(ground.n, k)
        for J in sets:
            if not is_frozen(J):
                total = total + d_vector(J)
        return total
    if args.set is not None:
        return d_vector(_single(args))
    if args.n is not None and args.k is not None:
        return PluckerVector.zero(args.n, args.k)
    raise InputError("give --in, --sets, --set, or --n/--k for the zero vector")


def _fmt_collection(sets) -> str:
    return "{" + ",".join(str(s) for s in sorted(sets, key=lambda s: s.mask)) + "}"


def _renumbered(sets, ground: CyclicGround) -> list[str]:
    pos = {e: i + 1 for i, e in enumerate(ground.elements)}
    return [format_labels(sorted(pos[x] for x in s.members)) for s in sorted(sets, key=lambda s: s.mask)]


def cmd_check_ws(args) -> int:
    try:
        W = _collection(args)
    except TropBladeError as exc:
        pair = getattr(exc, "pair", None)
        if pair is None:
            raise
        data = {"weakly_separated": False, "pair": [list(s.members) for s in pair]}
        _emit(args, data, f"not weakly separated: {pair[0]} {pair[1]}")
        return FALSE
    maximal = is_maximal(W)
    data = {
        "weakly_separated": True,
        "size": len(W),
        "max_size": W.max_size(),
        "maximal": maximal,
        "addable": [list(s.members) for s in addable(W)],
    }
    _emit(args, data, f"weakly separated, size {len(W)} of {W.max_size()}, maximal: {maximal}")
    return OK


def cmd_complete(args) -> int:
    W = complete(_collection(args))
    _emit(args, io.collection_to_json(W), _fmt_collection(W.sets))
    return OK


def cmd_w0(args) -> int:
    if args.n is None or args.k is None:
        raise InputError("w0 needs --n and --k")
    W = w0(args.n, args.k)
    _emit(args, io.collection_to_json(W), _fmt_collection(W.sets))
    return OK


def cmd_flips(args) -> int:
    W = _maximal_or_w0(args)
    flips = find_flips(W)
    data = [
        {"L": sorted(f.L), "quad": [f.a, f.b, f.c, f.d], "pivot": list(f.pivot.members), "target": list(f.target.members)}
        for f in flips
    ]
    _emit(args, data, "\n".join(str(f) for f in flips) or "no flips")
    return OK


def cmd_walk(args) -> int:
    W = flip_walk(_maximal_or_w0(args), args.steps, args.seed)
    _emit(args, io.collection_to_json(W), _fmt_collection(W.sets))
    return OK


def cmd_boundary(args) -> int:
    if args.j is None:
        raise InputError("boundary needs --j")
    W = _collection(args)
    B = boundary_collection(W, args.j)
    data = io.collection_to_json(B)
    data["maximal"] = is_maximal(B)
    text = _fmt_collection(B.sets)
    if args.renumber:
        names = _renumbered(B.sets, B.ground)
        data["renumbered"] = names
        text += "\nrenumbered: {" + ",".join(names) + "}"
    _emit(args, data, text)
    return OK


def cmd_blade_expand(args) -> int:
    J = _single(args)
    arr = expand_L(J)
    data = {"set": list(J.members), "expansion": io.arrangement_to_json(arr)["terms"]}
    text = f"L_{J} = {arr}"
    osp = osp_of(J)
    data["osp"] = {"blocks": [list(b) for b in osp.blocks], "weights": list(osp.weights), "trivial": osp.trivial}
    text += f"\nosp: {osp}"
    if not osp.trivial:
        cells = multisplit_cells(J)
        data["cells"] = io.cells_to_json(J, cells)["cells"]
        text += "".join(f"\ncell {i + 1}: {_fmt_collection(c)}" for i, c in enumerate(cells))
    _emit(args, data, text)
    return OK


def cmd_l_transform(args) -> int:
    if args.input:
        arr = io.arrangement_from_json(io.load(args.input))
    else:
        ground, k, sets = _sets_from_args(args)
        arr = BladeArrangement(ground, k, {s: Fraction(1) for s in sets})
    c = beta_to_L(arr)
    back = L_to_beta(c)
    data = io.lvector_to_json(c)
    data["round_trip"] = back == arr
    lines = [f"{','.join(map(str, s.members))}: {w}" for s, w in sorted(c.coeffs.items(), key=lambda kv: kv[0].mask)]
    lines.append(f"frozen residual: {c.frozen}")
    _emit(args, data, "\n".join(lines))
    return OK if back == arr else FALSE


def cmd_pi(args) -> int:
    p = _plucker(args)
    c = LVector(p.ground, p.k, dict(p.entries))
    L = _labels(args.L)
    formula = pi_coefficients(c, L)
    operator = pi_coefficients_operator(c, L)
    agree = formula == operator
    data = {
        "L": list(L),
        "pi": {",".join(map(str, s.members)): io.fraction_str(v) for s, v in sorted(formula.items(), key=lambda kv: kv[0].mask)},
        "agree": agree,
    }
    text = "\n".join(f"pi_{s} = {v}" for s, v in sorted(formula.items(), key=lambda kv: kv[0].mask))
    _emit(args, data, text + f"\nformula and operator agree: {agree}")
    return OK if agree else FALSE


def cmd_plucker_check(args) -> int:
    p = _plucker(args)
    bad = first_violation(p)
    data = {"positive": bad is None}
    if bad is not None:
        data["violation"] = {"L": sorted(bad.L), "quad": list(bad.quad), "sums": [io.fraction_str(s) for s in bad.sums]}
        _emit(args, data, f"not positive: L={sorted(bad.L)} {bad.quad} sums {tuple(map(str, bad.sums))}")
        return FALSE
    _emit(args, data, "positive tropical Plücker vector")
    return OK


def cmd_octahedra(args) -> int:
    p = _plucker(args)
    rows = list(verdicts(p))
    data = [{"L": sorted(v.L), "quad": list(v.quad), "class": v.cls.value} for v in rows]
    text = "\n".join(f"L={{{format_labels(sorted(v.L))}}} {v.quad}: {v.cls.value}" for v in rows)
    _emit(args, data, text)
    return FALSE if any(v.cls is OctahedronClass.NOT_POSITIVE for v in rows) else OK


def cmd_finest(args) -> int:
    p = _plucker(args)
    verdict = is_finest(p)
    _emit(args, {"finest": verdict}, f"finest: {verdict}")
    return OK if verdict else FALSE


def cmd_cone_test(args) -> int:
    _, _, sets = _sets_from_args(args)
    report = is_minimal_in_S([s for s in sets if not is_frozen(s)])
    data = report.to_json()
    lines = [f"verdict: {report.verdict.value}"]
    for e in sorted(report.essential.values(), key=lambda e: e.J.mask):
        lines.append(f"{e.J} essential: L={{{format_labels(e.L)}}} pair {e.pair}")
    for J in sorted(report.inessential, key=lambda s: s.mask):
        lines.append(f"{J} inessential")
    _emit(args, data, "\n".join(lines))
    return OK if report.verdict is Verdict.MAXIMAL_SIMPLICIAL else FALSE


def cmd_plabic_boundary(args) -> int:
    if args.j is None:
        raise InputError("plabic-boundary needs --j")
    W = _collection(args)
    Q = plabic_boundary(build_tiling(W), args.j)
    iso = structures_isomorphic(Q, build_tiling(boundary_collection(W, args.j)))
    if args.format == "dot":
        print(Q.to_dot(), end="")
    else:
        data = Q.to_json()
        data["isomorphic_to_direct_build"] = iso
        text = f"faces: {_fmt_collection(Q.faces)}"
        if args.renumber:
            text += "\nrenumbered: {" + ",".join(_renumbered(Q.faces, Q.ground)) + "}"
        text += f"\nisomorphic to direct build: {iso}"
        _emit(args, data, text)
    return OK if iso else FALSE


def cmd_extend(args) -> int:
    W = _maximal_or_w0(args)
    if args.seed_values:
        raw = io.load(args.seed_values)
        seed = {KSubset.of([int(x) for x in key.split(",")], W.ground): io.parse_fraction(v) for key, v in raw.items()}
    elif args.set is not None:
        d = d_vector(_single(args))
        seed = {s: d[s] for s in W.sets}
    else:
        seed = {s: 0 for s in W.sets}
    p = extend_from_seed(W, seed)
    _emit(args, io.plucker_to_json(p), "\n".join(f"{s}: {v}" for s, v in p.sorted_items()))
    return OK


COMMANDS = {
    "check-ws": (cmd_check_ws, "test weak separation and maximality"),
    "complete": (cmd_complete, "greedily extend to a maximal collection"),
    "w0": (cmd_w0, "print the standard maximal collection"),
    "flips": (cmd_flips, "list available flips"),
    "walk": (cmd_walk, "seeded random flip walk"),
    "boundary": (cmd_boundary, "image of a collection under the boundary map at j"),
    "blade-expand": (cmd_blade_expand, "signed expansion, set partition and cells of one blade"),
    "l-transform": (cmd_l_transform, "blade arrangement to L-coordinates"),
    "pi": (cmd_pi, "face coefficients on the 2-row face L"),
    "plucker-check": (cmd_plucker_check, "test the positive tropical Plücker relations"),
    "octahedra": (cmd_octahedra, "classify every octahedron"),
    "finest": (cmd_finest, "test whether every octahedron is split"),
    "cone-test": (cmd_cone_test, "maximal simplicial cone criterion"),
    "plabic-boundary": (cmd_plabic_boundary, "boundary of the plabic structure"),
    "extend": (cmd_extend, "extend seed heights on a maximal collection"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tropblade", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (fn, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=fn)
        p.add_argument("--n", type=int)
        p.add_argument("--k", type=int)
        p.add_argument("--sets", help="comma-separated digit strings, e.g. 124,125,134")
        p.add_argument("--set", help="a single subset, e.g. 135")
        p.add_argument("--in", dest="input", help="JSON input file")
        p.add_argument("--j", type=int)
        p.add_argument("--L", help="face labels, e.g. 1 or 2,5")
        p.add_argument("--steps", type=int, default=100)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--seed-values", help="JSON map from '1,3,5' keys to seed heights")
        p.add_argument("--renumber", action="store_true", help="also show labels renumbered 1..m")
        p.add_argument("--format", choices=("text", "json", "dot"), default="text")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return BAD_INPUT if exc.code else OK
    if args.format == "dot" and args.command != "plabic-boundary":
        print("error: --format dot is only available for plabic-boundary", file=sys.stderr)
        return BAD_INPUT
    try:
        return args.func(args)
    except TropBladeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
