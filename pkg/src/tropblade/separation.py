"""Weak separation, weakly separated collections, flips and the boundary image."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

from . import kernels
from .cyclic import (
    CyclicGround,
    KSubset,
    boundary_subset,
    format_labels,
    is_frozen,
    labels_of,
    mask_of,
    parse_labels,
)
from .errors import FlipError, PreconditionError, SizeError, ValidationError


def weakly_separated(I: KSubset, J: KSubset) -> bool:
    """No cyclically ordered ``a, b, c, d`` with ``a, c`` in ``I \\ J`` and ``b, d`` in ``J \\ I``."""
    if len(I) != len(J):
        raise SizeError(f"{I} and {J} have different sizes")
    if I.ground != J.ground:
        raise SizeError(f"{I!r} and {J!r} live on different grounds")
    return kernels.weakly_separated(I.mask, J.mask, I.n)


@dataclass(frozen=True)
class WCollection:
    """A pairwise weakly separated family of k-subsets of one ground."""

    ground: CyclicGround
    k: int
    sets: frozenset[KSubset]

    @cached_property
    def nonfrozen(self) -> frozenset[KSubset]:
        return frozenset(s for s in self.sets if not is_frozen(s))

    @cached_property
    def frozen(self) -> frozenset[KSubset]:
        return self.sets - self.nonfrozen

    @property
    def n(self) -> int:
        return self.ground.n

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[KSubset]:
        return iter(self.sorted())

    def __contains__(self, s: KSubset) -> bool:
        return s in self.sets

    def sorted(self) -> list[KSubset]:
        return sorted(self.sets, key=lambda s: s.mask)

    @property
    def masks(self) -> frozenset[int]:
        return frozenset(s.mask for s in self.sets)

    def max_size(self) -> int:
        m = len(self.ground)
        return self.k * (m - self.k) + 1

    def __str__(self) -> str:
        return "{" + ",".join(str(s) for s in self.sorted()) + "}"


def validate_collection(
    sets: Iterable[KSubset], ground: CyclicGround | None = None, k: int | None = None
) -> WCollection:
    """Build a ``WCollection``, raising ``ValidationError`` on the first non-separated pair."""
    sets = frozenset(sets)
    for s in sets:
        if ground is None:
            ground = s.ground
        if k is None:
            k = len(s)
        if s.ground != ground:
            raise ValidationError(f"{s!r} is not on ground {ground!r}")
        if len(s) != k:
            raise ValidationError(f"{s} does not have size {k}")
    if ground is None or k is None:
        raise ValidationError("an empty collection needs an explicit ground and k")
    ordered = sorted(sets, key=lambda s: s.mask)
    bad = kernels.first_bad_pair([s.mask for s in ordered], ground.n)
    if bad is not None:
        pair = (ordered[bad[0]], ordered[bad[1]])
        raise ValidationError(f"{pair[0]} and {pair[1]} are not weakly separated", pair=pair)
    return WCollection(ground, k, sets)


def collection(labels: Iterable[Iterable[int] | str], n: int, k: int | None = None) -> WCollection:
    """Convenience constructor from label tuples or compact strings (``"135"``) on ``[n]``."""
    ground = CyclicGround(n)
    sets = [KSubset.of(parse_labels(ls) if isinstance(ls, str) else ls, ground) for ls in labels]
    return validate_collection(sets, ground, k)


def is_maximal(W: WCollection) -> bool:
    """Maximality by the purity cardinality ``k(m - k) + 1``."""
    return len(W) == W.max_size()


def addable(W: WCollection) -> list[KSubset]:
    """Every k-subset outside ``W`` that is weakly separated from all of ``W``."""
    masks = [s.mask for s in W.sorted()]
    present = set(masks)
    return [
        c
        for c in W.ground.subsets(W.k)
        if c.mask not in present and kernels.compatible(c.mask, masks, W.n)
    ]


def complete(W: WCollection) -> WCollection:
    """Greedy completion over candidates in colexicographic order."""
    start = [s.mask for s in W.sorted()]
    candidates = [s.mask for s in W.ground.subsets(W.k)]
    kept = kernels.greedy_extend(start, candidates, W.n)
    return WCollection(W.ground, W.k, frozenset(KSubset(W.ground, m) for m in kept))


def w0(n: int, k: int) -> WCollection:
    """Intervals of size k together with ``[1, m] ∪ [l, l + k - m - 1]`` for ``l ≥ m + 2``, ``l + k - m - 1 ≤ n - 1``."""
    if not 2 <= k <= n - 2:
        raise PreconditionError(f"w0 needs 2 <= k <= n-2, got k={k}, n={n}")
    ground = CyclicGround(n)
    sets = set()
    for start in range(1, n + 1):
        sets.add(mask_of((start - 1 + t) % n + 1 for t in range(k)))
    for m in range(1, k):
        last = k - m - 1
        for l in range(m + 2, n - last):
            sets.add(mask_of(list(range(1, m + 1)) + list(range(l, l + last + 1))))
    return WCollection(ground, k, frozenset(KSubset(ground, s) for s in sets))


@dataclass(frozen=True)
class FlipDescriptor:
    """Exchange ``pivot`` (one diagonal of the octahedron) for ``target`` (the other)."""

    L: frozenset[int]
    a: int
    b: int
    c: int
    d: int
    pivot: KSubset
    target: KSubset

    def reverse(self) -> "FlipDescriptor":
        return FlipDescriptor(self.L, self.a, self.b, self.c, self.d, self.target, self.pivot)

    def sides(self, ground: CyclicGround) -> list[KSubset]:
        base = mask_of(self.L)
        return [
            KSubset(ground, base | mask_of(p))
            for p in ((self.a, self.b), (self.b, self.c), (self.c, self.d), (self.a, self.d))
        ]

    def __str__(self) -> str:
        return (
            f"L={{{format_labels(sorted(self.L))}}} ({self.a},{self.b},{self.c},{self.d}): "
            f"{self.pivot} -> {self.target}"
        )


def find_flips(W: WCollection) -> list[FlipDescriptor]:
    """All flips available in ``W``, in a deterministic order."""
    present = W.masks
    ground = W.ground
    found: dict[tuple, FlipDescriptor] = {}
    outside = [x for x in ground.elements]
    for s in W.sorted():
        mem = labels_of(s.mask)
        comp = [x for x in outside if x not in s]
        for x, y in combinations(mem, 2):
            base = s.mask & ~mask_of((x, y))
            for u, v in combinations(comp, 2):
                a, b, c, d = sorted((x, y, u, v))
                if {x, y} == {a, c}:
                    other = base | mask_of((b, d))
                elif {x, y} == {b, d}:
                    other = base | mask_of((a, c))
                else:
                    continue
                if other in present:
                    continue
                sides = [base | mask_of(p) for p in ((a, b), (b, c), (c, d), (a, d))]
                if all(m in present for m in sides):
                    key = (base, a, b, c, d)
                    found[key] = FlipDescriptor(
                        frozenset(labels_of(base)), a, b, c, d,
                        KSubset(ground, s.mask), KSubset(ground, other),
                    )
    return [found[key] for key in sorted(found)]


def apply_flip(W: WCollection, f: FlipDescriptor) -> WCollection:
    if f.pivot not in W.sets:
        raise FlipError(f"pivot {f.pivot} is not in the collection")
    if f.target in W.sets:
        raise FlipError(f"target {f.target} is already in the collection")
    for side in f.sides(W.ground):
        if side not in W.sets:
            raise FlipError(f"side {side} of the flip is missing")
    return WCollection(W.ground, W.k, (W.sets - {f.pivot}) | {f.target})


def flip_walk_states(W: WCollection, steps: int, seed: int) -> Iterator[WCollection]:
    """Yield the collection after each of ``steps`` seeded random flips."""
    if not is_maximal(W):
        raise PreconditionError("flip walks start from a maximal collection")
    rng = random.Random(seed)
    for _ in range(steps):
        flips = find_flips(W)
        if not flips:
            return
        W = apply_flip(W, rng.choice(flips))
        yield W


def flip_walk(W: WCollection, steps: int, seed: int) -> WCollection:
    """Seeded random walk of ``steps`` flips; reproducible for a given seed."""
    if not is_maximal(W):
        raise PreconditionError("flip walks start from a maximal collection")
    for W in flip_walk_states(W, steps, seed):
        pass
    return W


def boundary_collection(W: WCollection, j: int) -> WCollection:
    """Deduplicated image of ``W`` under the boundary map at ``j``."""
    if W.k < 2:
        raise SizeError("boundary needs k >= 2")
    image = {boundary_subset(s, j) for s in W.sets}
    ground = W.ground.without(j)
    return validate_collection(image, ground, W.k - 1)
