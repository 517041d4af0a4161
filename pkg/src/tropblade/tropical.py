"""Positive tropical Plücker vectors, octahedron classification and seed propagation."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Mapping

from .bladecomplex import BladeArrangement, boundary_multi, reduce_frozen
from .blades import distance
from .cyclic import CyclicGround, KSubset, mask_of
from .errors import (
    ArityError,
    CompletionError,
    ContradictionError,
    PreconditionError,
    SizeError,
)
from .separation import WCollection, is_maximal, weakly_separated


@dataclass
class PluckerVector:
    """A value for every k-subset of ``[n]``."""

    n: int
    k: int
    entries: dict[KSubset, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        ground = CyclicGround(self.n)
        self.entries = {s: Fraction(v) for s, v in self.entries.items()}
        expected = ground.subsets(self.k)
        if len(self.entries) != len(expected) or any(s not in self.entries for s in expected):
            raise SizeError(f"a Plücker vector needs a value at each of the {len(expected)} {self.k}-subsets")

    @classmethod
    def from_function(cls, n: int, k: int, fn) -> "PluckerVector":
        return cls(n, k, {s: Fraction(fn(s)) for s in CyclicGround(n).subsets(k)})

    @classmethod
    def zero(cls, n: int, k: int) -> "PluckerVector":
        return cls.from_function(n, k, lambda s: 0)

    @property
    def ground(self) -> CyclicGround:
        return CyclicGround(self.n)

    def __getitem__(self, s: KSubset) -> Fraction:
        return self.entries[s]

    def by_mask(self, mask: int) -> Fraction:
        return self.entries[KSubset(self.ground, mask)]

    def __add__(self, other: "PluckerVector") -> "PluckerVector":
        if (self.n, self.k) != (other.n, other.k):
            raise SizeError("Plücker vectors of different shapes")
        return PluckerVector(self.n, self.k, {s: v + other.entries[s] for s, v in self.entries.items()})

    def __mul__(self, scalar) -> "PluckerVector":
        scalar = Fraction(scalar)
        return PluckerVector(self.n, self.k, {s: v * scalar for s, v in self.entries.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, PluckerVector):
            return NotImplemented
        return (self.n, self.k) == (other.n, other.k) and self.entries == other.entries

    def sorted_items(self) -> list[tuple[KSubset, Fraction]]:
        return sorted(self.entries.items(), key=lambda kv: kv[0].mask)


@lru_cache(maxsize=None)
def octahedra(n: int, k: int) -> tuple[tuple[frozenset[int], int, int, int, int], ...]:
    """Every ``(L, a, b, c, d)`` with ``|L| = k - 2`` and ``a < b < c < d`` outside ``L``."""
    if not 2 <= k <= n - 2:
        raise PreconditionError(f"octahedra need 2 <= k <= n-2, got k={k}, n={n}")
    out = []
    for L in combinations(range(1, n + 1), k - 2):
        rest = [x for x in range(1, n + 1) if x not in L]
        for a, b, c, d in combinations(rest, 4):
            out.append((frozenset(L), a, b, c, d))
    return tuple(out)


def _vertex_masks(L: Iterable[int], a: int, b: int, c: int, d: int) -> tuple[int, ...]:
    """Masks of ``Lac, Lbd, Lab, Lcd, Lad, Lbc``."""
    base = mask_of(L)
    return tuple(base | mask_of(p) for p in ((a, c), (b, d), (a, b), (c, d), (a, d), (b, c)))


class OctahedronClass(Enum):
    UNSPLIT = "Unsplit"
    SPLIT_AD_BC = "SplitSeparating(Lad,Lbc)"
    SPLIT_AB_CD = "SplitSeparating(Lab,Lcd)"
    NOT_POSITIVE = "NotPositive"


@dataclass(frozen=True)
class OctahedronVerdict:
    L: frozenset[int]
    quad: tuple[int, int, int, int]
    cls: OctahedronClass
    sums: tuple[Fraction, Fraction, Fraction]

    @property
    def separating_pair(self) -> tuple[frozenset[int], frozenset[int]] | None:
        """Labels of the two vertices joined by the new interior square, if split."""
        a, b, c, d = self.quad
        if self.cls is OctahedronClass.SPLIT_AD_BC:
            return self.L | {a, d}, self.L | {b, c}
        if self.cls is OctahedronClass.SPLIT_AB_CD:
            return self.L | {a, b}, self.L | {c, d}
        return None


def _sums(p: PluckerVector, L, a, b, c, d) -> tuple[Fraction, Fraction, Fraction]:
    ac, bd, ab, cd, ad, bc = (p.by_mask(m) for m in _vertex_masks(L, a, b, c, d))
    return ac + bd, ab + cd, ad + bc


def classify_octahedron(p: PluckerVector, L: Iterable[int], a: int, b: int, c: int, d: int) -> OctahedronVerdict:
    """Which square of the octahedron ``L + {a,b,c,d}`` the heights cut along.

    Positivity requires ``s1 = min(s2, s3)``; any other value of ``s1``
    (larger or smaller) is reported as ``NOT_POSITIVE``.
    """
    L = frozenset(L)
    if len(L) != p.k - 2:
        raise ArityError(f"|L| must be k-2 = {p.k - 2}, got {len(L)}")
    if not 1 <= a < b < c < d <= p.n:
        raise PreconditionError(f"need 1 <= a < b < c < d <= {p.n}, got {(a, b, c, d)}")
    if L & {a, b, c, d}:
        raise PreconditionError(f"L={sorted(L)} meets {(a, b, c, d)}")
    s1, s2, s3 = _sums(p, L, a, b, c, d)
    if s1 != min(s2, s3):
        cls = OctahedronClass.NOT_POSITIVE
    elif s2 == s3:
        cls = OctahedronClass.UNSPLIT
    elif s2 < s3:
        cls = OctahedronClass.SPLIT_AD_BC
    else:
        cls = OctahedronClass.SPLIT_AB_CD
    return OctahedronVerdict(L, (a, b, c, d), cls, (s1, s2, s3))


def verdicts(p: PluckerVector) -> Iterator[OctahedronVerdict]:
    for L, a, b, c, d in octahedra(p.n, p.k):
        yield classify_octahedron(p, L, a, b, c, d)


def first_violation(p: PluckerVector) -> OctahedronVerdict | None:
    for L, a, b, c, d in octahedra(p.n, p.k):
        s1, s2, s3 = _sums(p, L, a, b, c, d)
        if s1 != min(s2, s3):
            return classify_octahedron(p, L, a, b, c, d)
    return None


def is_positive_plucker(p: PluckerVector) -> bool:
    return first_violation(p) is None


def is_finest(p: PluckerVector) -> bool:
    """No octahedron is left whole; decided on the 3-skeleton only."""
    bad = first_violation(p)
    if bad is not None:
        raise PreconditionError(f"not a positive tropical Plücker vector: {bad}")
    return all(v.cls is not OctahedronClass.UNSPLIT for v in verdicts(p))


def d_vector(J: KSubset) -> PluckerVector:
    if J.ground.removed_mask:
        raise PreconditionError("d_vector is defined on the full ground [n]")
    return PluckerVector.from_function(J.n, len(J), lambda I: distance(J, I))


@dataclass(frozen=True)
class ZVerdict:
    """Outcome of the two face conditions; ``pair`` names the first failure."""

    member: bool
    L: tuple[int, ...] | None = None
    pair: tuple[KSubset, ...] | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.member


def z_membership(arr: BladeArrangement) -> ZVerdict:
    """Nonnegative face coefficients with a pairwise weakly separated support on every 2-row face."""
    if arr.level:
        raise PreconditionError("z_membership takes a top-level arrangement")
    k, n = arr.size, arr.ground.n
    for L in combinations(range(1, n + 1), k - 2):
        image = reduce_frozen(boundary_multi(arr, L))
        terms = image.sorted_terms()
        for s, w in terms:
            if w < 0:
                return ZVerdict(False, L, (s,), f"negative coefficient {w}")
        for (s, _), (t, _) in combinations(terms, 2):
            if not weakly_separated(s, t):
                return ZVerdict(False, L, (s, t), "support not weakly separated")
    return ZVerdict(True)


def extend_from_seed(W: WCollection, seed: Mapping[KSubset, object]) -> PluckerVector:
    """The positive tropical Plücker vector agreeing with ``seed`` on ``W``.

    Each round scans the octahedra in a fixed order and solves any one with
    a single unknown vertex that the relation pins down: a diagonal unknown
    is always determined, a side unknown only when the known diagonal sum is
    strictly below the other side sum.
    """
    if not is_maximal(W):
        raise PreconditionError("extend_from_seed needs a maximal collection")
    if W.ground.removed_mask:
        raise PreconditionError("extend_from_seed works on the full ground [n]")
    n, k = W.n, W.k
    values: dict[int, Fraction] = {}
    for s in W.sets:
        if s not in seed:
            raise PreconditionError(f"seed has no value at {s}")
        values[s.mask] = Fraction(seed[s])
    total = len(CyclicGround(n).subsets(k))
    octs = [(L, q, _vertex_masks(L, *q)) for L, *q in octahedra(n, k)]

    def fail(L, q, why):
        raise ContradictionError(f"octahedron L={sorted(L)} {tuple(q)}: {why}", octahedron=(L, tuple(q)))

    while len(values) < total:
        progress = False
        for L, q, (ac, bd, ab, cd, ad, bc) in octs:
            masks = (ac, bd, ab, cd, ad, bc)
            unknown = [m for m in masks if m not in values]
            if len(unknown) != 1:
                continue
            u = unknown[0]
            v = values.get
            if u in (ac, bd):
                other = bd if u == ac else ac
                values[u] = min(v(ab) + v(cd), v(ad) + v(bc)) - v(other)
                progress = True
                continue
            s1 = v(ac) + v(bd)
            if u in (ab, cd):
                partner, rest = (cd if u == ab else ab), v(ad) + v(bc)
            else:
                partner, rest = (bc if u == ad else ad), v(ab) + v(cd)
            if s1 > rest:
                fail(L, q, f"diagonal sum {s1} exceeds side sum {rest}")
            if s1 < rest:
                values[u] = s1 - v(partner)
                progress = True
        if not progress:
            missing = sorted(set(s.mask for s in CyclicGround(n).subsets(k)) - set(values))
            raise CompletionError(f"propagation stalled with {len(missing)} undetermined entries")
    ground = CyclicGround(n)
    p = PluckerVector(n, k, {KSubset(ground, m): x for m, x in values.items()})
    bad = first_violation(p)
    if bad is not None:
        fail(bad.L, bad.quad, f"sums {bad.sums} violate the relation")
    return p
