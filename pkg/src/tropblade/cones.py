"""Deciding whether the blades of a nonfrozen maximal collection span a maximal simplicial cone.

A sub-collection ``W'`` satisfies the face condition at ``L`` when the
nonfrozen pairs of ``boundary_L(W')`` contain a triangulation of the
``(n - k + 2)``-gon. The condition only gets easier as ``W'`` grows, so ``W``
is minimal exactly when removing any single element breaks it somewhere.
Removing ``J`` changes some ``boundary_L`` image only if ``J`` is the sole
preimage of one of its pairs; such ``J`` are called essential.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from . import exact
from .bladecomplex import LVector
from .cyclic import CyclicGround, KSubset, boundary_subset_multi, is_frozen
from .errors import PreconditionError
from .separation import weakly_separated
from .tropical import d_vector


def _faces(n: int, k: int):
    return combinations(range(1, n + 1), k - 2)


def _shape(W: Iterable[KSubset]) -> tuple[list[KSubset], int, int]:
    sets = sorted(set(W), key=lambda s: s.mask)
    if not sets:
        raise PreconditionError("empty collection")
    n, k = sets[0].n, len(sets[0])
    return sets, n, k


def face_pairs(W: Iterable[KSubset], L: Iterable[int]) -> dict[KSubset, list[KSubset]]:
    """Nonfrozen pairs of ``boundary_L(W)`` with their preimages in ``W``."""
    out: dict[KSubset, list[KSubset]] = {}
    for J in sorted(W, key=lambda s: s.mask):
        image = boundary_subset_multi(J, L)
        if not is_frozen(image):
            out.setdefault(image, []).append(J)
    return out


def s_condition(W: Iterable[KSubset], L: Iterable[int]) -> bool:
    """The nonfrozen pairs on face ``L`` are noncrossing and as many as a triangulation has."""
    W = list(W)
    if not W:
        return False
    L = tuple(L)
    m = W[0].n - len(L)
    pairs = sorted(face_pairs(W, L), key=lambda s: s.mask)
    if len(pairs) != m - 3:
        return False
    return all(weakly_separated(x, y) for x, y in combinations(pairs, 2))


def satisfies_s(W: Iterable[KSubset]) -> bool:
    W, n, k = _shape(W)
    return all(s_condition(W, L) for L in _faces(n, k))


@dataclass(frozen=True)
class Essential:
    J: KSubset
    L: tuple[int, ...]
    pair: KSubset


def essential_elements(W: Iterable[KSubset]) -> dict[KSubset, Essential]:
    """Essential elements with their lexicographically least ``(L, pair)`` witness."""
    sets, n, k = _shape(W)
    expected = (k - 1) * (n - k - 1)
    if len(sets) != expected or any(is_frozen(s) for s in sets):
        raise PreconditionError(
            f"expected the {expected} nonfrozen sets of a maximal collection, got {len(sets)}"
        )
    found: dict[KSubset, Essential] = {}
    for L in _faces(n, k):
        fp = face_pairs(sets, L)
        for pair in sorted(fp, key=lambda s: s.members):
            pre = fp[pair]
            if len(pre) == 1 and pre[0] not in found:
                found[pre[0]] = Essential(pre[0], L, pair)
    return found


class Verdict(Enum):
    MAXIMAL_SIMPLICIAL = "MaximalSimplicial"
    NOT_MINIMAL = "NotMinimal"


@dataclass
class ConeReport:
    collection: list[KSubset]
    verdict: Verdict
    essential: dict[KSubset, Essential] = field(default_factory=dict)
    inessential: dict[KSubset, list[KSubset]] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "collection": [list(s.members) for s in self.collection],
            "verdict": self.verdict.value,
            "essential": [
                {"set": list(e.J.members), "L": list(e.L), "pair": list(e.pair.members)}
                for e in sorted(self.essential.values(), key=lambda e: e.J.mask)
            ],
            "inessential": [
                {"set": list(J.members), "covering": [list(s.members) for s in cover]}
                for J, cover in sorted(self.inessential.items(), key=lambda kv: kv[0].mask)
            ],
        }


def is_minimal_in_S(W: Iterable[KSubset]) -> ConeReport:
    sets, _, _ = _shape(W)
    ess = essential_elements(sets)
    rest = {J: [s for s in sets if s != J] for J in sets if J not in ess}
    verdict = Verdict.NOT_MINIMAL if rest else Verdict.MAXIMAL_SIMPLICIAL
    return ConeReport(sets, verdict, ess, rest)


def ray_in_L_coords(J: KSubset) -> LVector:
    """The ray of ``beta_J`` in ``L``-coordinates, unscaled and without the frozen part."""
    if is_frozen(J):
        raise PreconditionError(f"{J} is frozen; it spans the linearity space, not a ray")
    p = d_vector(J)
    return LVector(J.ground, len(J), dict(p.entries))


def lin_equiv(c1: LVector, c2: LVector) -> bool:
    """``c1 - c2`` is a combination of the vectors ``u_i`` with ``(u_i)_I = [i in I]``."""
    if c1.ground != c2.ground or c1.size != c2.size:
        return False
    subsets = c1.ground.subsets(c1.size)
    diff = [c1.coeff(I) - c2.coeff(I) for I in subsets]
    columns = [[Fraction(1 if i in I else 0) for I in subsets] for i in c1.ground.elements]
    return exact.in_column_span(columns, diff)
