"""Weighted blade arrangements, the signed-cube family ``L_J`` and the boundary operators.

An arrangement lives on one level ``L`` (the labels removed from ``[n]``);
its keys are ``(k - |L|)``-subsets of ``[n] \\ L``. Weights are ``Fraction``.

The family ``L_J`` sums to zero over all ``J``, so it spans only the
total-weight-zero arrangements. ``LVector`` therefore carries a frozen
residual: the part of a blade arrangement outside that span, kept as a
multiple of the sum of all frozen blades.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Mapping

from . import exact
from .blades import distance
from .cyclic import (
    CyclicGround,
    KSubset,
    boundary_subset,
    format_labels,
    initial_points,
    is_frozen,
    mask_of,
)
from .errors import ArityError, PreconditionError, SizeError


def _clean(terms: Mapping[KSubset, Fraction]) -> dict[KSubset, Fraction]:
    return {s: Fraction(w) for s, w in terms.items() if w}


@dataclass
class BladeArrangement:
    """``sum w_J beta_J`` on one level."""

    ground: CyclicGround
    size: int
    terms: dict[KSubset, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        self.terms = _clean(self.terms)
        for s in self.terms:
            if s.ground != self.ground or len(s) != self.size:
                raise SizeError(f"{s!r} is not a {self.size}-subset of {self.ground!r}")

    @classmethod
    def blade(cls, J: KSubset, weight=1) -> "BladeArrangement":
        return cls(J.ground, len(J), {J: Fraction(weight)})

    @classmethod
    def zero(cls, ground: CyclicGround, size: int) -> "BladeArrangement":
        return cls(ground, size, {})

    @property
    def level(self) -> frozenset[int]:
        return self.ground.removed

    def weight(self, J: KSubset) -> Fraction:
        return self.terms.get(J, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def total_weight(self) -> Fraction:
        return sum(self.terms.values(), Fraction(0))

    def sorted_terms(self) -> list[tuple[KSubset, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0].mask)

    def _same_space(self, other: "BladeArrangement") -> None:
        if self.ground != other.ground or self.size != other.size:
            raise SizeError(
                f"arrangements on {self.ground!r}/{self.size} and {other.ground!r}/{other.size} do not add"
            )

    def __add__(self, other: "BladeArrangement") -> "BladeArrangement":
        self._same_space(other)
        out = dict(self.terms)
        for s, w in other.terms.items():
            out[s] = out.get(s, Fraction(0)) + w
        return BladeArrangement(self.ground, self.size, out)

    def __neg__(self) -> "BladeArrangement":
        return BladeArrangement(self.ground, self.size, {s: -w for s, w in self.terms.items()})

    def __sub__(self, other: "BladeArrangement") -> "BladeArrangement":
        return self + (-other)

    def __mul__(self, scalar) -> "BladeArrangement":
        scalar = Fraction(scalar)
        return BladeArrangement(self.ground, self.size, {s: w * scalar for s, w in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, BladeArrangement):
            return NotImplemented
        return self.ground == other.ground and self.size == other.size and self.terms == other.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        lev = f"^({format_labels(sorted(self.level))})" if self.level else ""
        parts = []
        for s, w in self.sorted_terms():
            coef = "" if w == 1 else "-" if w == -1 else f"{w}*"
            parts.append(f"{coef}b_{s}{lev}")
        return " + ".join(parts).replace("+ -", "- ")


def frozen_sum(ground: CyclicGround, size: int) -> BladeArrangement:
    """Sum of the blades at every cyclic interval of ``ground`` of the given size."""
    els = ground.elements
    m = len(els)
    terms = {}
    for i in range(m):
        s = KSubset(ground, mask_of(els[(i + t) % m] for t in range(size)))
        terms[s] = Fraction(1)
    return BladeArrangement(ground, size, terms)


def expand_L(J: KSubset) -> BladeArrangement:
    """``L_J = sum over M ⊆ J• of (-1)^(1+|M|) beta_{J_M}``; ``J_M`` moves each start in ``M`` one step back."""
    ground = J.ground
    starts = initial_points(J)
    terms: dict[KSubset, Fraction] = {}
    for r in range(len(starts) + 1):
        sign = Fraction(-1 if r % 2 == 0 else 1)
        for M in combinations(starts, r):
            mask = J.mask
            for j in M:
                mask = (mask & ~mask_of((j,))) | mask_of((ground.predecessor(j),))
            s = KSubset(ground, mask)
            terms[s] = terms.get(s, Fraction(0)) + sign
    return BladeArrangement(ground, len(J), terms)


@dataclass
class LVector:
    """Coefficients ``c_J`` of ``sum c_J L_J`` plus a frozen residual arrangement."""

    ground: CyclicGround
    size: int
    coeffs: dict[KSubset, Fraction] = field(default_factory=dict)
    frozen: BladeArrangement | None = None

    def __post_init__(self):
        self.coeffs = _clean(self.coeffs)
        for s in self.coeffs:
            if s.ground != self.ground or len(s) != self.size:
                raise SizeError(f"{s!r} is not a {self.size}-subset of {self.ground!r}")
        if self.frozen is None:
            self.frozen = BladeArrangement.zero(self.ground, self.size)

    @classmethod
    def from_values(cls, values: Mapping[KSubset, object], residual: BladeArrangement | None = None) -> "LVector":
        first = next(iter(values))
        return cls(first.ground, len(first), {s: Fraction(v) for s, v in values.items()}, residual)

    @property
    def level(self) -> frozenset[int]:
        return self.ground.removed

    def coeff(self, J: KSubset) -> Fraction:
        return self.coeffs.get(J, Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, LVector):
            return NotImplemented
        return (
            self.ground == other.ground
            and self.size == other.size
            and self.coeffs == other.coeffs
            and self.frozen == other.frozen
        )

    def __add__(self, other: "LVector") -> "LVector":
        out = dict(self.coeffs)
        for s, w in other.coeffs.items():
            out[s] = out.get(s, Fraction(0)) + w
        return LVector(self.ground, self.size, out, self.frozen + other.frozen)

    def __mul__(self, scalar) -> "LVector":
        scalar = Fraction(scalar)
        return LVector(
            self.ground, self.size, {s: w * scalar for s, w in self.coeffs.items()}, self.frozen * scalar
        )

    __rmul__ = __mul__


def L_to_beta(c: LVector) -> BladeArrangement:
    out = BladeArrangement.zero(c.ground, c.size) + c.frozen
    for J, w in c.coeffs.items():
        out = out + expand_L(J) * w
    return out


def beta_to_L(arr: BladeArrangement) -> LVector:
    """Invert ``L_to_beta`` using ``sum_I d(J, I) L_I = m beta_J - F``.

    ``F`` is the sum of frozen blades and ``m`` the ground size. The result
    satisfies ``L_to_beta(beta_to_L(arr)) == arr`` exactly.
    """
    m = len(arr.ground)
    if m < 4:
        raise PreconditionError(f"basis transforms need a ground of at least 4 elements, got {m}")
    coeffs: dict[KSubset, Fraction] = {}
    subsets = arr.ground.subsets(arr.size)
    for J, w in arr.terms.items():
        for I in subsets:
            dv = distance(J, I)
            if dv:
                coeffs[I] = coeffs.get(I, Fraction(0)) + w * dv / m
    residual = frozen_sum(arr.ground, arr.size) * (arr.total_weight() / m)
    return LVector(arr.ground, arr.size, coeffs, residual)


def transition_matrix(ground: CyclicGround, size: int) -> list[list[int]]:
    """Row ``I`` holds the beta-coordinates of ``L_I``; rows and columns in colex order."""
    subsets = ground.subsets(size)
    index = {s: i for i, s in enumerate(subsets)}
    rows = []
    for I in subsets:
        row = [0] * len(subsets)
        for s, w in expand_L(I).terms.items():
            row[index[s]] = int(w)
        rows.append(row)
    return rows


def transition_rank(ground: CyclicGround, size: int) -> int:
    return exact.rank(transition_matrix(ground, size))


def reduce_frozen(arr: BladeArrangement) -> BladeArrangement:
    return BladeArrangement(arr.ground, arr.size, {s: w for s, w in arr.terms.items() if not is_frozen(s)})


def boundary_beta(arr: BladeArrangement, j: int) -> BladeArrangement:
    """``beta_J -> beta_{J minus its first member at or after j}`` on the facet ``x_j = 1``.

    When ``j`` is already removed the image is zero; it is returned as the
    empty arrangement on the unchanged level.
    """
    if j not in arr.ground:
        if not 1 <= j <= arr.ground.n:
            raise PreconditionError(f"label {j} is not in [{arr.ground.n}]")
        return BladeArrangement.zero(arr.ground, arr.size)
    if arr.size < 2:
        raise SizeError("boundary needs subsets of size at least 2")
    target = arr.ground.without(j)
    out: dict[KSubset, Fraction] = {}
    for s, w in arr.terms.items():
        t = boundary_subset(s, j)
        out[t] = out.get(t, Fraction(0)) + w
    return BladeArrangement(target, arr.size - 1, out)


def total_boundary(arr: BladeArrangement) -> dict[frozenset[int], BladeArrangement]:
    """``sum_j boundary_beta(arr, j)``, one component per new level; zero components are dropped."""
    out = {}
    for j in arr.ground.elements:
        image = boundary_beta(arr, j)
        if not image.is_zero():
            out[image.level] = image
    return out


def boundary_multi(arr: BladeArrangement, L: Iterable[int]) -> BladeArrangement:
    for j in sorted(set(L)):
        arr = boundary_beta(arr, j)
    return arr


def boundary_L(c: LVector, j: int) -> LVector:
    """``L_J -> L_{J - j}`` on the new level when ``j`` is in ``J``, else zero."""
    if j not in c.ground:
        if not 1 <= j <= c.ground.n:
            raise PreconditionError(f"label {j} is not in [{c.ground.n}]")
        return LVector(c.ground, c.size)
    if c.size < 2:
        raise SizeError("boundary needs subsets of size at least 2")
    target = c.ground.without(j)
    out: dict[KSubset, Fraction] = {}
    bit = mask_of((j,))
    for J, w in c.coeffs.items():
        if J.mask & bit:
            t = KSubset(target, J.mask & ~bit)
            out[t] = out.get(t, Fraction(0)) + w
    return LVector(target, c.size - 1, out, boundary_beta(c.frozen, j))


def _check_face(ground: CyclicGround, size: int, L: Iterable[int]) -> tuple[int, ...]:
    L = tuple(sorted(set(L)))
    if len(L) != size - 2:
        raise ArityError(f"|L| must be k-2 = {size - 2}, got {len(L)}")
    for x in L:
        if x not in ground:
            raise PreconditionError(f"label {x} is not in {ground!r}")
    return L


def nonfrozen_pairs(ground: CyclicGround) -> list[KSubset]:
    return [s for s in ground.subsets(2) if not is_frozen(s)]


def pi_coefficients(c: LVector, L: Iterable[int]) -> dict[KSubset, Fraction]:
    """Coefficient of every nonfrozen ``beta_{l_i l_j}`` in ``boundary_L(sum c_J L_J)``.

    ``-(c_{L l_i l_j} - c_{L l_i l_{j+1}} - c_{L l_{i+1} l_j} + c_{L l_{i+1} l_{j+1}})``
    with ``i + 1`` and ``j + 1`` taken cyclically in ``[n] \\ L``.
    """
    L = _check_face(c.ground, c.size, L)
    face = c.ground
    for x in L:
        face = face.without(x)
    base = mask_of(L)
    out = {}
    for pair in nonfrozen_pairs(face):
        a, b = pair.members

        def cv(x, y):
            return c.coeff(KSubset(c.ground, base | mask_of((x, y))))

        a1, b1 = face.successor(a), face.successor(b)
        out[pair] = -(cv(a, b) - cv(a, b1) - cv(a1, b) + cv(a1, b1))
    return out


def pi_coefficients_operator(c: LVector, L: Iterable[int]) -> dict[KSubset, Fraction]:
    """Same quantity as ``pi_coefficients``, by iterating ``boundary_L`` and expanding."""
    L = _check_face(c.ground, c.size, L)
    d = LVector(c.ground, c.size, c.coeffs)
    for x in L:
        d = boundary_L(d, x)
    arr = L_to_beta(d)
    return {pair: arr.weight(pair) for pair in nonfrozen_pairs(d.ground)}


def supp_L(arr: BladeArrangement, L: Iterable[int]) -> dict[KSubset, Fraction]:
    """Nonfrozen pairs with nonzero aggregated weight in the image of ``arr`` on the face ``L``."""
    if arr.level:
        raise PreconditionError("supp_L takes a top-level arrangement")
    L = _check_face(arr.ground, arr.size, L)
    image = reduce_frozen(boundary_multi(arr, L))
    return dict(image.terms)


def blade_terms(arr: BladeArrangement) -> Iterator[tuple[KSubset, Fraction]]:
    yield from arr.sorted_terms()
