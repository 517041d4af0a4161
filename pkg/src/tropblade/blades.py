"""Positive expressions, the step distance, the tropical function ``h`` and blade cells.

Vectors are indexed by the ground's elements in cyclic order, so on ``[n]``
position ``i`` is label ``i``. Subdivisions are recorded by the hypersimplex
vertices each cell contains.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from . import exact, kernels
from .cyclic import CyclicGround, KSubset, cyclic_runs, is_frozen
from .errors import PreconditionError, SizeError


@dataclass(frozen=True)
class PositiveExpression:
    """``x = sum_j t_j (e_j - e_{j+1})`` with nonnegative ``t`` and ``min t = 0``.

    ``support`` holds 1-based positions with ``t_j > 0``.
    """

    t: tuple[int, ...]
    support: frozenset[int]

    @property
    def total(self) -> int:
        return sum(self.t)

    def reconstruct(self) -> tuple[int, ...]:
        m = len(self.t)
        return tuple(self.t[i] - self.t[i - 1] for i in range(m))


def positive_expression(x: Sequence[int]) -> PositiveExpression:
    if sum(x) != 0:
        raise SizeError(f"coordinates of {tuple(x)} do not sum to zero")
    prefix = []
    s = 0
    for v in x:
        s += v
        prefix.append(s)
    low = min(prefix) if prefix else 0
    t = tuple(p - low for p in prefix)
    return PositiveExpression(t, frozenset(i + 1 for i, v in enumerate(t) if v))


def indicator(J: KSubset) -> tuple[int, ...]:
    """``e_J`` as a vector over the ground elements."""
    return tuple(1 if e in J else 0 for e in J.ground.elements)


def _check_pair(J: KSubset, I: KSubset) -> None:
    if len(I) != len(J) or I.ground != J.ground:
        raise SizeError(f"{J!r} and {I!r} are not k-subsets of the same ground")


def distance(J: KSubset, I: KSubset) -> int:
    """Steps from ``e_J`` to ``e_I`` along ``e_j - e_{j+1}``."""
    _check_pair(J, I)
    return kernels.distance(J.mask, I.mask, J.n, J.ground.mask)


def support(K: KSubset, J: KSubset) -> frozenset[int]:
    """Labels ``j`` with ``t_j > 0`` in the positive expression of ``e_K - e_J``."""
    _check_pair(K, J)
    x = [a - b for a, b in zip(indicator(K), indicator(J))]
    els = K.ground.elements
    return frozenset(els[p - 1] for p in positive_expression(x).support)


def linear_form(y: Sequence[int], i: int) -> int:
    """``sum_m m * y_{i+m}`` with positions taken cyclically (1-based ``i``)."""
    m = len(y)
    return sum(step * y[(i - 1 + step) % m] for step in range(m))


def h_eval(x: Sequence[int], J: KSubset) -> int:
    """``h(x - e_J)``: the minimum of the ``n`` cyclic linear forms."""
    eJ = indicator(J)
    if len(x) != len(eJ):
        raise SizeError(f"point has {len(x)} coordinates, ground has {len(eJ)}")
    y = [a - b for a, b in zip(x, eJ)]
    if sum(y) != 0:
        raise SizeError("x - e_J must have coordinate sum zero")
    return min(linear_form(y, i) for i in range(1, len(y) + 1))


@dataclass(frozen=True)
class DecoratedOSP:
    """Blocks ``S_1, ..., S_l`` with weights ``s_i``; ``S_1`` holds the smallest ground label."""

    blocks: tuple[tuple[int, ...], ...]
    weights: tuple[int, ...]
    trivial: bool = False

    def __str__(self) -> str:
        parts = ["(" + "".join(map(str, sorted(b))) + f")_{w}" for b, w in zip(self.blocks, self.weights)]
        return "(" + ",".join(parts) + ")"


def osp_of(J: KSubset) -> DecoratedOSP:
    """Interlace ``J``'s cyclic intervals with the complement intervals preceding them."""
    ground = J.ground
    if is_frozen(J):
        return DecoratedOSP((ground.elements,), (len(J),), trivial=True)
    blocks = []
    weights = []
    for run in cyclic_runs(J):
        gap = []
        p = ground.predecessor(run[0])
        while p not in J:
            gap.append(p)
            p = ground.predecessor(p)
        blocks.append(tuple(reversed(gap)) + run)
        weights.append(len(run))
    first = ground.elements[0]
    r = next(i for i, b in enumerate(blocks) if first in b)
    blocks = blocks[r:] + blocks[:r]
    weights = weights[r:] + weights[:r]
    return DecoratedOSP(tuple(blocks), tuple(weights))


def _in_cell(I: KSubset, osp: DecoratedOSP, r: int) -> bool:
    l = len(osp.blocks)
    acc = 0
    need = 0
    for step in range(l - 1):
        idx = (r + step) % l
        acc += sum(1 for e in osp.blocks[idx] if e in I)
        need += osp.weights[idx]
        if acc < need:
            return False
    return True


def multisplit_cells(J: KSubset) -> list[frozenset[KSubset]]:
    """Vertex sets of the ``l`` maximal cells cut out by the blade at ``e_J``."""
    osp = osp_of(J)
    if osp.trivial:
        raise PreconditionError(f"{J} is frozen; its blade does not split the hypersimplex")
    vertices = J.ground.subsets(len(J))
    return [
        frozenset(I for I in vertices if _in_cell(I, osp, r)) for r in range(len(osp.blocks))
    ]


def affine_dimension(points: Sequence[KSubset]) -> int:
    pts = list(points)
    if not pts:
        return -1
    base = indicator(pts[0])
    rows = [[a - b for a, b in zip(indicator(p), base)] for p in pts[1:]]
    return exact.rank(rows) if rows else 0


def refinement_signature(blades: Sequence[KSubset], ground: CyclicGround | None = None, k: int | None = None) -> dict[tuple[int, ...], frozenset[KSubset]]:
    """Full-dimensional cells of the common refinement, keyed by the chosen cell of each blade.

    This is a vertex-level encoding: a cell is the set of hypersimplex
    vertices lying in one cell of every blade.
    """
    blades = list(blades)
    if blades:
        ground = blades[0].ground
        k = len(blades[0])
    if ground is None or k is None:
        raise PreconditionError("an empty blade list needs an explicit ground and k")
    vertices = frozenset(ground.subsets(k))
    if not blades:
        return {(): vertices}
    full = len(ground) - 1
    cells = [multisplit_cells(b) for b in blades]
    out: dict[tuple[int, ...], frozenset[KSubset]] = {}
    for choice in product(*(range(len(c)) for c in cells)):
        group = vertices
        for cs, r in zip(cells, choice):
            group = group & cs[r]
            if not group:
                break
        if group and affine_dimension(sorted(group, key=lambda s: s.mask)) == full:
            out[choice] = group
    return out
