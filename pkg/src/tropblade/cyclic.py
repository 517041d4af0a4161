"""Cyclically ordered ground sets, k-subsets and the subset boundary maps.

Labels keep their original names in ``[n]`` after removals; a ground
``[n] \\ L`` inherits its cyclic order from ``[n]``. Subsets are stored as
bitmasks (label ``i`` is bit ``i - 1``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from .errors import DegenerateInputError, LabelError, SizeError


def mask_of(labels: Iterable[int]) -> int:
    m = 0
    for x in labels:
        m |= 1 << (x - 1)
    return m


@lru_cache(maxsize=None)
def labels_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def format_labels(labels: Iterable[int]) -> str:
    """Compact ``135`` notation when every label is a digit, else comma-joined."""
    labels = tuple(labels)
    if all(0 < x < 10 for x in labels):
        return "".join(map(str, labels))
    return ",".join(map(str, labels))


@dataclass(frozen=True)
class CyclicGround:
    """``[n]`` minus the labels in ``removed_mask``, cyclically ordered."""

    n: int
    removed_mask: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise DegenerateInputError(f"ground size must be positive, got {self.n}")
        if self.removed_mask >> self.n:
            raise LabelError(f"removed labels {labels_of(self.removed_mask)} exceed n={self.n}")

    @classmethod
    def of(cls, n: int, removed: Iterable[int] = ()) -> "CyclicGround":
        return cls(n, mask_of(removed))

    @property
    def removed(self) -> frozenset[int]:
        return frozenset(labels_of(self.removed_mask))

    @property
    def mask(self) -> int:
        return ((1 << self.n) - 1) & ~self.removed_mask

    @property
    def elements(self) -> tuple[int, ...]:
        return labels_of(self.mask)

    def __len__(self) -> int:
        return self.n - self.removed_mask.bit_count()

    def __contains__(self, label: int) -> bool:
        return 1 <= label <= self.n and not (self.removed_mask >> (label - 1)) & 1

    def require_cyclic(self) -> None:
        if len(self) < 3:
            raise DegenerateInputError(f"ground {self.elements} has fewer than 3 elements")

    def without(self, label: int) -> "CyclicGround":
        if label not in self:
            raise LabelError(f"label {label} is not in ground {self.elements}")
        return CyclicGround(self.n, self.removed_mask | (1 << (label - 1)))

    def subsets(self, k: int) -> list["KSubset"]:
        """All k-subsets in colexicographic order (increasing bitmask)."""
        out = [KSubset(self, mask_of(c)) for c in combinations(self.elements, k)]
        out.sort(key=lambda s: s.mask)
        return out

    def successor(self, label: int) -> int:
        els = self.elements
        return els[(els.index(label) + 1) % len(els)]

    def predecessor(self, label: int) -> int:
        els = self.elements
        return els[(els.index(label) - 1) % len(els)]

    def __repr__(self) -> str:
        if not self.removed_mask:
            return f"[{self.n}]"
        return f"[{self.n}]\\{{{format_labels(labels_of(self.removed_mask))}}}"


@dataclass(frozen=True)
class KSubset:
    """A nonempty subset of a cyclic ground."""

    ground: CyclicGround
    mask: int

    def __post_init__(self):
        if self.mask & ~self.ground.mask:
            raise LabelError(f"labels {labels_of(self.mask)} not all in ground {self.ground!r}")

    @classmethod
    def of(cls, labels: Iterable[int], n: int | CyclicGround, removed: Iterable[int] = ()) -> "KSubset":
        ground = n if isinstance(n, CyclicGround) else CyclicGround.of(n, removed)
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            raise LabelError(f"repeated label in {labels}")
        return cls(ground, mask_of(labels))

    @property
    def members(self) -> tuple[int, ...]:
        return labels_of(self.mask)

    @property
    def n(self) -> int:
        return self.ground.n

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(labels_of(self.mask))

    def __contains__(self, label: int) -> bool:
        return 1 <= label <= self.ground.n and bool((self.mask >> (label - 1)) & 1)

    def __str__(self) -> str:
        return format_labels(self.members)

    def __repr__(self) -> str:
        if self.ground.removed_mask:
            return f"KSubset({self}, {self.ground!r})"
        return f"KSubset({self})"

    def with_mask(self, mask: int) -> "KSubset":
        return KSubset(self.ground, mask)


def parse_labels(text: str) -> tuple[int, ...]:
    """``"135"`` -> (1, 3, 5); ``"1,10,11"`` or ``"[1,10]"`` -> (1, 10, 11)."""
    text = text.strip().strip("[]{}() ")
    if "," in text or " " in text:
        return tuple(int(t) for t in text.replace(",", " ").split())
    return tuple(int(ch) for ch in text)


def cyclic_runs(subset: KSubset) -> list[tuple[int, ...]]:
    """Maximal cyclic intervals of ``subset`` in its ground, ordered by first label.

    A full-ground subset is returned as a single run starting at the smallest label.
    """
    els = subset.ground.elements
    m = len(els)
    inside = [e in subset for e in els]
    if all(inside):
        return [els]
    runs = []
    for i in range(m):
        if inside[i] and not inside[i - 1]:
            run = []
            p = i
            while inside[p % m]:
                run.append(els[p % m])
                p += 1
            runs.append(tuple(run))
    return runs


def initial_points(subset: KSubset) -> tuple[int, ...]:
    return tuple(run[0] for run in cyclic_runs(subset))


def end_points(subset: KSubset) -> tuple[int, ...]:
    return tuple(run[-1] for run in cyclic_runs(subset))


def is_frozen(J: KSubset) -> bool:
    """True iff ``J`` is a single cyclic interval of its ground."""
    if len(J) == 0:
        raise DegenerateInputError("empty subset")
    if J.mask == J.ground.mask:
        raise DegenerateInputError(f"{J} is the whole ground")
    return len(cyclic_runs(J)) == 1


def cyclic_rank(label: int, start: int, n: int) -> int:
    """Position of ``label`` in the linear order ``start <_start start+1 <_start ... <_start start-1``."""
    return (label - start) % n


def min_elements(S: Iterable[int], i: int, l: int, n: int) -> frozenset[int]:
    """The ``l`` smallest elements of ``S`` under ``<_i`` on ``[n]``."""
    S = tuple(S)
    if l > len(S):
        raise SizeError(f"cannot take {l} elements from a set of size {len(S)}")
    if not 1 <= i <= n:
        raise LabelError(f"label {i} not in [{n}]")
    return frozenset(sorted(S, key=lambda x: cyclic_rank(x, i, n))[:l])


def drop_successor(mask: int, j: int, n: int) -> int:
    """Remove from ``mask`` its first element at or cyclically after ``j``.

    Label-level form of the boundary map; the empty set maps to itself.
    """
    if not mask:
        return 0
    for step in range(n):
        label = (j - 1 + step) % n + 1
        bit = 1 << (label - 1)
        if mask & bit:
            return mask & ~bit
    raise AssertionError("unreachable")


def boundary_subset(J: KSubset, j: int) -> KSubset:
    """``J`` restricted to the facet ``x_j = 1``: drop the first member at or after ``j``."""
    if j not in J.ground:
        raise LabelError(f"label {j} is not in ground {J.ground!r}")
    if len(J) < 2:
        raise SizeError(f"boundary of {J} needs at least two members")
    return KSubset(J.ground.without(j), drop_successor(J.mask, j, J.n))


def boundary_subset_multi(J: KSubset, L: Iterable[int]) -> KSubset:
    """Compose ``boundary_subset`` over ``L``; the result does not depend on the order."""
    L = sorted(set(L))
    if len(L) > len(J) - 1:
        raise SizeError(f"|L|={len(L)} exceeds |J|-1={len(J) - 1}")
    out = J
    for j in L:
        out = boundary_subset(out, j)
    return out
