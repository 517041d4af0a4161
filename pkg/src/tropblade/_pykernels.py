"""Pure-Python bitmask kernels.

Subsets of a cyclically ordered ground set are encoded as integers: label
``i`` is bit ``i - 1``. Every function here mirrors one in ``_ckernels.pyx``
and must return identical results.
"""

from __future__ import annotations

from typing import Sequence

BACKEND = "python"


def weakly_separated(a: int, b: int, n: int) -> bool:
    """Run-count test: the cyclic word of ``a ^ b`` has at most two runs."""
    x = a & ~b
    y = b & ~a
    if not x or not y:
        return True
    first = -1
    last = -1
    changes = 0
    for i in range(n):
        bit = 1 << i
        if x & bit:
            side = 0
        elif y & bit:
            side = 1
        else:
            continue
        if last == -1:
            first = side
        elif side != last:
            changes += 1
        last = side
    if last != first:
        changes += 1
    return changes <= 2


def first_bad_pair(masks: Sequence[int], n: int) -> tuple[int, int] | None:
    """Indices of the first pair that is not weakly separated, or None."""
    m = len(masks)
    for i in range(m):
        a = masks[i]
        for j in range(i + 1, m):
            if not weakly_separated(a, masks[j], n):
                return i, j
    return None


def compatible(mask: int, masks: Sequence[int], n: int) -> bool:
    """True when ``mask`` is weakly separated from every member of ``masks``."""
    for other in masks:
        if not weakly_separated(mask, other, n):
            return False
    return True


def greedy_extend(start: Sequence[int], candidates: Sequence[int], n: int) -> list[int]:
    """Append each candidate (in order) that is compatible with everything kept so far."""
    kept = list(start)
    present = set(kept)
    for c in candidates:
        if c in present:
            continue
        if compatible(c, kept, n):
            kept.append(c)
            present.add(c)
    return kept


def distance(src: int, dst: int, n: int, ground: int) -> int:
    """Step distance from ``e_src`` to ``e_dst`` along ``e_j - e_{j+1}`` on the ground mask."""
    s = 0
    total = 0
    low = 0
    size = 0
    for i in range(n):
        bit = 1 << i
        if not ground & bit:
            continue
        size += 1
        if dst & bit:
            s += 1
        if src & bit:
            s -= 1
        total += s
        if s < low:
            low = s
    return total - size * low
