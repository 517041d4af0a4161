# cython: language_level=3
"""Compiled bitmask kernels; same API and results as ``_pykernels``."""

from libc.stdlib cimport free, malloc

BACKEND = "cython"

ctypedef unsigned long long u64


cdef inline bint _ws(u64 a, u64 b, int n) noexcept nogil:
    cdef u64 x = a & ~b
    cdef u64 y = b & ~a
    cdef int i, side, first = -1, last = -1, changes = 0
    cdef u64 bit
    if x == 0 or y == 0:
        return True
    for i in range(n):
        bit = (<u64>1) << i
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


def weakly_separated(a, b, int n):
    return _ws(<u64>a, <u64>b, n)


def first_bad_pair(masks, int n):
    cdef Py_ssize_t m = len(masks)
    cdef Py_ssize_t i, j
    cdef u64[::1] buf
    if m < 2:
        return None
    import array
    arr = array.array("Q", masks)
    buf = arr
    for i in range(m):
        for j in range(i + 1, m):
            if not _ws(buf[i], buf[j], n):
                return (i, j)
    return None


def compatible(mask, masks, int n):
    cdef u64 a = <u64>mask
    for other in masks:
        if not _ws(a, <u64>other, n):
            return False
    return True


def greedy_extend(start, candidates, int n):
    cdef Py_ssize_t cap = len(start) + len(candidates)
    cdef u64* kept = <u64*>malloc(max(cap, 1) * sizeof(u64))
    cdef Py_ssize_t i, size = 0
    cdef u64 c
    cdef bint ok
    if kept == NULL:
        raise MemoryError()
    present = set()
    try:
        for v in start:
            kept[size] = <u64>v
            size += 1
            present.add(v)
        for cand in candidates:
            if cand in present:
                continue
            c = <u64>cand
            ok = True
            for i in range(size):
                if not _ws(c, kept[i], n):
                    ok = False
                    break
            if ok:
                kept[size] = c
                size += 1
                present.add(cand)
        return [int(kept[i]) for i in range(size)]
    finally:
        free(kept)


def distance(src, dst, int n, ground):
    cdef u64 s_ = <u64>src
    cdef u64 d_ = <u64>dst
    cdef u64 g = <u64>ground
    cdef long s = 0, total = 0, low = 0, size = 0
    cdef int i
    cdef u64 bit
    for i in range(n):
        bit = (<u64>1) << i
        if not g & bit:
            continue
        size += 1
        if d_ & bit:
            s += 1
        if s_ & bit:
            s -= 1
        total += s
        if s < low:
            low = s
    return total - size * low
