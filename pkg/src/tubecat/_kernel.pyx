# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernel: hot counting routines for the rank-n tube.

Mirrors tubecat._kernel_py; see that module for the conventions.
"""

from libc.stdlib cimport free, malloc

BACKEND = "cython"


cdef inline long _hom(long n, long a, long b, long c, long d) noexcept:
    # // and % keep Python floor semantics (cdivision is off)
    cdef long lo = b - d
    if lo < 0:
        lo = 0
    cdef long hi = b - 1
    cdef long r = (c - a) % n
    return (hi - r) // n - (lo - 1 - r) // n


cdef inline long _ext1(long n, long a, long b, long c, long d) noexcept:
    # total Hom from (c, d) to the translate of (a, b)
    return _hom(n, c, d, a - 1, b) + _hom(n, a - 1, b, c - 2, d)


def hom_tube_dim(long n, long a, long b, long c, long d):
    """dim Hom between (a, b) and (c, d) in the tube of rank n.

    Counts integers k with max(0, b - d) <= k <= b - 1 and
    k == c - a (mod n).
    """
    return _hom(n, a, b, c, d)


def cluster_dims(long n, long a, long b, long c, long d):
    """(tube part, shifted part) of the cluster-category Hom from (a,b) to (c,d)."""
    return _hom(n, a, b, c, d), _hom(n, c, d, a - 2, b)


def ext1_dim(long n, long a, long b, long c, long d):
    """dim Ext^1 between (a, b) and (c, d); symmetric in its arguments."""
    return _ext1(n, a, b, c, d)


def pair_compatible(long n, long a, long b, long c, long d):
    return _ext1(n, a, b, c, d) == 0 and _ext1(n, c, d, a, b) == 0


def rigid_index(long n, long a, long b):
    """Index of the rigid indecomposable (a, b), b <= n - 1, in the fixed order."""
    return (a - 1) * (n - 1) + (b - 1)


def rigid_coords(long n, long idx):
    return idx // (n - 1) + 1, idx % (n - 1) + 1


def compat_masks(long n):
    """Compatibility bitmasks over the n*(n-1) rigid indecomposables.

    Bit j of masks[i] is set iff the rigid objects with indices i and j are
    distinct and compatible.
    """
    cdef long m = n * (n - 1)
    cdef long i, j, a, b, c, d
    masks = [0] * m
    for i in range(m):
        a = i // (n - 1) + 1
        b = i % (n - 1) + 1
        for j in range(i + 1, m):
            c = j // (n - 1) + 1
            d = j % (n - 1) + 1
            if _ext1(n, a, b, c, d) == 0 and _ext1(n, c, d, a, b) == 0:
                masks[i] = masks[i] | (1 << j)
                masks[j] = masks[j] | (1 << i)
    return masks


cdef inline long _popcount(unsigned long long x) noexcept:
    cdef long c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef void _extend(long start, unsigned long long allowed, long depth,
                  long size, long m, unsigned long long* cmasks,
                  long* chosen, list out):
    cdef long i
    if depth == size:
        out.append(tuple([chosen[k] for k in range(size)]))
        return
    for i in range(start, m):
        if _popcount(allowed >> i) < size - depth:
            return
        if allowed & (<unsigned long long> 1 << i):
            chosen[depth] = i
            _extend(i + 1, allowed & cmasks[i], depth + 1, size, m,
                    cmasks, chosen, out)


def compatible_subsets(masks, long size):
    """All pairwise-compatible index subsets of the given size, sorted.

    Equivalent to filtering every ``size``-subset by pairwise compatibility;
    branches whose remaining candidates cannot reach ``size`` members are
    skipped. Limited to 64 candidates (rank <= 8); larger inputs go through
    the pure-Python fallback.
    """
    cdef long m = len(masks)
    if m == 0:
        return [()] if size == 0 else []
    if m > 64 or size > 64 or size < 0:
        from tubecat import _kernel_py
        return _kernel_py.compatible_subsets(masks, size)
    cdef unsigned long long* cmasks = <unsigned long long*> malloc(
        m * sizeof(unsigned long long))
    cdef long* chosen = <long*> malloc((size + 1) * sizeof(long))
    if cmasks == NULL or chosen == NULL:
        free(cmasks)
        free(chosen)
        raise MemoryError()
    cdef long i
    for i in range(m):
        cmasks[i] = <unsigned long long> masks[i]
    out = []
    try:
        _extend(0, ~(<unsigned long long> 0) >> (64 - m), 0, size, m,
                cmasks, chosen, out)
    finally:
        free(cmasks)
        free(chosen)
    return out
