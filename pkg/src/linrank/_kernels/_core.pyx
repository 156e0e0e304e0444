# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels over 64-bit vertex masks (graphs with at most 64 vertices)."""

from libc.stdlib cimport malloc, free
from libc.string cimport memset

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_clzll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil


cdef inline int _top(u64 x) nogil:
    return 63 - __builtin_clzll(x)


cdef inline int _low(u64 x) nogil:
    return __builtin_ctzll(x)


cdef inline int _rank(u64* rows, int count) nogil:
    cdef u64 piv[64]
    cdef int i, t, r = 0
    cdef u64 x
    memset(piv, 0, sizeof(piv))
    for i in range(count):
        x = rows[i]
        while x:
            t = _top(x)
            if piv[t] == 0:
                piv[t] = x
                r += 1
                break
            x ^= piv[t]
    return r


def rank_rows(rows):
    cdef int count = len(rows)
    cdef u64 buf[64]
    cdef u64* data
    cdef int i, r
    for row in rows:
        if row < 0 or row >> 64:
            from ._pure import rank_rows as _slow
            return _slow(rows)
    if count <= 64:
        for i in range(count):
            buf[i] = rows[i]
        return _rank(buf, count)
    data = <u64*> malloc(count * sizeof(u64))
    try:
        for i in range(count):
            data[i] = rows[i]
        r = _rank(data, count)
    finally:
        free(data)
    return r


def cut_rank_table(adj, int n):
    if n > 30:
        raise ValueError("cut-rank table limited to 30 vertices")
    cdef u64 a[64]
    cdef u64 rows[64]
    cdef u64 size = (<u64> 1) << n
    cdef u64 full = size - 1
    cdef u64 s, comp, x
    cdef int k, v
    for v in range(n):
        a[v] = adj[v]
    table = bytearray(size)
    cdef unsigned char[::1] t = table
    with nogil:
        for s in range(size):
            comp = full ^ s
            if comp < s:
                t[s] = t[comp]
                continue
            k = 0
            x = s
            while x:
                v = _low(x)
                x &= x - 1
                rows[k] = a[v] & comp
                k += 1
            t[s] = <unsigned char> _rank(rows, k)
    return table


def prefix_width_table(ranks, int n):
    cdef u64 size = (<u64> 1) << n
    cdef u64 s, x, low
    cdef unsigned char lowest, b, r
    cdef const unsigned char[::1] rk = ranks
    best = bytearray(size)
    cdef unsigned char[::1] bt = best
    with nogil:
        for s in range(1, size):
            lowest = 255
            x = s
            while x:
                low = x & (~x + 1)
                b = bt[s ^ low]
                if b < lowest:
                    lowest = b
                x ^= low
            r = rk[s]
            bt[s] = r if r > lowest else lowest
    return best


cdef inline bint _connected(u64* a, u64 mask) nogil:
    cdef u64 low = mask & (~mask + 1)
    cdef u64 seen = low, frontier = low, new
    cdef int v
    while frontier:
        v = _low(frontier)
        frontier &= frontier - 1
        new = a[v] & mask & ~seen
        seen |= new
        frontier |= new
    return seen == mask


def first_uncentered(adj, colors, int q):
    cdef int n = len(adj)
    if n > 30:
        raise ValueError("centeredness check limited to 30 vertices")
    cdef u64 a[64]
    cdef int col[64]
    cdef int counts[65]
    cdef int v, c, distinct, maxc = 0
    cdef bint unique
    cdef u64 mask, x, size = (<u64> 1) << n
    cdef long long found = -1
    for v in range(n):
        a[v] = adj[v]
        col[v] = colors[v]
        if col[v] > maxc:
            maxc = col[v]
        if col[v] < 0 or col[v] > 64:
            from ._pure import first_uncentered as _slow
            return _slow(adj, colors, q)
    with nogil:
        for mask in range(1, size):
            if not _connected(a, mask):
                continue
            memset(counts, 0, sizeof(counts))
            distinct = 0
            x = mask
            while x:
                v = _low(x)
                x &= x - 1
                c = col[v]
                if counts[c] == 0:
                    distinct += 1
                counts[c] += 1
            if distinct >= q:
                continue
            unique = False
            for c in range(maxc + 1):
                if counts[c] == 1:
                    unique = True
                    break
            if unique:
                continue
            found = <long long> mask
            break
    return found


def first_ramsey_refutation(copies, int nverts, int m):
    if nverts > 63:
        raise ValueError("Ramsey enumeration limited to 63 vertices")
    cdef int ncopies = len(copies)
    cdef u64* cp = <u64*> malloc((ncopies + 1) * sizeof(u64))
    cdef int* lo = <int*> malloc((ncopies + 1) * sizeof(int))
    cdef int digits[64]
    cdef u64 classes[64]
    cdef u64 full = ((<u64> 1) << nverts) - 1
    cdef u64 counter = 0, total = 1
    cdef int i, j, old, new
    cdef bint hit
    cdef long long found = -1
    if m < 1 or m > 64:
        raise ValueError("number of colors must lie in 1..64")
    for i in range(nverts):
        total *= m
    try:
        for i in range(ncopies):
            cp[i] = copies[i]
            lo[i] = _low(cp[i])
        memset(digits, 0, sizeof(digits))
        memset(classes, 0, sizeof(classes))
        classes[0] = full
        with nogil:
            while counter < total:
                hit = False
                for j in range(ncopies):
                    if (cp[j] & ~classes[digits[lo[j]]]) == 0:
                        hit = True
                        break
                if not hit:
                    found = <long long> counter
                    break
                i = 0
                while i < nverts:
                    old = digits[i]
                    classes[old] &= ~((<u64> 1) << i)
                    new = old + 1
                    if new == m:
                        new = 0
                    digits[i] = new
                    classes[new] |= (<u64> 1) << i
                    if new:
                        break
                    i += 1
                counter += 1
    finally:
        free(cp)
        free(lo)
    return found
