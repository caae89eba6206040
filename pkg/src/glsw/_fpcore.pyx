# cython: boundscheck=False, wraparound=False, cdivision=True
"""Dense linear algebra kernels over prime fields F_p with p < 2**31.

All routines receive matrices as flat Python lists of ints in [0, p) in
row-major order and mutate them in place where documented.  Keeping the
interface identical to glsw._fp_fallback lets the package swap the two
implementations at import time.
"""

from cpython.list cimport PyList_GET_ITEM, PyList_SET_ITEM


def rref(list a, int nrows, int ncols, long long p):
    """Row-reduce ``a`` (flat row-major, in place). Returns the pivot columns.

    Pivoting is deterministic: for each column the first row with a nonzero
    entry is chosen, so repeated runs produce identical echelon forms.
    """
    cdef int i, j, r, c, piv_row
    cdef long long inv, factor, v
    cdef list pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv_row = -1
        for i in range(r, nrows):
            if <long long> a[i * ncols + c] != 0:
                piv_row = i
                break
        if piv_row < 0:
            continue
        if piv_row != r:
            for j in range(ncols):
                a[r * ncols + j], a[piv_row * ncols + j] = (
                    a[piv_row * ncols + j],
                    a[r * ncols + j],
                )
        inv = _inverse(<long long> a[r * ncols + c], p)
        for j in range(c, ncols):
            a[r * ncols + j] = (<long long> a[r * ncols + j] * inv) % p
        for i in range(nrows):
            if i == r:
                continue
            factor = <long long> a[i * ncols + c]
            if factor == 0:
                continue
            for j in range(c, ncols):
                v = (<long long> a[i * ncols + j]
                     - factor * <long long> a[r * ncols + j]) % p
                if v < 0:
                    v += p
                a[i * ncols + j] = v
        pivots.append(c)
        r += 1
    return pivots


def matmul(list a, list b, int n, int k, int m, long long p):
    """Product of an n-by-k and a k-by-m flat matrix; returns a new flat list."""
    cdef int i, j, t
    cdef long long acc
    cdef list out = [0] * (n * m)
    for i in range(n):
        for j in range(m):
            acc = 0
            for t in range(k):
                acc += <long long> a[i * k + t] * <long long> b[t * m + j]
                # both factors are < 2**31 so each product fits in 63 bits;
                # reduce eagerly to keep the accumulator in range
                if acc >= 0x4000000000000000:
                    acc %= p
            out[i * m + j] = acc % p
    return out


cdef long long _inverse(long long x, long long p):
    cdef long long t = 0, newt = 1, r = p, newr = x % p, q, tmp
    while newr != 0:
        q = r / newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t
