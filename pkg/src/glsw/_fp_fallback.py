"""Pure-Python versions of the prime-field kernels in ``glsw._fpcore``.

Same flat row-major calling convention; used when the compiled extension is
not available (or when GLSW_PURE=1 forces it).
"""


def rref(a, nrows, ncols, p):
    """Row-reduce ``a`` in place (deterministic first-nonzero pivoting)."""
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv_row = -1
        for i in range(r, nrows):
            if a[i * ncols + c] % p:
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
        inv = pow(a[r * ncols + c], -1, p)
        for j in range(c, ncols):
            a[r * ncols + j] = a[r * ncols + j] * inv % p
        for i in range(nrows):
            if i == r:
                continue
            factor = a[i * ncols + c]
            if not factor:
                continue
            for j in range(c, ncols):
                a[i * ncols + j] = (a[i * ncols + j] - factor * a[r * ncols + j]) % p
        pivots.append(c)
        r += 1
    return pivots


def matmul(a, b, n, k, m, p):
    out = [0] * (n * m)
    for i in range(n):
        row = a[i * k : (i + 1) * k]
        for j in range(m):
            out[i * m + j] = sum(row[t] * b[t * m + j] for t in range(k)) % p
    return out
