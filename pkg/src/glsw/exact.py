"""Exact dense linear algebra over the rationals and prime fields.

Matrices are immutable-by-convention ``Mat`` objects carrying a field tag:
``p=None`` means rational entries (``fractions.Fraction``), ``p`` a prime
< 2**31 means residues in [0, p).  Everything downstream (Hom spaces,
presentations, submodule lattices) funnels through the handful of operations
here, so determinism matters: pivoting is always "first nonzero in column
order" and no randomization happens at this layer.
"""

from __future__ import annotations

import math
from fractions import Fraction

from glsw import fpkernel

MAX_PRIME = 2**31


def _check_prime(p):
    if p is not None:
        if p < 2 or p >= MAX_PRIME:
            raise ValueError(f"modulus {p} out of range")
        if any(p % q == 0 for q in range(2, min(p, 1 + math.isqrt(p)))):
            raise ValueError(f"modulus {p} is not prime")


class Mat:
    """Dense matrix over Q (p=None) or F_p."""

    __slots__ = ("rows", "cols", "data", "p")

    def __init__(self, rows, cols, data, p=None):
        if len(data) != rows * cols:
            raise ValueError("data length does not match shape")
        self.rows = rows
        self.cols = cols
        self.data = data
        self.p = p

    @classmethod
    def from_rows(cls, rowlist, p=None):
        rows = len(rowlist)
        cols = len(rowlist[0]) if rows else 0
        flat = []
        for r in rowlist:
            if len(r) != cols:
                raise ValueError("ragged rows")
            flat.extend(r)
        if p is None:
            flat = [Fraction(x) for x in flat]
        else:
            flat = [int(x) % p for x in flat]
        return cls(rows, cols, flat, p)

    @classmethod
    def zero(cls, rows, cols, p=None):
        z = 0 if p is not None else Fraction(0)
        return cls(rows, cols, [z] * (rows * cols), p)

    @classmethod
    def identity(cls, n, p=None):
        m = cls.zero(n, n, p)
        one = 1 if p is not None else Fraction(1)
        for i in range(n):
            m.data[i * n + i] = one
        return m

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i * self.cols + j]

    def row(self, i):
        return self.data[i * self.cols : (i + 1) * self.cols]

    def rowlist(self):
        return [self.row(i) for i in range(self.rows)]

    def copy(self):
        return Mat(self.rows, self.cols, list(self.data), self.p)

    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and self.p == other.p
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.p, tuple(self.data)))

    def __repr__(self):
        return f"Mat({self.rowlist()!r}, p={self.p})"

    def _same_field(self, other):
        if self.p != other.p:
            raise ValueError("mixed fields")

    def __add__(self, other):
        self._same_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        data = [a + b for a, b in zip(self.data, other.data)]
        if self.p is not None:
            data = [x % self.p for x in data]
        return Mat(self.rows, self.cols, data, self.p)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, s):
        if self.p is not None:
            s = int(s) % self.p
            data = [x * s % self.p for x in self.data]
        else:
            s = Fraction(s)
            data = [x * s for x in self.data]
        return Mat(self.rows, self.cols, data, self.p)

    def __mul__(self, other):
        self._same_field(other)
        if self.cols != other.rows:
            raise ValueError("shape mismatch in product")
        if self.p is not None:
            data = fpkernel.matmul(
                self.data, other.data, self.rows, self.cols, other.cols, self.p
            )
            return Mat(self.rows, other.cols, data, self.p)
        n, k, m = self.rows, self.cols, other.cols
        data = [Fraction(0)] * (n * m)
        for i in range(n):
            base = i * k
            for t in range(k):
                a = self.data[base + t]
                if a:
                    rowb = t * m
                    for j in range(m):
                        b = other.data[rowb + j]
                        if b:
                            data[i * m + j] += a * b
        return Mat(n, m, data, self.p)

    def matvec(self, v):
        if len(v) != self.cols:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.rows):
            row = self.row(i)
            s = sum(a * b for a, b in zip(row, v))
            out.append(s % self.p if self.p is not None else s)
        return out

    def transpose(self):
        data = [self.data[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)]
        return Mat(self.cols, self.rows, data, self.p)

    def power(self, k):
        if self.rows != self.cols:
            raise ValueError("power of non-square matrix")
        acc = Mat.identity(self.rows, self.p)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def hstack(self, other):
        self._same_field(other)
        if self.rows != other.rows:
            raise ValueError("row mismatch")
        data = []
        for i in range(self.rows):
            data.extend(self.row(i))
            data.extend(other.row(i))
        return Mat(self.rows, self.cols + other.cols, data, self.p)

    def vstack(self, other):
        self._same_field(other)
        if self.cols != other.cols:
            raise ValueError("column mismatch")
        return Mat(self.rows + other.rows, self.cols, self.data + other.data, self.p)

    def is_zero(self):
        return all(x == 0 for x in self.data)

    def to_fp(self, p):
        """Reduce a rational matrix mod p; fails if a denominator vanishes."""
        if self.p is not None:
            raise ValueError("already over a prime field")
        data = []
        for x in self.data:
            if x.denominator % p == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes mod {p}")
            data.append(x.numerator * pow(x.denominator, -1, p) % p)
        return Mat(self.rows, self.cols, data, p)


def rref(M):
    """Reduced row echelon form (copy) and pivot column list."""
    a = list(M.data)
    if M.p is not None:
        pivots = fpkernel.rref(a, M.rows, M.cols, M.p)
        return Mat(M.rows, M.cols, a, M.p), pivots
    nrows, ncols = M.rows, M.cols
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i * ncols + c]), None)
        if piv is None:
            continue
        if piv != r:
            for j in range(ncols):
                a[r * ncols + j], a[piv * ncols + j] = a[piv * ncols + j], a[r * ncols + j]
        inv = 1 / a[r * ncols + c]
        for j in range(c, ncols):
            a[r * ncols + j] *= inv
        for i in range(nrows):
            if i != r and a[i * ncols + c]:
                f = a[i * ncols + c]
                for j in range(c, ncols):
                    a[i * ncols + j] -= f * a[r * ncols + j]
        pivots.append(c)
        r += 1
    return Mat(nrows, ncols, a, None), pivots


def rank(M):
    if M.p is not None:
        a = list(M.data)
        return len(fpkernel.rref(a, M.rows, M.cols, M.p))
    return _bareiss_rank(M)


def _bareiss_rank(M):
    """Fraction-free (Bareiss) elimination rank for rational matrices."""
    if M.rows == 0 or M.cols == 0:
        return 0
    # clear denominators row by row; row scaling preserves rank
    a = []
    for i in range(M.rows):
        row = M.row(i)
        den = math.lcm(*(x.denominator for x in row)) if row else 1
        a.append([int(x * den) for x in row])
    nrows, ncols = M.rows, M.cols
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) // prev
            a[i][c] = 0
        prev = a[r][c]
        r += 1
    return r


def solve(M, b):
    """A particular solution x of Mx = b, or None when inconsistent."""
    if len(b) != M.rows:
        raise ValueError("dimension mismatch")
    if M.p is not None:
        b = [int(x) % M.p for x in b]
        bm = Mat(M.rows, 1, b, M.p)
    else:
        bm = Mat(M.rows, 1, [Fraction(x) for x in b], None)
    aug = M.hstack(bm)
    R, pivots = rref(aug)
    if M.cols in pivots:
        return None
    zero = 0 if M.p is not None else Fraction(0)
    x = [zero] * M.cols
    for r, c in enumerate(pivots):
        x[c] = R[r, M.cols]
    return x


def kernel_basis(M):
    """Basis of the right null space, each vector scaled so its first
    nonzero coordinate is 1."""
    R, pivots = rref(M)
    pivset = set(pivots)
    free = [c for c in range(M.cols) if c not in pivset]
    zero = 0 if M.p is not None else Fraction(0)
    one = 1 if M.p is not None else Fraction(1)
    basis = []
    for f in free:
        v = [zero] * M.cols
        v[f] = one
        for r, c in enumerate(pivots):
            if c < f:
                val = R[r, f]
                if val:
                    v[c] = (-val) % M.p if M.p is not None else -val
        basis.append(_normalize_first(v, M.p))
    return basis


def _normalize_first(v, p):
    lead = next((x for x in v if x != 0), None)
    if lead is None:
        return v
    if p is not None:
        inv = pow(lead, -1, p)
        return [x * inv % p for x in v]
    return [x / lead for x in v]


# ---------------------------------------------------------------------------
# polynomials (coefficient lists, ascending degree)


def poly_trim(f):
    while f and f[-1] == 0:
        f = f[:-1]
    return f


def poly_mul(f, g, p=None):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    if p is not None:
        out = [x % p for x in out]
    return poly_trim(out)


def poly_divmod(f, g, p=None):
    f = list(f)
    g = poly_trim(list(g))
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    dg = len(g) - 1
    lead = g[-1]
    inv = pow(lead, -1, p) if p is not None else 1 / Fraction(lead)
    q = [0] * max(0, len(f) - dg)
    while len(poly_trim(f)) - 1 >= dg and poly_trim(f):
        f = poly_trim(f)
        d = len(f) - 1 - dg
        c = f[-1] * inv
        if p is not None:
            c %= p
        q[d] = c
        for i, b in enumerate(g):
            f[d + i] -= c * b
            if p is not None:
                f[d + i] %= p
    return poly_trim(q), poly_trim(f)


def poly_gcd(f, g, p=None):
    f, g = poly_trim(list(f)), poly_trim(list(g))
    while g:
        _, r = poly_divmod(f, g, p)
        f, g = g, r
    return poly_monic(f, p)


def poly_monic(f, p=None):
    f = poly_trim(f)
    if not f:
        return f
    lead = f[-1]
    if p is not None:
        inv = pow(lead, -1, p)
        return [c * inv % p for c in f]
    return [Fraction(c) / lead for c in f]


def poly_pow_mod(f, e, mod, p):
    """f**e modulo the polynomial ``mod`` over F_p."""
    result = [1]
    f = poly_divmod(f, mod, p)[1]
    while e:
        if e & 1:
            result = poly_divmod(poly_mul(result, f, p), mod, p)[1]
        f = poly_divmod(poly_mul(f, f, p), mod, p)[1]
        e >>= 1
    return result


def poly_deriv(f, p=None):
    out = [i * c for i, c in enumerate(f)][1:]
    if p is not None:
        out = [x % p for x in out]
    return poly_trim(out)


def poly_eval_mat(f, M):
    """Evaluate a polynomial at a square matrix."""
    acc = Mat.zero(M.rows, M.rows, M.p)
    pw = Mat.identity(M.rows, M.p)
    for c in f:
        if c:
            acc = acc + pw.scale(c)
        pw = pw * M
    return acc


def minimal_polynomial(M):
    """Monic minimal polynomial via iterated Krylov spaces."""
    if M.rows != M.cols:
        raise ValueError("minimal polynomial of non-square matrix")
    n = M.rows
    p = M.p
    if n == 0:
        return [1]
    m = [1]
    for seed in range(n):
        if len(m) - 1 == n:
            break
        zero = 0 if p is not None else Fraction(0)
        one = 1 if p is not None else Fraction(1)
        v = [zero] * n
        v[seed] = one
        # local minimal polynomial of M relative to v
        krylov = []
        vec = v
        while True:
            rows = krylov + [vec]
            A = Mat.from_rows(rows, p) if p is not None else Mat(
                len(rows), n, [x for r in rows for x in r], None
            )
            if rank(A) < len(rows):
                break
            krylov.append(vec)
            vec = M.matvec(vec)
        # express vec in terms of the krylov vectors: K^T c = vec
        KT = Mat(len(krylov), n, [x for r in krylov for x in r], p).transpose()
        coeffs = solve(KT, vec)
        local = [(-c) % p if p is not None else -c for c in coeffs] + [one]
        g = poly_gcd(m, local, p)
        m = poly_divmod(poly_mul(m, local, p), g, p)[0]
        m = poly_monic(m, p)
    return m


def _squarefree_decomposition(f, p):
    """Yield (factor, multiplicity) pairs with each factor squarefree."""
    out = []
    f = poly_monic(f, p)

    def sfd(f, mult):
        if len(f) <= 1:
            return
        df = poly_deriv(f, p)
        if not df:
            # f is a polynomial in x^p: take p-th root and recurse
            root = [f[i] for i in range(0, len(f), p)]
            sfd(root, mult * p)
            return
        g = poly_gcd(f, df, p)
        w = poly_divmod(f, g, p)[0]
        i = 1
        while len(w) > 1:
            y = poly_gcd(w, g, p)
            fac = poly_divmod(w, y, p)[0]
            if len(fac) > 1:
                out.append((fac, mult * i))
            w = y
            g = poly_divmod(g, y, p)[0]
            i += 1
        if len(g) > 1:
            sfd(g, mult)

    sfd(f, 1)
    return out


def _distinct_degree(f, p):
    """Split a squarefree monic f into products of equal-degree factors."""
    out = []
    x = [0, 1]
    h = x
    d = 0
    f = list(f)
    while len(f) - 1 > 2 * d:
        d += 1
        h = poly_pow_mod(h, p, f, p)
        diff = poly_trim(
            [(a - b) % p for a, b in _zip_pad(h, x)]
        )
        g = poly_gcd(f, diff, p)
        if len(g) > 1:
            out.append((g, d))
            f = poly_divmod(f, g, p)[0]
            h = poly_divmod(h, f, p)[1]
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def _zip_pad(a, b):
    n = max(len(a), len(b))
    return zip(a + [0] * (n - len(a)), b + [0] * (n - len(b)))


def _equal_degree_split(f, d, p, rng):
    """Cantor-Zassenhaus splitting of f (product of degree-d irreducibles)."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        r = [rng.randrange(p) for _ in range(n)]
        r = poly_trim(r)
        if len(r) <= 1:
            continue
        g = poly_gcd(f, r, p)
        if 1 < len(g) < len(f):
            pass
        elif p == 2:
            # trace map splitting in characteristic 2
            t = list(r)
            acc = list(r)
            for _ in range(d * _count_factors(n, d) - 1):
                acc = poly_pow_mod(acc, 2, f, p)
                t = poly_trim([(a + b) % p for a, b in _zip_pad(t, acc)])
            g = poly_gcd(f, t, p)
            if not 1 < len(g) < len(f):
                continue
        else:
            e = (p**d - 1) // 2
            h = poly_pow_mod(r, e, f, p)
            h = poly_trim([(a - b) % p for a, b in _zip_pad(h, [1])])
            g = poly_gcd(f, h, p)
            if not 1 < len(g) < len(f):
                continue
        rest = poly_divmod(f, g, p)[0]
        return _equal_degree_split(g, d, p, rng) + _equal_degree_split(rest, d, p, rng)


def _count_factors(n, d):
    return n // d


def factor_primefield(f, p, seed=0):
    """Complete factorization over F_p as a list of (irreducible, multiplicity),
    sorted for determinism.  The leading coefficient is dropped (factors are
    monic)."""
    import random

    _check_prime(p)
    f = poly_trim([c % p for c in f])
    if not f:
        raise ValueError("zero polynomial")
    rng = random.Random((seed, p, tuple(f)).__repr__())
    factors = []
    for sf, mult in _squarefree_decomposition(f, p):
        for g, d in _distinct_degree(sf, p):
            for irr in _equal_degree_split(g, d, p, rng):
                factors.append((poly_monic(irr, p), mult))
    factors.sort(key=lambda fm: (len(fm[0]), fm[0], fm[1]))
    return factors


def nilpotent_block_profile(N):
    """Jordan block sizes of a nilpotent matrix, largest first, from the
    rank sequence rank(N^0), rank(N^1), ..."""
    if N.rows != N.cols:
        raise ValueError("non-square input")
    n = N.rows
    if n == 0:
        return []
    pw = N.power(n)
    if not pw.is_zero():
        raise ValueError("matrix is not nilpotent")
    ranks = [n]
    acc = Mat.identity(n, N.p)
    while ranks[-1] > 0:
        acc = acc * N
        ranks.append(rank(acc))
    # blocks of size >= k: ranks[k-1] - ranks[k]
    geq = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    profile = []
    for k in range(len(geq), 0, -1):
        exact = geq[k - 1] - (geq[k] if k < len(geq) else 0)
        profile.extend([k] * exact)
    return sorted(profile, reverse=True)
