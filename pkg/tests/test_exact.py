from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from glsw.exact import (
    Mat,
    factor_primefield,
    kernel_basis,
    minimal_polynomial,
    nilpotent_block_profile,
    poly_divmod,
    poly_eval_mat,
    poly_gcd,
    poly_mul,
    rank,
    rref,
    solve,
)


def test_rank_rational():
    m = Mat.from_rows([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert rank(m) == 2


def test_rank_fractions():
    m = Mat.from_rows(
        [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), Fraction(1, 4)]]
    )
    assert rank(m) == 2
    # second row = 3 * first row makes it singular
    sing = Mat.from_rows([[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), 1]])
    assert rank(sing) == 1


def test_rank_mod_p():
    m = Mat.from_rows([[1, 2], [3, 6]], p=5)
    assert rank(m) == 1
    m = Mat.from_rows([[1, 2], [3, 6]], p=7)
    assert rank(m) == 1
    m = Mat.from_rows([[1, 2], [3, 5]], p=7)
    assert rank(m) == 2


def test_rref_deterministic_pivots():
    m = Mat.from_rows([[0, 1, 2], [1, 0, 1], [1, 1, 3]], p=5)
    r1, p1 = rref(m)
    r2, p2 = rref(m.copy())
    assert r1.data == r2.data and p1 == p2 == [0, 1]


def test_solve_consistent():
    m = Mat.from_rows([[1, 2], [3, 4]])
    x = solve(m, [5, 11])
    assert m.matvec(x) == [Fraction(5), Fraction(11)]


def test_solve_inconsistent():
    m = Mat.from_rows([[1, 2], [2, 4]])
    assert solve(m, [1, 3]) is None


def test_solve_mod_p():
    m = Mat.from_rows([[2, 1], [1, 1]], p=7)
    x = solve(m, [1, 0])
    assert m.matvec(x) == [1, 0]


def test_kernel_basis_normalized():
    m = Mat.from_rows([[1, 2, 3]])
    basis = kernel_basis(m)
    assert len(basis) == 2
    for v in basis:
        lead = next(x for x in v if x != 0)
        assert lead == 1
        assert all(c == 0 for c in m.matvec(v))


def test_kernel_basis_mod_p_normalized():
    m = Mat.from_rows([[2, 4, 1], [1, 2, 3]], p=7)
    basis = kernel_basis(m)
    assert len(basis) == 1
    v = basis[0]
    assert next(x for x in v if x) == 1
    assert m.matvec(v) == [0, 0]


def test_kernel_of_full_rank_is_empty():
    m = Mat.from_rows([[1, 0], [0, 1], [1, 1]])
    assert kernel_basis(m) == []


def test_matmul_agrees_with_rational():
    a = Mat.from_rows([[1, 2], [3, 4]])
    b = Mat.from_rows([[5, 6], [7, 8]])
    prod = a * b
    ap = Mat.from_rows([[1, 2], [3, 4]], p=101)
    bp = Mat.from_rows([[5, 6], [7, 8]], p=101)
    assert (ap * bp).data == [int(x) % 101 for x in prod.data]


def test_minimal_polynomial_nilpotent():
    n = Mat.from_rows([[0, 1], [0, 0]])
    assert minimal_polynomial(n) == [0, 0, 1]  # x^2


def test_minimal_polynomial_identity():
    i = Mat.identity(3)
    assert minimal_polynomial(i) == [-1, 1]  # x - 1


def test_minimal_polynomial_companion():
    # companion matrix of x^3 - 2x - 5
    m = Mat.from_rows([[0, 0, 5], [1, 0, 2], [0, 1, 0]])
    assert minimal_polynomial(m) == [-5, -2, 0, 1]


def test_minimal_polynomial_mod_p_annihilates():
    m = Mat.from_rows([[1, 2, 0], [0, 1, 0], [3, 1, 4]], p=7)
    f = minimal_polynomial(m)
    assert poly_eval_mat(f, m).is_zero()


def test_factor_primefield_simple():
    # x^2 - 1 = (x-1)(x+1) over F_7
    fs = factor_primefield([-1, 0, 1], 7)
    assert fs == [([1, 1], 1), ([6, 1], 1)]


def test_factor_primefield_irreducible():
    # x^2 + 1 is irreducible over F_3
    fs = factor_primefield([1, 0, 1], 3)
    assert fs == [([1, 0, 1], 1)]


def test_factor_primefield_multiplicity():
    # (x-1)^2 (x-2) over F_5
    f = poly_mul(poly_mul([-1, 1], [-1, 1], 5), [-2, 1], 5)
    fs = factor_primefield(f, 5)
    assert sorted(fs) == [([3, 1], 1), ([4, 1], 2)]


def test_factor_primefield_char2():
    # x^2 + x + 1 irreducible over F_2; x^2 + x = x(x+1)
    assert factor_primefield([1, 1, 1], 2) == [([1, 1, 1], 1)]
    assert factor_primefield([0, 1, 1], 2) == [([0, 1], 1), ([1, 1], 1)]


def test_factor_primefield_inseparable_power():
    # x^3 + 1 = (x+1)^3 over F_3
    assert factor_primefield([1, 0, 0, 1], 3) == [([1, 1], 3)]


def test_nilpotent_block_profile():
    # one Jordan block of size 3 and one of size 1
    n = Mat.from_rows(
        [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0], [0, 0, 0, 0]]
    )
    assert nilpotent_block_profile(n) == [3, 1]


def test_nilpotent_block_profile_zero():
    assert nilpotent_block_profile(Mat.zero(3, 3)) == [1, 1, 1]


def test_nilpotent_block_profile_rejects_non_nilpotent():
    with pytest.raises(ValueError):
        nilpotent_block_profile(Mat.identity(2))


def test_to_fp_denominator_failure():
    m = Mat.from_rows([[Fraction(1, 3)]])
    with pytest.raises(ZeroDivisionError):
        m.to_fp(3)
    assert m.to_fp(5).data == [2]  # 1/3 = 2 mod 5


sq = st.integers(-9, 9)


@given(st.lists(st.lists(sq, min_size=3, max_size=3), min_size=2, max_size=4))
@settings(max_examples=60, deadline=None)
def test_rank_agrees_q_vs_large_p(rows):
    m = Mat.from_rows(rows)
    mp = Mat.from_rows(rows, p=10007)
    # entries are tiny, so reduction mod a large prime cannot drop rank
    assert rank(m) == rank(mp)


@given(st.lists(st.lists(sq, min_size=2, max_size=2), min_size=2, max_size=2))
@settings(max_examples=60, deadline=None)
def test_minimal_polynomial_annihilates(rows):
    m = Mat.from_rows(rows)
    f = minimal_polynomial(m)
    assert f[-1] == 1
    assert poly_eval_mat(f, m).is_zero()


@given(
    st.lists(st.integers(0, 6), min_size=1, max_size=4),
    st.lists(st.integers(0, 6), min_size=2, max_size=4),
)
@settings(max_examples=60, deadline=None)
def test_poly_divmod_roundtrip(f, g):
    from glsw.exact import poly_trim

    g = poly_trim(g)
    if not g:
        return
    q, r = poly_divmod(f, g, 7)
    recon = poly_mul(q, g, 7)
    n = max(len(recon), len(r), len(poly_trim([x % 7 for x in f])))
    recon = recon + [0] * (n - len(recon))
    rr = r + [0] * (n - len(r))
    ff = [x % 7 for x in f] + [0] * (n - len(f))
    assert [(a + b) % 7 for a, b in zip(recon, rr)] == poly_trim(ff) + [0] * (
        n - len(poly_trim(ff))
    )


@given(st.lists(st.integers(0, 4), min_size=1, max_size=5))
@settings(max_examples=60, deadline=None)
def test_factorization_multiplies_back(coeffs):
    from glsw.exact import poly_trim

    f = poly_trim([c % 5 for c in coeffs])
    if len(f) <= 1:
        return
    fs = factor_primefield(f, 5)
    prod = [pow(f[-1], 1, 5)]
    prod = [f[-1] % 5]
    for g, m in fs:
        for _ in range(m):
            prod = poly_mul(prod, g, 5)
    assert prod == [c % 5 for c in f]


def test_gcd_monic():
    f = poly_mul([1, 1], [2, 1], 7)
    g = poly_mul([1, 1], [3, 1], 7)
    assert poly_gcd(f, g, 7) == [1, 1]
