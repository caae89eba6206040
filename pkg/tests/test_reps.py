import random

import pytest

from glsw.algebra import gls_presentation
from glsw.exact import Mat
from glsw.quivers import catalog_affine
from glsw import reps as R

ALG_CACHE = {}


def algebra(fam, rank=None):
    key = (fam, rank)
    if key not in ALG_CACHE:
        ALG_CACHE[key] = gls_presentation(catalog_affine(fam, rank))
    return ALG_CACHE[key]


def family_module(l1, l2, p=None):
    """The one-parameter family in rank (1, 2) over the rank-one algebra."""
    A = algebra("BC1")
    alpha = Mat.from_rows([[1, 0], [0, l2], [0, l1], [0, 0]], p)
    eps = Mat.from_rows(
        [[0, 0, 0, 0], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]], p
    )
    return R.Rep(A, [4, 2], {0: alpha, 1: eps}, p)


def boundary_module(p=None):
    """The small non-locally-free stable module in dimension (2, 1)."""
    A = algebra("BC1")
    alpha = Mat.from_rows([[1], [0]], p)
    eps = Mat.from_rows([[0, 0], [1, 0]], p)
    return R.Rep(A, [2, 1], {0: alpha, 1: eps}, p)


# -- constructors ------------------------------------------------------------


def test_projective_dimensions():
    A = algebra("BC1")
    assert R.projective(A, 0).dims == [4, 0]
    assert R.projective(A, 1).dims == [4, 1]


def test_injective_dimensions():
    A = algebra("BC1")
    assert R.injective(A, 0).dims == [4, 4]
    assert R.injective(A, 1).dims == [0, 1]


def test_standard_modules_satisfy_relations():
    for fam, rank in [("BC1", None), ("C", 2), ("G21", None)]:
        A = algebra(fam, rank)
        for i in range(A.n):
            assert R.validate(R.projective(A, i)) == []
            assert R.validate(R.injective(A, i)) == []
            assert R.validate(R.generalized_simple(A, i)) == []


def test_validate_catches_bad_loop():
    A = algebra("BC1")
    V = R.Rep(A, [4, 1], {1: Mat.identity(4)})
    assert ("nilpotency", "e0") in R.validate(V)


def test_validate_catches_broken_relation():
    A = algebra("G21")
    assert len(A.relations) == 1
    J3 = Mat.from_rows([[0, 0, 0], [1, 0, 0], [0, 1, 0]])
    D = Mat.from_rows([[1, 0, 0], [0, 2, 0], [0, 0, 3]])
    mats = {}
    for gid, g in enumerate(A.gens):
        if g.is_loop:
            mats[gid] = J3
        elif g.src == 2:
            mats[gid] = D  # does not intertwine the two loops
    V = R.Rep(A, [1, 3, 3], mats)
    assert ("relation", 0) in R.validate(V)
    mats2 = dict(mats)
    arrow = next(k for k, g in enumerate(A.gens) if not g.is_loop and g.src == 2)
    mats2[arrow] = Mat.identity(3)
    assert R.validate(R.Rep(A, [1, 3, 3], mats2)) == []


def test_locally_free_detection():
    A = algebra("BC1")
    ok, r = R.is_locally_free(R.projective(A, 1))
    assert ok and r == [1, 1]
    ok, r = R.is_locally_free(boundary_module())
    assert not ok and r is None
    ok, r = R.is_locally_free(family_module(3, 1))
    assert ok and r == [1, 2]


def test_generalized_simple_is_locally_free_rank_one():
    for fam, rank in [("BC1", None), ("C", 2), ("G23", None)]:
        A = algebra(fam, rank)
        for i in range(A.n):
            ok, r = R.is_locally_free(R.generalized_simple(A, i))
            assert ok
            assert r == [1 if j == i else 0 for j in range(A.n)]


# -- Hom and Ext -------------------------------------------------------------


def test_hom_from_projective_is_vertex_dimension():
    rng = random.Random(1)
    for fam, rank, rmax in [("BC1", None, 3), ("C", 2, 2)]:
        A = algebra(fam, rank)
        projs = [R.projective(A, i) for i in range(A.n)]
        for t in range(3):
            V = R.random_locally_free(
                A, [rng.randrange(1, rmax) for _ in range(A.n)], seed=t
            )
            for i in range(A.n):
                assert R.hom_dim(projs[i], V) == V.dims[i]


def test_hom_to_injective_is_vertex_dimension():
    A = algebra("BC1")
    injs = [R.injective(A, i) for i in range(A.n)]
    for t in range(3):
        V = R.random_locally_free(A, [1 + t % 2, 1 + t], seed=40 + t)
        for i in range(A.n):
            assert R.hom_dim(V, injs[i]) == V.dims[i]


def test_euler_form_agreement():
    rng = random.Random(7)
    pairs = 0
    for fam, rank, rmax in [("BC1", None, 3), ("C", 2, 2)]:
        A = algebra(fam, rank)
        while pairs < (15 if fam == "BC1" else 25):
            V = R.random_locally_free(
                A, [rng.randrange(1, rmax) for _ in range(A.n)], seed=pairs
            )
            U = R.random_locally_free(
                A, [rng.randrange(1, rmax) for _ in range(A.n)], seed=1000 + pairs
            )
            assert R.ext1_dim(V, U) == R.ext1_dim(V, U, method="euler")
            pairs += 1


def test_euler_form_agreement_prime_field():
    A = algebra("BC1")
    for t in range(5):
        V = R.random_locally_free(A, [1, 2], seed=t, p=5)
        U = R.random_locally_free(A, [2, 1], seed=90 + t, p=5)
        assert R.ext1_dim(V, U) == R.ext1_dim(V, U, method="euler")


def test_euler_shortcut_rejects_non_locally_free():
    with pytest.raises(ValueError):
        R.ext1_dim(boundary_module(), boundary_module(), method="euler")


def test_no_self_extensions_of_projectives():
    A = algebra("C", 2)
    for i in range(A.n):
        P = R.projective(A, i)
        assert R.ext1_dim(P, P) == 0


# -- minimal presentations and g-vectors -------------------------------------


def test_g_vectors_of_standard_modules():
    A = algebra("BC1")
    assert R.g_vector(R.projective(A, 0)) == [1, 0]
    assert R.g_vector(R.projective(A, 1)) == [0, 1]
    assert R.g_vector(R.injective(A, 1)) == [-1, 1]
    assert R.g_vector(family_module(2, 1)) == [-1, 2]
    assert R.g_vector(boundary_module()) == [-1, 1]


def test_presentation_g_additive_on_sums():
    A = algebra("BC1")
    V = family_module(3, 1)
    W = R.projective(A, 1)
    gs = R.g_vector(R.direct_sum(V, W))
    assert gs == [a + b for a, b in zip(R.g_vector(V), R.g_vector(W))]


def test_g_vector_pairing_identity():
    """<g(V), dims U> = dim Hom(V, U) - dim Hom(U, tau V)."""
    rng = random.Random(3)
    A = algebra("BC1")
    for t in range(4):
        V = R.random_locally_free(A, [rng.randrange(1, 3), rng.randrange(1, 3)], seed=t)
        U = R.random_locally_free(
            A, [rng.randrange(1, 3), rng.randrange(1, 3)], seed=70 + t
        )
        g = R.g_vector(V)
        lhs = sum(gi * di for gi, di in zip(g, U.dims))
        assert lhs == R.hom_dim(V, U) - R.hom_dim(U, R.ar_translate(V))


# -- Auslander-Reiten translation --------------------------------------------


def test_translate_kills_projectives_and_inverse_kills_injectives():
    for fam, rank in [("BC1", None), ("C", 2)]:
        A = algebra(fam, rank)
        for i in range(A.n):
            assert R.ar_translate(R.projective(A, i)).total_dim() == 0
            assert R.ar_inverse(R.injective(A, i)).total_dim() == 0


def test_preprojective_rank_vector_series():
    """dims of repeated inverse translates of the projectives follow the
    closed-form series."""
    A = algebra("BC1")
    V1 = R.projective(A, 0)
    V2 = R.projective(A, 1)
    for n in range(3):
        assert V1.dims == [4 * (2 * n + 1), 4 * n]
        assert V2.dims == [4 * (n + 1), 2 * n + 1]
        if n < 2:
            V1 = R.ar_inverse(V1)
            V2 = R.ar_inverse(V2)


def test_preinjective_rank_vector_series():
    A = algebra("BC1")
    W1 = R.injective(A, 0)
    W2 = R.injective(A, 1)
    for n in range(3):
        assert W1.dims == [4 * (2 * n + 1), 4 * n + 4]
        assert W2.dims == [4 * n, 2 * n + 1]
        if n < 2:
            W1 = R.ar_translate(W1)
            W2 = R.ar_translate(W2)


def test_translate_matches_coxeter_on_locally_free():
    A = algebra("BC1")
    q = A.quiver
    phi = q.coxeter_transformation()
    W = R.ar_inverse(R.projective(A, 1))  # locally free, not projective
    ok, rv = R.is_locally_free(W)
    assert ok
    T = R.ar_translate(W)
    okt, rt = R.is_locally_free(T)
    assert okt
    assert rt == q.coxeter_apply(rv, phi)


def test_translate_inverse_roundtrip():
    A = algebra("BC1")
    mods = [
        family_module(3, 1),
        family_module(0, 1),
        boundary_module(),
        R.injective(A, 1),
        R.ar_inverse(R.projective(A, 1)),
    ]
    for V in mods:
        W = R.ar_inverse(R.ar_translate(V))
        assert R.is_isomorphic(W, V)[0]
    back = R.ar_translate(R.ar_inverse(R.projective(A, 0)))
    assert R.is_isomorphic(back, R.projective(A, 0))[0]


def test_family_modules_are_periodic_bricks():
    for l1, l2 in [(0, 1), (3, 1), (1, 1)]:
        V = family_module(l1, l2)
        assert R.validate(V) == []
        assert R.end_dim(V) == 1
        assert R.is_isomorphic(R.ar_translate(V), V)[0]


def test_family_degenerates_at_infinity():
    V = family_module(1, 0)
    assert R.end_dim(V) == 2
    assert R.is_isomorphic(R.ar_translate(V), V)[0]
    assert R.hom_dim(boundary_module(), V) > 0


def test_family_modules_pairwise_orthogonal():
    V, W = family_module(2, 1), family_module(5, 1)
    assert R.hom_dim(V, W) == 0
    assert R.hom_dim(W, V) == 0
    assert not R.is_isomorphic(V, W)[0]


def test_boundary_module_is_brick():
    V = boundary_module()
    assert R.validate(V) == []
    assert R.end_dim(V) == 1


# -- isomorphism and decomposition -------------------------------------------


def test_isomorphic_after_base_change():
    A = algebra("BC1")
    p = 7
    V = family_module(3, 1, p)
    g0 = Mat.from_rows(
        [[1, 2, 0, 0], [0, 1, 0, 3], [0, 0, 1, 0], [4, 0, 0, 1]], p
    )
    g0inv = _inverse(g0, p)
    g1 = Mat.from_rows([[2, 1], [1, 1]], p)
    g1inv = _inverse(g1, p)
    W = R.Rep(
        A,
        V.dims,
        {0: g0 * (V.mats[0] * g1inv), 1: g0 * (V.mats[1] * g0inv)},
        p,
    )
    assert R.validate(W) == []
    assert R.is_isomorphic(V, W)[0]


def _inverse(m, p):
    from glsw.exact import rref

    aug = m.hstack(Mat.identity(m.rows, p))
    red, pivots = rref(aug)
    assert pivots == list(range(m.rows))
    return Mat(
        m.rows,
        m.rows,
        [red[i, m.rows + j] for i in range(m.rows) for j in range(m.rows)],
        p,
    )


def test_non_isomorphic_same_dimensions():
    verdict, why = R.is_isomorphic(family_module(2, 1), family_module(3, 1))
    assert verdict is False


def test_krull_schmidt_recovers_summands():
    A = algebra("BC1")
    p = 7
    P0 = R.projective(A, 0, p)
    P1 = R.projective(A, 1, p)
    S = R.direct_sum(R.direct_sum(P0, P1), P0)
    parts = R.krull_schmidt(S, seed=3)
    assert sorted(x.dims for x in parts) == [[4, 0], [4, 0], [4, 1]]
    assert sum(R.is_isomorphic(x, P0)[0] for x in parts) == 2
    assert sum(R.is_isomorphic(x, P1)[0] for x in parts) == 1


def test_krull_schmidt_splits_family_sum():
    p = 11
    V, W = family_module(3, 1, p), family_module(5, 1, p)
    parts = R.krull_schmidt(R.direct_sum(V, W), seed=1)
    assert len(parts) == 2
    assert {R.is_isomorphic(x, V)[0] for x in parts} == {True, False}


def test_krull_schmidt_keeps_indecomposable():
    parts = R.krull_schmidt(family_module(3, 1, 5), seed=0)
    assert len(parts) == 1


def test_krull_schmidt_requires_prime_field():
    with pytest.raises(ValueError):
        R.krull_schmidt(family_module(3, 1), seed=0)


# -- random sampling ---------------------------------------------------------


def test_random_locally_free_is_valid_and_deterministic():
    for fam, rank in [("BC1", None), ("G21", None), ("C", 2)]:
        A = algebra(fam, rank)
        r = [1] * A.n
        V = R.random_locally_free(A, r, seed=4)
        W = R.random_locally_free(A, r, seed=4)
        assert R.validate(V) == []
        assert R.is_locally_free(V) == (True, r)
        for gid in range(len(A.gens)):
            assert V.mats[gid] == W.mats[gid]
        U = R.random_locally_free(A, r, seed=5)
        assert any(U.mats[g] != V.mats[g] for g in range(len(A.gens)))


def test_random_locally_free_prime_field():
    A = algebra("BC1")
    V = R.random_locally_free(A, [2, 2], seed=0, p=101)
    assert V.p == 101
    assert R.validate(V) == []
    assert R.is_locally_free(V) == (True, [2, 2])


# -- serialization -----------------------------------------------------------


def test_json_roundtrip_rational_and_prime():
    A = algebra("BC1")
    for V in [family_module(3, 1), R.projective(A, 1), family_module(2, 1, 7)]:
        W = R.from_json(A, R.to_json(V))
        assert W.dims == V.dims and W.p == V.p
        for gid in range(len(A.gens)):
            assert W.mats[gid] == V.mats[gid]
