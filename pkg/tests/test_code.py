"""Code parameters, the unitary pairing, basis search, matrix conversions."""

import pytest

from hermrank import (
    Message,
    SplitMix64,
    build_params,
    choose_eta,
    codeword_to_matrix,
    decompose_eta,
    encode,
    find_selfdual_basis,
    lp_interpolate,
    make_context,
    map_rank,
    matrix_rank,
    matrix_to_vector,
    params_from_json_obj,
    params_to_json_obj,
    rank_distance,
    unitary_pairing,
)
from hermrank.exceptions import BadParamsError, TooLargeError


def _rand_word(params, rng):
    ctx = params.ctx
    return tuple(
        ctx.from_coeffs([rng.below(ctx.q) for _ in range(ctx.deg)]) for _ in range(params.n)
    )


# -- parameter assembly -----------------------------------------------------


@pytest.mark.parametrize(
    "q,n,d,m,kappa,k,radius",
    [
        (2, 3, 3, 2, 0, 1, 1),
        (2, 5, 3, 3, 1, 3, 1),
        (2, 7, 5, 4, 1, 3, 2),
        (2, 7, 7, 4, 0, 1, 3),
        (3, 3, 3, 2, 0, 1, 1),
        (2, 5, 1, 3, 2, 5, 0),
    ],
)
def test_build_params_layout(params_for, q, n, d, m, kappa, k, radius):
    p = params_for(q, n, d)
    assert (p.m, p.kappa, p.k, p.radius) == (m, kappa, k, radius)
    assert p.n == n and p.d == d
    assert len(p.alpha) == n


def test_build_params_rejects_bad_triples():
    with pytest.raises(BadParamsError, match="prime"):
        build_params(6, 3, 3)
    with pytest.raises(BadParamsError, match="odd"):
        build_params(2, 4, 3)
    with pytest.raises(BadParamsError, match="odd"):
        build_params(2, 5, 2)
    with pytest.raises(BadParamsError):
        build_params(2, 3, 5)  # d > n
    with pytest.raises(BadParamsError):
        build_params(2, 3, -1)
    with pytest.raises(TooLargeError):
        build_params(2, 33, 3)


# -- unitary pairing --------------------------------------------------------


@pytest.mark.parametrize("q,n", [(2, 3), (3, 3), (2, 5)])
def test_pairing_is_conjugate_symmetric_sesquilinear(q, n, rand_felt):
    ctx = make_context(q, n)
    rng = SplitMix64(11)
    for _ in range(25):
        x, y = rand_felt(ctx, rng), rand_felt(ctx, rng)
        p = unitary_pairing(ctx, x, y)
        assert ctx.in_subfield(p, 2)
        # swapping arguments conjugates the value
        assert unitary_pairing(ctx, y, x) == ctx.frobenius(p, 1)
        # self-pairings are fixed by conjugation, hence lie in F_q
        assert ctx.in_subfield(unitary_pairing(ctx, x, x), 1)
    for lam in ctx.subfield_elements(2):
        x, y = rand_felt(ctx, rng), rand_felt(ctx, rng)
        lx = unitary_pairing(ctx, ctx.mul(lam, x), y)
        assert lx == ctx.mul(ctx.frobenius(lam, 1), unitary_pairing(ctx, x, y))
        ly = unitary_pairing(ctx, x, ctx.mul(lam, y))
        assert ly == ctx.mul(lam, unitary_pairing(ctx, x, y))


def test_q_power_twist_is_not_conjugate_symmetric(rand_felt):
    # the same trace form built on x -> x^q instead of x -> x^(q^n) stops
    # being conjugate-symmetric as soon as n > 1, so it admits no orthonormal
    # basis; this pins down why the conjugation exponent must be q^n
    ctx = make_context(2, 3)
    rng = SplitMix64(13)

    def naive(x, y):
        return ctx.rel_trace(ctx.mul(ctx.frobenius(x, 1), y))

    violations = 0
    for _ in range(50):
        x, y = rand_felt(ctx, rng), rand_felt(ctx, rng)
        if naive(y, x) != ctx.frobenius(naive(x, y), 1):
            violations += 1
    assert violations > 0


# -- orthonormal basis ------------------------------------------------------


@pytest.mark.parametrize("q,n", [(2, 3), (3, 3), (2, 5), (3, 5), (5, 1), (2, 7)])
def test_selfdual_basis_gram_identity(q, n):
    ctx = make_context(q, n)
    basis = find_selfdual_basis(ctx)
    assert len(basis) == n
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            want = ctx.one if i == j else ctx.zero
            assert unitary_pairing(ctx, a, b) == want


def test_selfdual_basis_is_deterministic():
    ctx = make_context(2, 5)
    assert find_selfdual_basis(ctx) == find_selfdual_basis(ctx)
    ctx2 = make_context(2, 5)
    assert find_selfdual_basis(ctx2) == find_selfdual_basis(ctx)


def test_basis_expansion_identities_exhaustive():
    # for every z in K: z = sum_i <alpha_i, z> alpha_i^(q^(n+1)), and the
    # untwisted sum returns z^(q^(n-1)) rather than z itself
    ctx = make_context(2, 3)
    basis = find_selfdual_basis(ctx)
    dual = [ctx.frobenius(a, ctx.n + 1) for a in basis]
    aq = [ctx.frobenius(a, 1) for a in basis]
    for i in range(3):
        for j in range(3):
            want = ctx.one if i == j else ctx.zero
            assert ctx.rel_trace(ctx.mul(aq[i], dual[j])) == want
    for z in ctx.subfield_elements(ctx.deg):
        coords = [ctx.rel_trace(ctx.mul(a, z)) for a in aq]
        rebuilt = ctx.zero
        untwisted = ctx.zero
        for c, dv, bv in zip(coords, dual, basis):
            rebuilt = ctx.add(rebuilt, ctx.mul(c, dv))
            untwisted = ctx.add(untwisted, ctx.mul(c, bv))
        assert rebuilt == z
        assert untwisted == ctx.frobenius(z, ctx.n - 1)


# -- eta splitting ----------------------------------------------------------


def test_choose_eta_outside_middle_subfield():
    for q, n in [(2, 3), (3, 3), (2, 5)]:
        ctx = make_context(q, n)
        eta = choose_eta(ctx)
        assert not ctx.in_subfield(eta, n)


def test_decompose_eta_roundtrip(params_for, rand_felt):
    p = params_for(2, 5, 3)
    ctx = p.ctx
    rng = SplitMix64(17)
    for _ in range(40):
        b = rand_felt(ctx, rng)
        u, v = decompose_eta(p, b)
        assert ctx.in_subfield(u, ctx.n)
        assert ctx.in_subfield(v, ctx.n)
        assert ctx.add(u, ctx.mul(p.eta, v)) == b
    assert decompose_eta(p, ctx.zero) == (ctx.zero, ctx.zero)
    assert decompose_eta(p, p.eta) == (ctx.zero, ctx.one)
    inside = ctx.subfield_elements(ctx.n)[3]
    assert decompose_eta(p, inside) == (inside, ctx.zero)


# -- matrix conversions -----------------------------------------------------


def test_codeword_matrix_zero(params_for):
    p = params_for(2, 5, 3)
    ctx = p.ctx
    mat = codeword_to_matrix(p, (ctx.zero,) * p.n)
    assert all(v == ctx.zero for row in mat.rows for v in row)
    assert mat.is_hermitian(ctx)


@pytest.mark.parametrize("q,n,d", [(2, 5, 3), (2, 7, 5), (3, 3, 3), (3, 5, 3)])
def test_codewords_give_hermitian_matrices(params_for, q, n, d):
    p = params_for(q, n, d)
    ctx = p.ctx
    rng = SplitMix64(19)
    sub = ctx.subfield_elements(ctx.n) if n <= 5 else None
    basis = ctx.subfield_basis(ctx.n)
    for _ in range(30):
        if sub is not None:
            parts = tuple(sub[rng.below(len(sub))] for _ in range(p.k))
        else:
            parts = tuple(
                _combine(ctx, basis, [rng.below(q) for _ in basis]) for _ in range(p.k)
            )
        word = encode(p, Message(parts))
        mat = codeword_to_matrix(p, word)
        assert mat.is_hermitian(ctx)
        entries_ok = all(ctx.in_subfield(v, 2) for row in mat.rows for v in row)
        assert entries_ok


def _combine(ctx, basis, digits):
    acc = ctx.zero
    for b, c in zip(basis, digits):
        acc = ctx.add(acc, ctx.mul(ctx.from_base(c), b))
    return acc


def test_random_vectors_are_usually_not_hermitian(params_for):
    # non-vacuity: the Hermitian check must reject generic vectors
    p = params_for(2, 5, 3)
    rng = SplitMix64(23)
    rejected = 0
    for _ in range(20):
        word = _rand_word(p, rng)
        if not codeword_to_matrix(p, word).is_hermitian(p.ctx):
            rejected += 1
    assert rejected > 0


@pytest.mark.parametrize("q,n,d", [(2, 5, 3), (3, 3, 3), (2, 7, 5)])
def test_matrix_vector_roundtrip(params_for, q, n, d):
    # conversion is a bijection on all of K^n, not only on codewords
    p = params_for(q, n, d)
    rng = SplitMix64(29)
    for _ in range(25):
        word = _rand_word(p, rng)
        assert matrix_to_vector(p, codeword_to_matrix(p, word)) == word


# -- rank distance ----------------------------------------------------------


def test_rank_distance_metric_basics(params_for):
    p = params_for(2, 5, 3)
    ctx = p.ctx
    rng = SplitMix64(31)
    zero = (ctx.zero,) * p.n
    assert rank_distance(p, zero, zero) == 0
    for _ in range(15):
        a, b = _rand_word(p, rng), _rand_word(p, rng)
        assert rank_distance(p, a, a) == 0
        assert rank_distance(p, a, b) == rank_distance(p, b, a)
        assert 0 <= rank_distance(p, a, b) <= p.n


@pytest.mark.parametrize("q,n,d", [(2, 5, 3), (3, 3, 3)])
def test_rank_distance_three_way_agreement(params_for, q, n, d):
    # same number three ways: blown-up F_q elimination, generic elimination
    # over K, and the rank of the interpolated difference map
    p = params_for(q, n, d)
    ctx = p.ctx
    rng = SplitMix64(37)
    zero = (ctx.zero,) * p.n
    for _ in range(20):
        a = _rand_word(p, rng)
        dist = rank_distance(p, a, zero)
        mat = codeword_to_matrix(p, a)
        assert matrix_rank(ctx, mat.rows) == dist
        assert map_rank(ctx, lp_interpolate(ctx, p.moore, a)) == dist


# -- serialization ----------------------------------------------------------


def test_params_json_roundtrip(params_for):
    p = params_for(2, 5, 3)
    obj = params_to_json_obj(p)
    assert sorted(obj) == ["alpha", "d", "eta", "modulus", "n", "q"]
    again = params_from_json_obj(obj)
    assert again.alpha == p.alpha
    assert again.eta == p.eta
    assert (again.d, again.m, again.kappa, again.k) == (p.d, p.m, p.kappa, p.k)
    assert again.moore.tinv == p.moore.tinv


def test_params_json_tamper_detection(params_for):
    p = params_for(2, 5, 3)
    ctx = p.ctx

    obj = params_to_json_obj(p)
    obj["alpha"][0] = ctx.felt_to_json(ctx.zero)
    with pytest.raises(BadParamsError, match="orthonormal"):
        params_from_json_obj(obj)

    obj = params_to_json_obj(p)
    obj["alpha"] = obj["alpha"][:-1]
    with pytest.raises(BadParamsError):
        params_from_json_obj(obj)

    obj = params_to_json_obj(p)
    obj["modulus"][0] ^= 1
    with pytest.raises(ValueError):
        params_from_json_obj(obj)

    obj = params_to_json_obj(p)
    obj["eta"] = ctx.felt_to_json(ctx.one)  # lies inside F_{q^n}
    with pytest.raises(BadParamsError, match="eta"):
        params_from_json_obj(obj)

    obj = params_to_json_obj(p)
    obj["d"] = 4
    with pytest.raises(BadParamsError):
        params_from_json_obj(obj)
