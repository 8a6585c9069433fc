"""Code-level structure: parameters, orthonormal basis, matrix conversions.

The codes live on K = F_{q^(2n)} carrying the Hermitian form

    <x, y> = rel_trace(x^(q^n) * y)

with values in F_{q^2}.  The conjugation of this unitary geometry is
x -> x^(q^n): for odd n it is the unique involutory automorphism of K whose
restriction to F_{q^2} is the usual y -> y^q, and with it the form above is
conjugate-symmetric with self-pairings in F_q.  (Using the exponent q
instead of q^n does not give a conjugate-symmetric form once n > 1, so no
basis can be orthonormal for it; the q^n form is the one that admits the
orthonormal bases constructed here.)

A codeword vector c = (c_0, ..., c_{n-1}) converts to an n x n matrix over
F_{q^2} whose column r holds the coordinates of c_r over the orthonormal
basis; for codewords this matrix is Hermitian (A equals its conjugate
transpose), and rank distance between vectors is the F_{q^2}-rank of the
difference matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exceptions import BadParamsError, BasisSearchFailedError
from .field import (
    Felt,
    FieldContext,
    _is_prime,
    context_from_json_obj,
    make_context,
)
from .linpoly import MooreMatrix, fq2_matrix_rank, moore_from_points
from .rng import GOLDEN, SplitMix64


def unitary_pairing(ctx: FieldContext, x: Felt, y: Felt) -> Felt:
    """<x, y> = rel_trace(x^(q^n) * y); conjugate-linear in x, linear in y."""
    return ctx.rel_trace(ctx.mul(ctx.frobenius(x, ctx.n), y))


def find_selfdual_basis(ctx: FieldContext) -> tuple:
    """Orthonormal basis of K for the unitary pairing, by Gram-Schmidt.

    Random candidate vectors come from a SplitMix64 stream seeded from
    (q, n) only, so the result is deterministic.  Each step projects the
    candidate against the prefix, rejects it while its self-pairing is zero
    (the isotropic cone misses most vectors), and scales by a solution of
    the norm equation so the self-pairing becomes exactly 1.  The finished
    Gram matrix is recomputed and must equal the identity.
    """
    q, deg = ctx.q, ctx.deg
    rng = SplitMix64(q * GOLDEN + ctx.n)
    basis: list[Felt] = []
    budget = 64 * q
    while len(basis) < ctx.n:
        for _ in range(budget):
            v = ctx.from_coeffs([rng.below(q) for _ in range(deg)])
            for a in basis:
                v = ctx.sub(v, ctx.mul(unitary_pairing(ctx, a, v), a))
            sp = unitary_pairing(ctx, v, v)
            if sp != ctx.zero:
                scale = ctx.solve_hermitian_norm(ctx.inv(sp))
                basis.append(ctx.mul(scale, v))
                break
        else:
            raise BasisSearchFailedError(
                f"no anisotropic extension found in {budget} draws at step {len(basis)}"
            )
    _check_gram(ctx, basis)
    return tuple(basis)


def _check_gram(ctx: FieldContext, basis: Sequence[Felt]) -> None:
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            want = ctx.one if i == j else ctx.zero
            if unitary_pairing(ctx, a, b) != want:
                raise BasisSearchFailedError("basis failed its Gram identity recheck")


def choose_eta(ctx: FieldContext) -> Felt:
    # X generates K over F_q with degree 2n, so it cannot lie in the index-2
    # subfield F_{q^n}; {1, X} is then an F_{q^n}-basis of K.
    return ctx.gen


@dataclass(frozen=True)
class CodeParams:
    """Everything fixed once (q, n, d) is chosen.

    m = (n+1)/2 and kappa = (n-d)/2 locate the width-k window of nonzero
    polynomial coefficients; k = n-d+1 is the message length over F_{q^n}.
    alpha is the orthonormal basis, eta the second basis vector of K over
    F_{q^n}, moore the evaluation matrix on alpha with its cached inverse.
    The remaining fields are precomputed images used in hot paths.
    """

    ctx: FieldContext
    d: int
    m: int
    kappa: int
    k: int
    alpha: tuple
    eta: Felt
    moore: MooreMatrix
    alpha_q: tuple  # alpha_i^q, the conjugated coordinate functionals
    alpha_dual: tuple  # alpha_i^(q^(n+1)), expansion basis for those functionals
    eta_split_inv: Felt  # 1 / (eta - eta^(q^n))

    @property
    def n(self) -> int:
        return self.ctx.n

    @property
    def radius(self) -> int:
        return (self.d - 1) // 2


def build_params(q: int, n: int, d: int) -> CodeParams:
    """Validate (q, n, d) and assemble deterministic code parameters."""
    if not isinstance(q, int) or not _is_prime(q):
        raise BadParamsError(f"q must be a prime, got {q}")
    if not isinstance(n, int) or n < 1 or n % 2 == 0:
        raise BadParamsError(f"n must be odd and positive, got {n}")
    if not isinstance(d, int) or d % 2 == 0:
        raise BadParamsError(f"d must be odd, got {d}")
    if not 1 <= d <= n:
        raise BadParamsError(f"d must satisfy 1 <= d <= n, got d={d}, n={n}")
    ctx = make_context(q, n)
    alpha = find_selfdual_basis(ctx)
    return _assemble(ctx, d, alpha, choose_eta(ctx))


def _assemble(ctx: FieldContext, d: int, alpha: tuple, eta: Felt) -> CodeParams:
    n = ctx.n
    moore = moore_from_points(ctx, alpha)
    return CodeParams(
        ctx=ctx,
        d=d,
        m=(n + 1) // 2,
        kappa=(n - d) // 2,
        k=n - d + 1,
        alpha=alpha,
        eta=eta,
        moore=moore,
        alpha_q=tuple(ctx.frobenius(a, 1) for a in alpha),
        alpha_dual=tuple(ctx.frobenius(a, n + 1) for a in alpha),
        eta_split_inv=ctx.inv(ctx.sub(eta, ctx.frobenius(eta, n))),
    )


def decompose_eta(params: CodeParams, b: Felt) -> tuple:
    """Split b = u + eta*v into its F_{q^n} coordinates (u, v).

    Applying x -> x^(q^n) fixes u and v and swaps nothing else, so v falls
    out of the difference b - b^(q^n); both outputs land in F_{q^n} for
    every b because {1, eta} is a basis of K over F_{q^n}.
    """
    ctx = params.ctx
    v = ctx.mul(ctx.sub(b, ctx.frobenius(b, ctx.n)), params.eta_split_inv)
    u = ctx.sub(b, ctx.mul(params.eta, v))
    return u, v


@dataclass(frozen=True)
class HermitianMatrix:
    """n x n matrix over F_{q^2}; Hermitian-ness is a property of codeword
    images, not an invariant of the container, so it is checked on demand."""

    rows: tuple

    def is_hermitian(self, ctx: FieldContext) -> bool:
        n = len(self.rows)
        return all(
            self.rows[i][j] == ctx.frobenius(self.rows[j][i], 1)
            for i in range(n)
            for j in range(n)
        )


def codeword_to_matrix(params: CodeParams, c: Sequence[Felt]) -> HermitianMatrix:
    """Column r = F_{q^2}-coordinates of c_r over the orthonormal basis.

    Entry (i, r) is rel_trace(alpha_i^q * c_r).  The map is total: any
    length-n vector converts, and only genuine codewords are guaranteed a
    Hermitian result.
    """
    ctx = params.ctx
    rows = tuple(
        tuple(ctx.rel_trace(ctx.mul(aq, cr)) for cr in c) for aq in params.alpha_q
    )
    return HermitianMatrix(rows=rows)


def matrix_to_vector(params: CodeParams, mat: HermitianMatrix) -> tuple:
    """Inverse of codeword_to_matrix.

    The coordinate functionals z -> rel_trace(alpha_i^q * z) are expanded
    against the basis alpha_i^(q^(n+1)): the pairing of functional i with
    expansion vector j is rel_trace((alpha_i^(q^n) * alpha_j)^(q^(n+1))),
    and the trace is invariant under q^2-powers, so orthonormality makes it
    delta_ij exactly.
    """
    ctx = params.ctx
    n = params.n
    out = []
    for r in range(n):
        acc = ctx.zero
        for i in range(n):
            v = mat.rows[i][r]
            if v != ctx.zero:
                acc = ctx.add(acc, ctx.mul(v, params.alpha_dual[i]))
        out.append(acc)
    return tuple(out)


def rank_distance(params: CodeParams, a: Sequence[Felt], b: Sequence[Felt]) -> int:
    """F_{q^2}-rank of the difference matrix of two vectors."""
    ctx = params.ctx
    diff = [ctx.sub(x, y) for x, y in zip(a, b)]
    return fq2_matrix_rank(ctx, codeword_to_matrix(params, diff).rows)


# -- serialization ----------------------------------------------------------


def params_to_json_obj(params: CodeParams) -> dict:
    ctx = params.ctx
    return {
        "q": ctx.q,
        "n": ctx.n,
        "d": params.d,
        "modulus": list(ctx.modulus),
        "alpha": [ctx.felt_to_json(a) for a in params.alpha],
        "eta": ctx.felt_to_json(params.eta),
    }


def params_from_json_obj(obj: dict) -> CodeParams:
    """Rebuild params from JSON, recomputing and cross-checking everything
    derivable: canonical modulus, Gram identity, Moore inverse, eta basis."""
    ctx = context_from_json_obj(obj)
    d = int(obj["d"])
    if d % 2 == 0 or not 1 <= d <= ctx.n:
        raise BadParamsError(f"d = {d} is not admissible for n = {ctx.n}")
    alpha = tuple(ctx.felt_from_json(a) for a in obj["alpha"])
    if len(alpha) != ctx.n:
        raise BadParamsError(f"expected {ctx.n} basis elements, got {len(alpha)}")
    try:
        _check_gram(ctx, alpha)
    except BasisSearchFailedError as exc:
        raise BadParamsError("stored basis is not orthonormal") from exc
    eta = ctx.felt_from_json(obj["eta"])
    if ctx.in_subfield(eta, ctx.n):
        raise BadParamsError("stored eta lies in F_{q^n}")
    return _assemble(ctx, d, alpha, eta)
