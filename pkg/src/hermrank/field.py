"""Arithmetic for the field tower F_q < F_{q^2} and F_{q^n} < F_{q^(2n)}.

Everything happens inside the single extension K = F_q[X]/(f) where f is the
canonical monic irreducible of degree 2n over the prime field F_q.  Subfields
are not separate types: an element of F_{q^2} or F_{q^n} is an ordinary field
element that happens to be fixed by the appropriate Frobenius power, and
``in_subfield`` tests exactly that.

Element representation depends on the characteristic:

* q = 2: an element is a plain ``int`` whose bits are the coefficients
  (bit i = coefficient of X^i).  Addition is XOR, multiplication is a
  carry-less product followed by a table-driven reduction.
* odd prime q: an element is a ``tuple`` of 2n ints in [0, q), coefficient
  of X^i at position i.

Both representations are canonical, hashable and compare with ``==``, so
elements can be dict keys and set members.  The JSON form of an element is
its coefficient list, least significant first, always of length 2n.

Frobenius powers x -> x^(q^j) are F_q-linear, so each is stored as the list
of images of the monomial basis and applied coefficient-by-coefficient; no
exponentiation happens at lookup time.  The relative trace down to F_{q^2}
(the sum of the even Frobenius powers) is precomputed the same way.
"""

from __future__ import annotations

import functools
import math
from typing import Iterable, Sequence, Union

from .exceptions import (
    EvenExtensionError,
    NotADivisorError,
    NotInSubfieldError,
    NotPrimeError,
    TooLargeError,
    ZeroInputError,
)

#: A field element: packed int for q = 2, coefficient tuple for odd q.
Felt = Union[int, tuple]

_ELEMENT_BIT_BUDGET = 64


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


def _prime_factors(m: int) -> list[int]:
    out = []
    f = 2
    while f * f <= m:
        if m % f == 0:
            out.append(f)
            while m % f == 0:
                m //= f
        f += 1 if f == 2 else 2
    if m > 1:
        out.append(m)
    return out


# ---------------------------------------------------------------------------
# Dense polynomial arithmetic over F_q, used only for the modulus scan.
# Packed-int fast path for q = 2, little-endian coefficient lists otherwise.
# ---------------------------------------------------------------------------


def _g2_clmul(a: int, b: int) -> int:
    r = 0
    while a:
        if a & 1:
            r ^= b
        a >>= 1
        b <<= 1
    return r


def _g2_rem(a: int, b: int) -> int:
    db = b.bit_length()
    da = a.bit_length()
    while da >= db:
        a ^= b << (da - db)
        da = a.bit_length()
    return a


def _g2_powmod(base: int, e: int, f: int) -> int:
    r = 1
    base = _g2_rem(base, f)
    while e:
        if e & 1:
            r = _g2_rem(_g2_clmul(r, base), f)
        base = _g2_rem(_g2_clmul(base, base), f)
        e >>= 1
    return r


def _g2_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _g2_rem(a, b)
    return a


def _g2_irreducible(fpacked: int, deg: int) -> bool:
    x = 2
    if _g2_powmod(x, 1 << deg, fpacked) != x:
        return False
    for p in _prime_factors(deg):
        h = _g2_powmod(x, 1 << (deg // p), fpacked) ^ x
        if _g2_gcd(fpacked, h).bit_length() > 1:
            return False
    return True


def _pq_trim(a: list[int]) -> list[int]:
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return a[:i]


def _pq_rem(a: list[int], b: list[int], q: int) -> list[int]:
    a = a[:]
    db = len(b) - 1
    inv_lead = pow(b[db], -1, q)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            scale = (c * inv_lead) % q
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - scale * b[j]) % q
    return _pq_trim(a[:db])


def _pq_mulmod(a: list[int], b: list[int], f: list[int], q: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    out = [v % q for v in out]
    return _pq_rem(out, f, q)


def _pq_powmod(base: list[int], e: int, f: list[int], q: int) -> list[int]:
    r = [1]
    base = _pq_rem(base, f, q)
    while e:
        if e & 1:
            r = _pq_mulmod(r, base, f, q)
        base = _pq_mulmod(base, base, f, q)
        e >>= 1
    return r


def _pq_gcd(a: list[int], b: list[int], q: int) -> list[int]:
    a, b = _pq_trim(a[:]), _pq_trim(b[:])
    while b:
        a, b = b, _pq_rem(a, b, q)
    return a


def _pq_irreducible(coeffs: list[int], q: int) -> bool:
    deg = len(coeffs) - 1
    x = [0, 1]
    if _pq_trim(_pq_powmod(x, q**deg, coeffs, q)) != x:
        return False
    for p in _prime_factors(deg):
        h = _pq_powmod(x, q ** (deg // p), coeffs, q)
        h = h + [0] * (2 - len(h))
        h[1] = (h[1] - 1) % q
        if len(_pq_gcd(coeffs, h, q)) > 1:
            return False
    return True


@functools.lru_cache(maxsize=None)
def canonical_modulus(q: int, n: int) -> tuple[int, ...]:
    """First monic irreducible of degree 2n over F_q in base-q coefficient order.

    Candidates X^(2n) + a_{2n-1} X^(2n-1) + ... + a_0 are ordered by the value
    of (a_0, ..., a_{2n-1}) read as a base-q integer with a_0 least
    significant; the first irreducible wins.  Returns the full coefficient
    tuple (a_0, ..., a_{2n-1}, 1).
    """
    deg = 2 * n
    c = 0
    while True:
        digits = []
        v = c
        for _ in range(deg):
            digits.append(v % q)
            v //= q
        if v == 0:
            if q == 2:
                # for q = 2 the digit vector is exactly the binary expansion of c
                ok = _g2_irreducible((1 << deg) | c, deg)
            else:
                ok = _pq_irreducible(digits + [1], q)
            if ok:
                return tuple(digits) + (1,)
        c += 1
        if c > q**deg:  # pragma: no cover - irreducibles always exist
            raise RuntimeError("modulus scan overflow")


# ---------------------------------------------------------------------------
# Prime-field linear algebra, used for subfield bases and rank shortcuts.
# ---------------------------------------------------------------------------


def _fq_rref(rows: list[list[int]], q: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form mod q; returns (rows, pivot column list)."""
    rows = [r[:] for r in rows]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] % q != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][c], -1, q)
        rows[r] = [(v * inv) % q for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % q:
                f = rows[i][c] % q
                rows[i] = [(a - f * b) % q for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def _fq_kernel(rows: list[list[int]], q: int) -> list[list[int]]:
    """Canonical basis of the right kernel of the matrix, ordered by free column."""
    ncols = len(rows[0]) if rows else 0
    rref, pivots = _fq_rref(rows, q)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [0] * ncols
        vec[free] = 1
        for prow, pcol in enumerate(pivots):
            vec[pcol] = (-rref[prow][free]) % q
        basis.append(vec)
    return basis


def _fq_rank(rows: list[list[int]], q: int) -> int:
    return len(_fq_rref(rows, q)[1])


def _f2_rank(rows: list[int]) -> int:
    """Rank of a matrix over F_2 whose rows are packed ints."""
    rank = 0
    pool = [r for r in rows if r]
    while pool:
        pivot = pool.pop()
        rank += 1
        top = 1 << (pivot.bit_length() - 1)
        pool = [(r ^ pivot) if r & top else r for r in pool]
        pool = [r for r in pool if r]
    return rank


# ---------------------------------------------------------------------------
# Field contexts.
# ---------------------------------------------------------------------------


class FieldContext:
    """Arithmetic context for K = F_{q^(2n)} with its canonical modulus.

    Use :func:`make_context` to build one.  Two contexts built from the same
    (q, n) are interchangeable; every derived table is deterministic.
    """

    def __init__(self, q: int, n: int, modulus: tuple[int, ...]):
        self.q = q
        self.n = n
        self.deg = 2 * n
        self.modulus = modulus
        self._setup_engine()
        self.gen = self.from_coeffs([0, 1] + [0] * (self.deg - 2))
        self._frob: dict[int, tuple] = {}
        self._trace_tbl: tuple | None = None
        self._subfield_bases: dict[int, tuple] = {}
        self._subfield_elems: dict[int, tuple] = {}
        self._fq2_w: Felt | None = None
        self._q1_factors: list[int] | None = None

    # -- primitive arithmetic supplied by subclasses ------------------------

    def _setup_engine(self) -> None:
        raise NotImplementedError

    def add(self, a: Felt, b: Felt) -> Felt:
        raise NotImplementedError

    def sub(self, a: Felt, b: Felt) -> Felt:
        raise NotImplementedError

    def neg(self, a: Felt) -> Felt:
        raise NotImplementedError

    def mul(self, a: Felt, b: Felt) -> Felt:
        raise NotImplementedError

    def inv(self, a: Felt) -> Felt:
        raise NotImplementedError

    def from_coeffs(self, coeffs: Sequence[int]) -> Felt:
        raise NotImplementedError

    def to_coeffs(self, a: Felt) -> list[int]:
        raise NotImplementedError

    def _apply_linear(self, tbl: Sequence[Felt], a: Felt) -> Felt:
        """Apply an F_q-linear map given by its images of the monomial basis."""
        raise NotImplementedError

    # -- shared operations --------------------------------------------------

    def from_base(self, c: int) -> Felt:
        """Embed an integer residue as a constant, i.e. an F_q element."""
        return self.from_coeffs([c % self.q] + [0] * (self.deg - 1))

    def pow_elem(self, a: Felt, e: int) -> Felt:
        r = self.one
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def frob_images(self, j: int) -> tuple:
        """Images (X^i)^(q^j) of the monomial basis, i = 0 .. 2n-1."""
        j %= self.deg
        tbl = self._frob.get(j)
        if tbl is None:
            if j == 0:
                y = self.gen
            elif j == 1:
                y = self.pow_elem(self.gen, self.q)
            else:
                # X^(q^j) is the q-power image of X^(q^(j-1))
                y = self._apply_linear(self.frob_images(1), self.frob_images(j - 1)[1])
            p = self.one
            out = [p]
            for _ in range(self.deg - 1):
                p = self.mul(p, y)
                out.append(p)
            tbl = tuple(out)
            self._frob[j] = tbl
        return tbl

    def frobenius(self, a: Felt, j: int) -> Felt:
        """a^(q^j) with j taken mod 2n."""
        j %= self.deg
        if j == 0:
            return a
        return self._apply_linear(self.frob_images(j), a)

    def rel_trace(self, a: Felt) -> Felt:
        """Trace down to F_{q^2}: the sum of a^(q^(2i)) for i = 0 .. n-1."""
        if self._trace_tbl is None:
            acc = list(self.frob_images(0))
            for i in range(1, self.n):
                imgs = self.frob_images(2 * i)
                acc = [self.add(x, y) for x, y in zip(acc, imgs)]
            self._trace_tbl = tuple(acc)
        return self._apply_linear(self._trace_tbl, a)

    def in_subfield(self, a: Felt, e: int) -> bool:
        """True when a lies in F_{q^e}; e must divide 2n."""
        if e <= 0 or (2 * self.n) % e != 0:
            raise NotADivisorError(f"subfield degree {e} does not divide {2 * self.n}")
        return self.frobenius(a, e) == a

    def subfield_basis(self, e: int) -> tuple:
        """Canonical F_q-basis of F_{q^e} inside K (kernel of Frobenius^e - id)."""
        if e <= 0 or (2 * self.n) % e != 0:
            raise NotADivisorError(f"subfield degree {e} does not divide {2 * self.n}")
        cached = self._subfield_bases.get(e)
        if cached is not None:
            return cached
        if e == self.deg:
            basis = tuple(self.frob_images(0))
        else:
            imgs = self.frob_images(e)
            rows = []
            cols = [self.to_coeffs(imgs[i]) for i in range(self.deg)]
            for r in range(self.deg):
                row = [(cols[i][r] - (1 if i == r else 0)) % self.q for i in range(self.deg)]
                rows.append(row)
            kern = _fq_kernel(rows, self.q)
            assert len(kern) == e, "Frobenius fixed field has the wrong dimension"
            basis = tuple(self.from_coeffs(v) for v in kern)
        self._subfield_bases[e] = basis
        return basis

    def subfield_elements(self, e: int) -> tuple:
        """All q^e elements of F_{q^e}, in canonical digit order.  Small e only."""
        cached = self._subfield_elems.get(e)
        if cached is not None:
            return cached
        basis = self.subfield_basis(e)
        elems = [self.zero]
        for b in basis:
            scaled = [self.mul(self.from_base(c), b) for c in range(self.q)]
            elems = [self.add(z, s) for z in elems for s in scaled]
        out = tuple(elems)
        self._subfield_elems[e] = out
        return out

    def fq2_w(self) -> Felt:
        """Canonical element with F_{q^2} = F_q + F_q * w."""
        if self._fq2_w is None:
            for b in self.subfield_basis(2):
                if not self.in_subfield(b, 1):
                    self._fq2_w = b
                    break
            else:  # pragma: no cover - basis always spans past F_q
                raise RuntimeError("degenerate F_{q^2} basis")
        return self._fq2_w

    def fq2_coords(self, a: Felt) -> tuple[int, int]:
        """Coordinates (s, t) with a = s + t*w for a in F_{q^2}."""
        w = self.fq2_w()
        wc = self.to_coeffs(w)
        pivot = next(i for i in range(1, self.deg) if wc[i])
        ac = self.to_coeffs(a)
        t = (ac[pivot] * pow(wc[pivot], -1, self.q)) % self.q
        s = (ac[0] - t * wc[0]) % self.q
        return s, t

    def solve_hermitian_norm(self, a: Felt) -> Felt:
        """Solve c^(q+1) = a for c in F_{q^2}, given nonzero a in F_q.

        The norm from F_{q^2} down to F_q is surjective, so a solution always
        exists.  For odd q it is found by a baby-step/giant-step discrete log
        in F_q* against the norm of a fixed norm-generating element; for q = 2
        the only valid input is 1.
        """
        if a == self.zero:
            raise ZeroInputError("norm equation needs a nonzero right-hand side")
        if not self.in_subfield(a, 1):
            raise NotInSubfieldError("right-hand side of the norm equation must lie in F_q")
        q = self.q
        if q == 2:
            return self.one
        a_int = self.to_coeffs(a)[0]
        if self._q1_factors is None:
            self._q1_factors = _prime_factors(q - 1)
        u1, u2 = self.subfield_basis(2)
        g = None
        h_int = 0
        for idx in range(1, 64 * q):
            i, j = divmod(idx, q)
            cand = self.add(self.mul(self.from_base(i), u1), self.mul(self.from_base(j), u2))
            if cand == self.zero:
                continue
            h = self.mul(self.frobenius(cand, 1), cand)
            h_int = self.to_coeffs(h)[0]
            if h_int and all(pow(h_int, (q - 1) // p, q) != 1 for p in self._q1_factors):
                g = cand
                break
        if g is None:  # pragma: no cover - generators are dense
            raise RuntimeError("no norm generator found")
        # discrete log of a_int to base h_int in F_q*
        m = math.isqrt(q - 1) + 1
        baby = {}
        v = 1
        for jj in range(m):
            baby.setdefault(v, jj)
            v = (v * h_int) % q
        giant = pow(h_int, -m, q)
        s = None
        v = a_int
        for ii in range(m + 1):
            if v in baby:
                s = ii * m + baby[v]
                break
            v = (v * giant) % q
        if s is None:  # pragma: no cover - dlog always exists for a generator
            raise RuntimeError("discrete log failed")
        c = self.pow_elem(g, s)
        assert self.mul(self.frobenius(c, 1), c) == a
        return c

    # -- serialization ------------------------------------------------------

    def to_json_obj(self) -> dict:
        return {"q": self.q, "n": self.n, "modulus": list(self.modulus)}

    def felt_to_json(self, a: Felt) -> list[int]:
        return self.to_coeffs(a)

    def felt_from_json(self, obj: Iterable[int]) -> Felt:
        coeffs = list(obj)
        if len(coeffs) != self.deg:
            raise ValueError(f"element needs exactly {self.deg} coefficients")
        return self.from_coeffs(coeffs)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"FieldContext(q={self.q}, n={self.n})"


class _Gf2Context(FieldContext):
    """Bit-packed engine for q = 2."""

    def _setup_engine(self) -> None:
        deg = self.deg
        self.zero = 0
        self.one = 1
        self._mask = (1 << deg) - 1
        fpacked = 0
        for i, c in enumerate(self.modulus):
            if c:
                fpacked |= 1 << i
        self._fpacked = fpacked
        # images of X^(deg+s) reduced mod f, for the byte reduction tables
        mono = []
        v = fpacked ^ (1 << deg)
        for _ in range(deg - 1):
            mono.append(v)
            v <<= 1
            if v >> deg & 1:
                v ^= fpacked
        nbytes = (deg - 1 + 7) // 8
        rtab = []
        for k in range(nbytes):
            row = [0] * 256
            for byte in range(1, 256):
                acc = 0
                b = byte
                while b:
                    bit = (b & -b).bit_length() - 1
                    pos = 8 * k + bit
                    if pos < len(mono):
                        acc ^= mono[pos]
                    b &= b - 1
                row[byte] = acc
            rtab.append(row)
        self._rtab = rtab

    def add(self, a, b):
        return a ^ b

    sub = add

    def neg(self, a):
        return a

    def mul(self, a, b):
        if a < 2 or b < 2:
            return a * b
        # 4-bit windowed carry-less multiply
        t = [0, b]
        for i in range(1, 8):
            d = t[i] << 1
            t.append(d)
            t.append(d ^ b)
        p = 0
        sh = 0
        while a:
            w = a & 15
            if w:
                p ^= t[w] << sh
            a >>= 4
            sh += 4
        hi = p >> self.deg
        p &= self._mask
        k = 0
        while hi:
            p ^= self._rtab[k][hi & 255]
            hi >>= 8
            k += 1
        return p

    def inv(self, a):
        if a == 0:
            raise ZeroInputError("inverse of zero")
        u, v = a, self._fpacked
        g1, g2 = 1, 0
        while u != 1:
            du, dv = u.bit_length(), v.bit_length()
            if du < dv:
                u, v = v, u
                g1, g2 = g2, g1
                du, dv = dv, du
            sh = du - dv
            u ^= v << sh
            g1 ^= g2 << sh
        return g1

    def from_coeffs(self, coeffs):
        if len(coeffs) != self.deg:
            raise ValueError(f"element needs exactly {self.deg} coefficients")
        v = 0
        for i, c in enumerate(coeffs):
            if c not in (0, 1):
                raise ValueError("coefficients must be reduced mod 2")
            if c:
                v |= 1 << i
        return v

    def to_coeffs(self, a):
        return [(a >> i) & 1 for i in range(self.deg)]

    def _apply_linear(self, tbl, a):
        acc = 0
        while a:
            i = (a & -a).bit_length() - 1
            acc ^= tbl[i]
            a &= a - 1
        return acc


class _OddContext(FieldContext):
    """Coefficient-tuple engine for odd prime q."""

    def _setup_engine(self) -> None:
        q, deg = self.q, self.deg
        self.zero = (0,) * deg
        self.one = (1,) + (0,) * (deg - 1)
        # images of X^(deg+s) reduced mod f, for product reduction
        red = []
        v = [(-c) % q for c in self.modulus[:deg]]
        for _ in range(deg - 1):
            red.append(tuple(v))
            carry = v[deg - 1]
            v = [0] + v[: deg - 1]
            if carry:
                v = [(x + carry * r) % q for x, r in zip(v, red[0])]
        self._red = red
        self._modlist = list(self.modulus)

    def add(self, a, b):
        q = self.q
        return tuple((x + y) % q for x, y in zip(a, b))

    def sub(self, a, b):
        q = self.q
        return tuple((x - y) % q for x, y in zip(a, b))

    def neg(self, a):
        q = self.q
        return tuple((-x) % q for x in a)

    def mul(self, a, b):
        q, deg = self.q, self.deg
        prod = [0] * (2 * deg - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        acc = prod[:deg]
        red = self._red
        for s in range(deg - 1):
            hi = prod[deg + s]
            if hi:
                row = red[s]
                for k in range(deg):
                    acc[k] += hi * row[k]
        return tuple(v % q for v in acc)

    def inv(self, a):
        if a == self.zero:
            raise ZeroInputError("inverse of zero")
        q = self.q
        # extended Euclid; s1 tracks the coefficient of a, so the final
        # constant remainder c satisfies s1 * a = c (mod f)
        r0, r1 = self._modlist, _pq_trim(list(a))
        s0, s1 = [], [1]
        while len(r1) > 1:
            qpoly, rem = self._divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, self._poly_sub(s0, self._poly_mul(qpoly, s1))
        scale = pow(r1[0], -1, q)
        out = [(scale * c) % q for c in s1]
        out = out + [0] * (self.deg - len(out))
        return tuple(out)

    def _poly_mul(self, a, b):
        if not a or not b:
            return []
        q = self.q
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] = (out[i + j] + x * y) % q
        return _pq_trim(out)

    def _poly_sub(self, a, b):
        q = self.q
        m = max(len(a), len(b))
        a = a + [0] * (m - len(a))
        b = b + [0] * (m - len(b))
        return _pq_trim([(x - y) % q for x, y in zip(a, b)])

    def _divmod(self, a, b):
        q = self.q
        a = a[:]
        db = len(b) - 1
        inv_lead = pow(b[db], -1, q)
        quot = [0] * max(1, len(a) - db)
        for i in range(len(a) - 1, db - 1, -1):
            c = a[i] % q
            if c:
                scale = (c * inv_lead) % q
                quot[i - db] = scale
                for j in range(db + 1):
                    a[i - db + j] = (a[i - db + j] - scale * b[j]) % q
        return _pq_trim(quot), _pq_trim(a[:db])

    def from_coeffs(self, coeffs):
        if len(coeffs) != self.deg:
            raise ValueError(f"element needs exactly {self.deg} coefficients")
        for c in coeffs:
            if not (0 <= c < self.q):
                raise ValueError("coefficients must be reduced mod q")
        return tuple(coeffs)

    def to_coeffs(self, a):
        return list(a)

    def _apply_linear(self, tbl, a):
        q, deg = self.q, self.deg
        acc = [0] * deg
        for i, c in enumerate(a):
            if c:
                row = tbl[i]
                for k in range(deg):
                    acc[k] += c * row[k]
        return tuple(v % q for v in acc)


def make_context(q: int, n: int) -> FieldContext:
    """Build the arithmetic context for F_{q^(2n)} over prime q and odd n.

    Raises NotPrimeError, EvenExtensionError or TooLargeError when the
    parameters are out of range; elements must pack into 64 bits, i.e.
    q^(2n) <= 2^64.
    """
    if not isinstance(q, int) or not _is_prime(q):
        raise NotPrimeError(f"q = {q} is not a prime")
    if not isinstance(n, int) or n < 1 or n % 2 == 0:
        raise EvenExtensionError(f"n = {n} is not a positive odd integer")
    if q ** (2 * n) > 2**_ELEMENT_BIT_BUDGET:
        raise TooLargeError(f"q^(2n) = {q}^{2 * n} exceeds the 64-bit element budget")
    modulus = canonical_modulus(q, n)
    cls = _Gf2Context if q == 2 else _OddContext
    return cls(q, n, modulus)


def context_from_json_obj(obj: dict) -> FieldContext:
    """Rebuild a context from {"q", "n", "modulus"} and cross-check the modulus."""
    ctx = make_context(int(obj["q"]), int(obj["n"]))
    if list(ctx.modulus) != [int(c) for c in obj["modulus"]]:
        raise ValueError("modulus in file does not match the canonical modulus")
    return ctx
