"""Quadratic exponential sums over F_q[t], from Gauss sums to arc integrals.

Every quantity here comes in two independent flavors where a closed form
exists: a *direct* evaluator that sums characters term by term, and a
*closed* evaluator implementing the multiplicative formula.  The test
suite insists the two agree exactly; the counting layer then leans on
the closed forms only.

The hierarchy, for a diagonal form f = a_1 X_1^2 + ... + a_n X_n^2:

* ``gauss_sum(r)``                 tau_r = sum psi(x^2 / r) over residues
* ``twisted_gauss_sum(a, r)``      same with numerator a
* ``form_exp_sum(f, a, r)``        the n-variable complete sum
* ``local_factor_direct(f, r)``    summed over numerators coprime to r
* ``weyl_sum(f, a, r, tail, P)``   S(alpha) over the height box |x| < q^P
* ``arc_integral_direct(f, r, P)`` integral of S over the arc ball at a/r
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .characters import LaurentTail, ball_integral, ratio_char_exponent, tail_char_exponent
from .cyclotomic import CycInt, QScaled
from .field import FieldCtx
from .polyring import (
    Factorization,
    Poly,
    enumerate_below,
    euler_phi,
    factorize,
    is_irreducible,
    jacobi_symbol,
    poly_gcd,
    _legendre,
)


def qpow(q: int, e: int) -> Fraction:
    """q**e as an exact Fraction for any integer exponent."""
    return Fraction(q**e) if e >= 0 else Fraction(1, q ** (-e))


class CaseTag(Enum):
    """Shape of the quadric: even rank splits by the square class of the
    signed determinant, odd rank is a single case."""

    SPLIT_EVEN = "split_even"
    NONSPLIT_EVEN = "nonsplit_even"
    ODD = "odd"


@dataclass(frozen=True)
class QuadForm:
    """Diagonal quadratic form sum(a_i X_i^2) with unit coefficients."""

    ctx: FieldCtx
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not self.coeffs:
            raise ValueError("a quadratic form needs at least one variable")
        for a in self.coeffs:
            if not 0 < a < self.ctx.q:
                raise ValueError("diagonal coefficients must be nonzero field elements")

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def det_unit(self) -> int:
        """Product of the diagonal coefficients."""
        out = 1
        for a in self.coeffs:
            out = self.ctx.mul(out, a)
        return out

    def signed_det_unit(self) -> int:
        """(-1)^(n/2) * det for even n; the unit whose square class splits the cases."""
        if self.n % 2:
            raise ValueError("signed determinant only drives the even-rank cases")
        d = self.det_unit()
        if (self.n // 2) % 2:
            d = self.ctx.neg(d)
        return d

    def value(self, xs) -> Poly:
        xs = list(xs)
        if len(xs) != self.n:
            raise ValueError("wrong number of coordinates")
        acc = Poly.zero(self.ctx)
        for a, x in zip(self.coeffs, xs):
            acc = acc + (x * x).scale(a)
        return acc

    def __str__(self):
        return " + ".join(f"{a}*X{i + 1}^2" for i, a in enumerate(self.coeffs))


# ---------------------------------------------------------------------------
# Gauss sums


def _require_monic(r: Poly) -> None:
    if not r.is_monic():
        raise ValueError("modulus must be monic")


def gauss_sum(r: Poly) -> CycInt:
    """tau_r = sum over |x| < |r| of psi(x^2 / r), term by term."""
    _require_monic(r)
    ctx = r.ctx
    counts = [0] * ctx.p
    for x in enumerate_below(ctx, len(r.coeffs) - 1):
        counts[ratio_char_exponent(x * x, r)] += 1
    return CycInt.from_exponent_counts(ctx.p, counts)


def gauss_sum_prime_power(pi: Poly, k: int) -> CycInt:
    """Closed form of tau_(pi^k) for monic irreducible pi.

    Even k gives the rational integer |pi|^(k/2); odd k reduces to the
    degree-one-layer sum tau_pi times |pi|^((k-1)/2), so no square roots
    or fourth roots of unity are ever materialized.
    """
    if k < 1:
        raise ValueError("exponent must be >= 1")
    if not is_irreducible(pi) or not pi.is_monic():
        raise ValueError("base must be monic irreducible")
    ctx = pi.ctx
    size = ctx.q ** (len(pi.coeffs) - 1)
    if k % 2 == 0:
        return CycInt.from_int(ctx.p, size ** (k // 2))
    return gauss_sum(pi) * (size ** ((k - 1) // 2))


def twisted_gauss_sum(a: Poly, r: Poly) -> CycInt:
    """sum over |x| < |r| of psi(a x^2 / r);  a need not be coprime to r."""
    _require_monic(r)
    ctx = r.ctx
    counts = [0] * ctx.p
    for x in enumerate_below(ctx, len(r.coeffs) - 1):
        counts[ratio_char_exponent(a * x * x, r)] += 1
    return CycInt.from_exponent_counts(ctx.p, counts)


def twisted_gauss_sum_prime_power(a: Poly, pi: Poly, k: int) -> CycInt:
    """(a / pi)^k * tau_(pi^k); requires gcd(a, pi) = 1."""
    if k < 1:
        raise ValueError("exponent must be >= 1")
    if not is_irreducible(pi) or not pi.is_monic():
        raise ValueError("base must be monic irreducible")
    if a.is_zero() or not (a % pi):
        raise ValueError("numerator must be coprime to the base")
    sym = _legendre(a, pi) ** (k % 2)
    return gauss_sum_prime_power(pi, k) * sym


# ---------------------------------------------------------------------------
# complete sums of the form


def _exponent_tables(f: QuadForm, a: Poly, r: Poly) -> list[list[int]]:
    """Per variable, the list of psi-exponents of a*a_i*x^2/r over residues x."""
    ctx = f.ctx
    residues = list(enumerate_below(ctx, len(r.coeffs) - 1))
    tables = []
    for ai in f.coeffs:
        scaled = a.scale(ai)
        tables.append([ratio_char_exponent(scaled * x * x, r) for x in residues])
    return tables


def form_exp_sum(f: QuadForm, a: Poly, r: Poly) -> CycInt:
    """The complete n-variable sum  sum psi(a f(b) / r)  over residue tuples b.

    Enumerates every tuple; the per-coordinate character exponents are
    precomputed, so a term costs n table lookups and a mod-p sum.
    """
    _require_monic(r)
    ctx = f.ctx
    p = ctx.p
    tables = _exponent_tables(f, a, r)
    counts = [0] * p
    size = len(tables[0])
    idx = [0] * f.n
    total = size**f.n
    # odometer over residue tuples, maintaining the partial exponent sum
    exps = [0] * (f.n + 1)
    k = 0
    counts_local = counts
    while True:
        while k < f.n:
            exps[k + 1] = (exps[k] + tables[k][idx[k]]) % p
            k += 1
        counts_local[exps[f.n]] += 1
        k = f.n - 1
        while k >= 0:
            idx[k] += 1
            if idx[k] < size:
                break
            idx[k] = 0
            k -= 1
        if k < 0:
            break
    assert sum(counts) == total
    return CycInt.from_exponent_counts(p, counts)


def local_factor_direct(f: QuadForm, r: Poly) -> CycInt:
    """S_r(f): form_exp_sum summed over numerators coprime to r."""
    _require_monic(r)
    ctx = f.ctx
    total = CycInt.zero(ctx.p)
    for a in enumerate_below(ctx, len(r.coeffs) - 1):
        if poly_gcd(a, r).is_one():
            total = total + form_exp_sum(f, a, r)
    return total


def local_factor_prime_power(f: QuadForm, pi: Poly, k: int) -> int:
    """Closed form of S_(pi^k)(f); an ordinary integer in every case.

    Even n:  (signed-det / pi)^k * phi(pi^k) * |pi^k|^(n/2).
    Odd n:   phi(pi^k) * |pi^k|^(n/2) for even k, else 0.
    """
    if k < 1:
        raise ValueError("exponent must be >= 1")
    if not is_irreducible(pi) or not pi.is_monic():
        raise ValueError("base must be monic irreducible")
    ctx = f.ctx
    d = len(pi.coeffs) - 1
    size = ctx.q**d
    phi = (size - 1) * size ** (k - 1)
    if f.n % 2 == 0:
        sym = _legendre(Poly.constant(ctx, f.signed_det_unit()), pi) ** (k % 2)
        return sym * phi * size ** (k * f.n // 2)
    if k % 2 == 0:
        return phi * size ** (k * f.n // 2)
    return 0


def local_factor_closed(f: QuadForm, r: Poly, fac: Factorization | None = None) -> int:
    """Closed form of S_r(f) for monic r; multiplicative over coprime factors.

    Even n:  (signed-det / r) * phi(r) * |r|^(n/2).
    Odd n:   phi(r) * |r|^(n/2) when r is a square, else 0.
    """
    _require_monic(r)
    if r.is_one():
        return 1
    ctx = f.ctx
    if fac is None:
        fac = factorize(r)
    rho = len(r.coeffs) - 1
    phi = euler_phi(r, fac)
    if f.n % 2 == 0:
        sym = jacobi_symbol(Poly.constant(ctx, f.signed_det_unit()), r, fac)
        return sym * phi * ctx.q ** (rho * f.n // 2)
    if fac.is_square():
        return phi * ctx.q ** (rho * f.n // 2)  # rho is even here
    return 0


# ---------------------------------------------------------------------------
# Weyl sums over the height box and their arc integrals


def weyl_sum(f: QuadForm, a: Poly, r: Poly, tail: LaurentTail, P: int) -> CycInt:
    """S(alpha) = sum over x in F_q[t]^n, each |x_i| < q^P, of psi(alpha f(x)),
    at the point alpha = a/r + theta where theta has the given tail.

    A term's exponent splits as psi(a f(x)/r) * psi(theta f(x)); both
    parts are read off exactly.  S at alpha = 0 is q^(nP).
    """
    _require_monic(r)
    if P < 1:
        raise ValueError("the box exponent P must be >= 1")
    ctx = f.ctx
    p = ctx.p
    xs = list(enumerate_below(ctx, P))
    values = [[(x * x).scale(ai) for x in xs] for ai in f.coeffs]
    rational = not a.is_zero()
    counts = [0] * p
    idx = [0] * f.n
    partial = [Poly.zero(ctx)] * (f.n + 1)
    k = 0
    size = len(xs)
    while True:
        while k < f.n:
            partial[k + 1] = partial[k] + values[k][idx[k]]
            k += 1
        v = partial[f.n]
        e = tail_char_exponent(tail, v)
        if rational:
            e = (e + ratio_char_exponent(a * v, r)) % p
        counts[e] += 1
        k = f.n - 1
        while k >= 0:
            idx[k] += 1
            if idx[k] < size:
                break
            idx[k] = 0
            k -= 1
        if k < 0:
            break
    return CycInt.from_exponent_counts(p, counts)


def arc_integral_direct(f: QuadForm, r: Poly, P: int) -> QScaled:
    """Integral of S(theta) over the arc ball |theta| < q^(-deg r - P).

    Evaluated as an exact finite average of Weyl sums; S only depends on
    tail indices up to 2P - 1 because deg f(x) <= 2P - 2 on the box.
    """
    _require_monic(r)
    rho = len(r.coeffs) - 1
    if P < 1:
        raise ValueError("the box exponent P must be >= 1")
    if rho > P:
        raise ValueError("arc integrals are only defined for deg r <= P")
    ctx = f.ctx
    one = Poly.one(ctx)
    zero = Poly.zero(ctx)

    def functional(tail: LaurentTail) -> CycInt:
        return weyl_sum(f, zero, one, tail, P)

    return ball_integral(ctx, -(rho + P), 2 * P - 1, functional)


def arc_integral_closed(f: QuadForm, r: Poly, P: int) -> Fraction:
    """Closed form of the arc integral as an exact rational.

    For deg r = P the ball is too small for S to oscillate and the value
    is q^(P(n-2)); otherwise it is a short geometric layer sum weighted
    by closed local factors at powers of t.
    """
    _require_monic(r)
    rho = len(r.coeffs) - 1
    if P < 1:
        raise ValueError("the box exponent P must be >= 1")
    if rho > P:
        raise ValueError("arc integrals are only defined for deg r <= P")
    ctx = f.ctx
    q = ctx.q
    n = f.n
    if rho == P:
        return qpow(q, P * (n - 2))
    acc = Fraction(0)
    for k in range(P - rho):
        s = local_factor_closed(f, Poly.t_power(ctx, P - rho - k - 1))
        acc += Fraction(q ** (n * k) * s)
    return qpow(q, n * rho + n + 1 - 2 * P) * acc
