"""Polynomial ring over F_q: arithmetic, factorization, phi, Jacobi symbols."""

import random

import pytest

from quadricpoints import (
    Poly,
    enumerate_below,
    enumerate_monic,
    euler_phi,
    factorize,
    irreducibles,
    jacobi_symbol,
    moebius,
    poly_from_encoding,
    poly_gcd,
    poly_square_root,
)
from quadricpoints.polyring import NEG_INF, is_irreducible


def _random_poly(ctx, rng, maxdeg):
    d = rng.randrange(maxdeg + 1)
    return Poly(ctx, [rng.randrange(ctx.q) for _ in range(d + 1)])


def test_construction_and_degree(F3):
    z = Poly.zero(F3)
    assert z.deg == NEG_INF and z.is_zero() and z.absval == 0
    one = Poly.one(F3)
    assert one.deg == 0 and one.absval == 1
    t = Poly.gen(F3)
    assert t.deg == 1 and str(t) == "t"
    f = Poly(F3, [1, 2, 0, 0])  # trailing zeros trimmed
    assert f.deg == 1 and f.coeffs == (1, 2)
    assert Poly.t_power(F3, 4).deg == 4


def test_arithmetic_identities(F3, F9):
    rng = random.Random(7)
    for ctx in (F3, F9):
        for _ in range(60):
            a = _random_poly(ctx, rng, 5)
            b = _random_poly(ctx, rng, 4)
            assert (a + b) - b == a
            assert a * b == b * a
            if not b.is_zero():
                quo, rem = divmod(a, b)
                assert quo * b + rem == a
                assert rem.is_zero() or rem.deg < b.deg


def test_evaluate_horner(F5):
    f = Poly(F5, [1, 2, 3])  # 3t^2 + 2t + 1
    for x in F5.elements():
        direct = (3 * x * x + 2 * x + 1) % 5
        assert f.evaluate(x) == direct


def test_gcd_is_monic_and_divides(F3):
    t = Poly.gen(F3)
    one = Poly.one(F3)
    two = Poly.constant(F3, 2)
    a = (t + one) * (t + two) * (t + two)
    b = (t + two) * t
    g = poly_gcd(a, b)
    assert g.is_monic()
    assert (a % g).is_zero() and (b % g).is_zero()
    assert g == t + two
    with pytest.raises(ValueError):
        poly_gcd(Poly.zero(F3), Poly.zero(F3))


def test_irreducible_counts(F3, F9):
    # number of monic irreducibles of degree d over F_q:
    # (1/d) sum_{e | d} mu(e) q^(d/e)
    def expected(q, d):
        total = 0
        for e in range(1, d + 1):
            if d % e:
                continue
            fac, m, mu = e, 2, 1
            while m * m <= fac:
                if fac % m == 0:
                    fac //= m
                    if fac % m == 0:
                        mu = 0
                        break
                    mu = -mu
                m += 1
            else:
                if fac > 1:
                    mu = -mu
            if mu:
                total += mu * q ** (d // e)
        return total // d

    for ctx in (F3, F9):
        for d in (1, 2, 3):
            got = sum(1 for _ in irreducibles(ctx, d))
            assert got == expected(ctx.q, d)


def test_factorize_round_trip_exhaustive_deg3(F3):
    for enc in range(1, 3**4):
        f = poly_from_encoding(F3, enc)
        fac = factorize(f)
        assert fac.expand(F3) == f
        for pi, _ in fac.factors:
            assert pi.is_monic() and is_irreducible(pi)


def test_factorize_repeated_and_derivative_zero(F3):
    t = Poly.gen(F3)
    # (t+1)^3 = t^3 + 1 has zero derivative in characteristic 3
    f = (t + Poly.one(F3)) ** 3
    fac = factorize(f)
    assert fac.factors == (((t + Poly.one(F3)), 3),)
    g = (t**3 - t) * (t**3 - t)  # squarefull with three distinct roots
    fac2 = factorize(g)
    assert fac2.expand(F3) == g
    assert all(k == 2 for _, k in fac2.factors)


def test_factorize_is_deterministic(F5):
    rng = random.Random(13)
    for _ in range(20):
        f = _random_poly(F5, rng, 6)
        if f.is_zero():
            continue
        a = factorize(f)
        b = factorize(f)
        assert a.unit == b.unit and a.factors == b.factors


def test_factorize_extension_field(F9):
    rng = random.Random(99)
    for _ in range(10):
        f = _random_poly(F9, rng, 4)
        if f.is_zero():
            continue
        assert factorize(f).expand(F9) == f


def test_euler_phi(F3):
    t = Poly.gen(F3)
    one = Poly.one(F3)
    two = Poly.constant(F3, 2)
    assert euler_phi(Poly.one(F3)) == 1
    assert euler_phi(t) == 2
    assert euler_phi(t * t) == 6
    assert euler_phi(t * (t + one)) == 4
    # multiplicative on coprime parts, |pi|^(k-1) (|pi| - 1) on powers
    f = t**2 * (t + two)
    assert euler_phi(f) == 6 * 2
    # phi counts coprime residues
    count = sum(
        1 for a in enumerate_below(F3, 2) if not a.is_zero() and poly_gcd(a, t * t).is_one()
    )
    assert count == 6


def test_moebius(F3):
    t = Poly.gen(F3)
    one = Poly.one(F3)
    assert moebius(Poly.one(F3)) == 1
    assert moebius(t) == -1
    assert moebius(t * (t + one)) == 1
    assert moebius(t * t) == 0


def test_jacobi_symbol_basics(F3):
    t = Poly.gen(F3)
    r = t * t + Poly.one(F3)  # irreducible over F_3
    squares = set()
    for a in enumerate_below(F3, 2):
        if not poly_gcd(a, r).is_one():
            continue
        squares.add(((a * a) % r).encoding())
    for a in enumerate_below(F3, 2):
        if a.is_zero():
            continue
        chi = jacobi_symbol(a, r)
        if not poly_gcd(a, r).is_one():
            assert chi == 0
        else:
            assert chi == (1 if (a % r).encoding() in squares else -1)


def test_jacobi_multiplicative(F3):
    t = Poly.gen(F3)
    r = t * (t + Poly.one(F3))
    for ea in range(1, 9):
        for eb in range(1, 9):
            a = poly_from_encoding(F3, ea)
            b = poly_from_encoding(F3, eb)
            assert jacobi_symbol(a * b, r) == jacobi_symbol(a, r) * jacobi_symbol(b, r)
    pi1, pi2 = t, t + Poly.one(F3)
    a = Poly(F3, [2, 1, 1])
    assert jacobi_symbol(a, pi1 * pi2) == jacobi_symbol(a, pi1) * jacobi_symbol(a, pi2)


def test_jacobi_requires_monic_modulus(F3):
    t = Poly.gen(F3)
    with pytest.raises(ValueError):
        jacobi_symbol(t, Poly.constant(F3, 2) * t)
    with pytest.raises(ValueError):
        jacobi_symbol(t, Poly.one(F3))


def test_poly_square_root(F3):
    t = Poly.gen(F3)
    f = (t * t + t + Poly.constant(F3, 2)) ** 2
    root = poly_square_root(f)
    assert root is not None and root * root == f
    # odd multiplicity has no square root
    assert poly_square_root(t * f) is None
    # nonsquare leading unit blocks the square root over F_3
    g = Poly.constant(F3, 2) * f
    assert poly_square_root(g) is None
    # scaling by a square unit is fine over F_5
    from quadricpoints import FieldCtx

    F5 = FieldCtx(5)
    s = Poly.gen(F5) + Poly.one(F5)
    h = Poly.constant(F5, 4) * s * s
    root5 = poly_square_root(h)
    assert root5 is not None and root5 * root5 == h


def test_enumeration_sizes(F3):
    assert sum(1 for _ in enumerate_below(F3, 2)) == 9
    assert sum(1 for _ in enumerate_monic(F3, 2)) == 9
    monics = list(enumerate_monic(F3, 0))
    assert monics == [Poly.one(F3)]
    for f in enumerate_monic(F3, 3):
        assert f.is_monic() and f.deg == 3


def test_encoding_round_trip(F9):
    for enc in (0, 1, 17, 80, 81, 700):
        assert poly_from_encoding(F9, enc).encoding() == enc
