"""Gauss sums, complete quadratic sums, Weyl sums, and arc integrals."""

from fractions import Fraction

import pytest

from quadricpoints import (
    CycInt,
    LaurentTail,
    Poly,
    QuadForm,
    arc_integral_closed,
    arc_integral_direct,
    form_exp_sum,
    gauss_sum,
    gauss_sum_prime_power,
    local_factor_closed,
    local_factor_direct,
    local_factor_prime_power,
    twisted_gauss_sum,
    twisted_gauss_sum_prime_power,
    weyl_sum,
)
from quadricpoints.expsums import qpow


def test_qpow():
    assert qpow(3, 2) == Fraction(9)
    assert qpow(3, 0) == Fraction(1)
    assert qpow(3, -2) == Fraction(1, 9)


def test_quadform_validation(F3):
    f = QuadForm(F3, (1, 2, 1))
    assert f.n == 3
    ones = [Poly.one(F3)] * 3
    assert f.value(ones) == Poly.constant(F3, (1 + 2 + 1) % 3)
    t = Poly.gen(F3)
    assert f.value([t, Poly.zero(F3), Poly.zero(F3)]) == t * t
    with pytest.raises(ValueError):
        QuadForm(F3, (1, 0, 1))
    with pytest.raises(ValueError):
        QuadForm(F3, ())
    with pytest.raises(ValueError):
        f.signed_det_unit()  # odd number of variables has no signed half-det


def test_quadform_determinants(F3):
    f = QuadForm(F3, (1, 1, 1, 2))
    assert f.det_unit() == 2
    assert f.signed_det_unit() == 2  # (-1)^2 * det
    g = QuadForm(F3, (1, 1, 1, 1, 1, 1))
    assert g.signed_det_unit() == F3.neg(1)  # (-1)^3 * 1


def test_gauss_sum_linear_modulus(F3):
    t = Poly.gen(F3)
    # sum over x mod t of zeta^(x^2) = 1 + 2 zeta
    assert gauss_sum(t) == CycInt(3, (1, 2))
    # tau^2 = -q for q = 3
    assert gauss_sum(t) * gauss_sum(t) == CycInt.from_int(3, -3)
    shifted = t + Poly.one(F3)
    assert gauss_sum(shifted) * gauss_sum(shifted) == CycInt.from_int(3, -3)


def test_gauss_sum_prime_powers(F3):
    t = Poly.gen(F3)
    # even exponent collapses to |pi|^(k/2)
    assert gauss_sum_prime_power(t, 2) == CycInt.from_int(3, 3)
    assert gauss_sum(t * t) == CycInt.from_int(3, 3)
    # odd exponent: tau_pi * |pi|^((k-1)/2)
    assert gauss_sum_prime_power(t, 3) == gauss_sum(t) * 3
    assert gauss_sum(t * t * t) == gauss_sum_prime_power(t, 3)
    with pytest.raises(ValueError):
        gauss_sum_prime_power(t * t, 1)  # modulus base must be irreducible


def test_twisted_gauss_sum(F3):
    t = Poly.gen(F3)
    two = Poly.constant(F3, 2)
    # 2 is not a square mod 3: the twist flips the sign
    assert twisted_gauss_sum(two, t) == -gauss_sum(t)
    assert twisted_gauss_sum(Poly.one(F3), t) == gauss_sum(t)
    # prime-power closed form agrees with direct summation
    for k in (1, 2, 3):
        r = t**k
        for a in (Poly.one(F3), two, t + Poly.one(F3)):
            assert twisted_gauss_sum_prime_power(a, t, k) == twisted_gauss_sum(a, r)
    with pytest.raises(ValueError):
        twisted_gauss_sum_prime_power(t, t, 2)  # twist must be coprime to pi


def test_local_factor_frozen_values(F3):
    t = Poly.gen(F3)
    f4 = QuadForm(F3, (1, 1, 1, 1))
    f3 = QuadForm(F3, (1, 1, 1))
    assert local_factor_direct(f4, t) == CycInt.from_int(3, 18)
    assert local_factor_closed(f4, t) == 18
    assert local_factor_direct(f3, t * t) == CycInt.from_int(3, 162)
    assert local_factor_closed(f3, t * t) == 162
    # odd variable count at odd prime-power exponent vanishes
    assert local_factor_closed(f3, t) == 0
    assert local_factor_direct(f3, t) == CycInt.zero(3)
    assert local_factor_closed(f3, Poly.one(F3)) == 1


def test_local_factor_multiplicative(F3):
    t = Poly.gen(F3)
    r1, r2 = t, t + Poly.one(F3)
    f4 = QuadForm(F3, (1, 1, 1, 1))
    lhs = local_factor_direct(f4, r1 * r2)
    rhs = local_factor_direct(f4, r1) * local_factor_direct(f4, r2)
    assert lhs == rhs


def test_local_factor_prime_power_matches_direct(F3):
    t = Poly.gen(F3)
    pi = t * t + Poly.one(F3)  # irreducible quadratic
    f4 = QuadForm(F3, (1, 1, 1, 1))
    f3 = QuadForm(F3, (1, 1, 1))
    assert local_factor_direct(f4, pi) == CycInt.from_int(3, local_factor_prime_power(f4, pi, 1))
    assert local_factor_direct(f3, pi) == CycInt.from_int(3, local_factor_prime_power(f3, pi, 1))


def test_form_exp_sum_splits_into_twisted_factors(F3):
    t = Poly.gen(F3)
    f = QuadForm(F3, (1, 2, 1))
    for r in (t, t * t):
        for a in (Poly.one(F3), Poly.constant(F3, 2)):
            prod = CycInt.from_int(3, 1)
            for c in f.coeffs:
                prod = prod * twisted_gauss_sum(a * Poly.constant(F3, c), r)
            assert form_exp_sum(f, a, r) == prod


def test_weyl_sum_at_zero_is_box_size(F3):
    f = QuadForm(F3, (1, 1, 1))
    zero = Poly.zero(F3)
    one = Poly.one(F3)
    for P in (1, 2):
        assert weyl_sum(f, zero, one, LaurentTail.zero(F3), P) == CycInt.from_int(3, 3 ** (3 * P))


def test_weyl_factorization_instance(F3):
    t = Poly.gen(F3)
    f = QuadForm(F3, (1, 1, 1))
    zero, one = Poly.zero(F3), Poly.one(F3)
    P = 2
    for r in (t, t + one):
        for tail in (LaurentTail.zero(F3), LaurentTail.single(F3, 2 * P, 2)):
            s_theta = weyl_sum(f, zero, one, tail, P)
            for a in (one, Poly.constant(F3, 2)):
                lhs = weyl_sum(f, a, r, tail, P) * (3 ** (f.n * r.deg))
                rhs = form_exp_sum(f, a, r) * s_theta
                assert lhs == rhs


def test_arc_integral_hand_values(F3):
    t = Poly.gen(F3)
    f = QuadForm(F3, (1, 1, 1))
    # major arc r = 1, P = 1: rho = 0 gives q^(n + 1 - 2P) * S_1 = 9
    direct = arc_integral_direct(f, Poly.one(F3), 1)
    assert direct.to_fraction(3) == Fraction(9)
    assert arc_integral_closed(f, Poly.one(F3), 1) == Fraction(9)
    # boundary rho = P: the closed value collapses to q^(P (n - 2)) = 3
    assert arc_integral_closed(f, t, 1) == Fraction(3)
    assert arc_integral_direct(f, t, 1).to_fraction(3) == Fraction(3)


def test_arc_integral_agreement_sample(F5):
    t = Poly.gen(F5)
    f = QuadForm(F5, (1, 1, 2))
    for r in (Poly.one(F5), t, t + Poly.one(F5)):
        assert arc_integral_direct(f, r, 1).to_fraction(5) == arc_integral_closed(f, r, 1)


def test_arc_integral_rejects_deep_denominators(F3):
    t = Poly.gen(F3)
    f = QuadForm(F3, (1, 1, 1))
    with pytest.raises(ValueError):
        arc_integral_closed(f, t * t, 1)
    with pytest.raises(ValueError):
        arc_integral_direct(f, t * t, 1)
