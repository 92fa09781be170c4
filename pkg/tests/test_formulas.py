"""Closed point-count formulas, classification, and helper sums.

Frozen integers in this file were produced by the independent
enumeration oracles (`brute_count`, `brute_primitive_count`,
`brute_morphism_count`) and written down; the tests check that the
closed formulas reproduce them.
"""

from fractions import Fraction

import pytest

from quadricpoints import (
    CaseTag,
    CountReport,
    FieldCtx,
    QuadForm,
    classify,
    count_circle,
    count_exact,
    count_primitive,
    diagonalize,
    enumerate_below,
    enumerate_monic,
    local_factor_closed,
    low_stratum_sum,
    morphism_count,
    morphism_count_from_counts,
    phi_degree_sum,
    phi_power_sum,
)
from quadricpoints.polyring import euler_phi


def test_classify(F3, F5):
    assert classify(QuadForm(F3, (1, 1, 1))) is CaseTag.ODD
    assert classify(QuadForm(F3, (1, 1, 1, 1, 1))) is CaseTag.ODD
    assert classify(QuadForm(F3, (1, 1, 1, 1))) is CaseTag.SPLIT_EVEN
    assert classify(QuadForm(F3, (1, 1, 1, 2))) is CaseTag.NONSPLIT_EVEN
    # n = 6: the sign (-1)^3 flips the determinant class
    assert classify(QuadForm(F3, (1, 1, 1, 1, 1, 1))) is CaseTag.NONSPLIT_EVEN
    assert classify(QuadForm(F3, (1, 1, 1, 1, 1, 2))) is CaseTag.SPLIT_EVEN
    assert classify(QuadForm(F5, (1, 1, 1, 4))) is CaseTag.SPLIT_EVEN
    assert classify(QuadForm(F5, (1, 1, 1, 2))) is CaseTag.NONSPLIT_EVEN


# oracle-frozen N(P) values: ((q, coeffs, P), N)
N_ANCHORS = [
    ((3, (1, 1, 1), 1), 9),
    ((3, (1, 1, 1), 2), 33),
    ((3, (1, 1, 1), 3), 153),
    ((3, (1, 1, 1), 4), 513),
    ((3, (1, 1, 1, 1), 1), 33),
    ((3, (1, 1, 1, 2), 1), 21),
    ((3, (1, 1, 1, 1, 1), 1), 81),
    ((3, (1, 1, 1, 1, 1), 2), 2241),
    ((3, (1, 1, 1, 1, 1, 1), 1), 225),
    ((3, (1, 1, 1, 1, 1, 2), 1), 261),
    ((5, (1, 1, 1), 1), 25),
    ((5, (1, 1, 1), 2), 145),
    ((5, (1, 1, 1, 4), 1), 145),
    ((5, (1, 1, 1, 2), 1), 105),
]

# oracle-frozen morphism counts: ((q, coeffs, P), count)
MOR_ANCHORS = [
    ((3, (1, 1, 1), 1), 0),
    ((3, (1, 1, 1), 2), 24),
    ((3, (1, 1, 1), 3), 0),
    ((3, (1, 1, 1), 4), 216),
    ((3, (1, 1, 1, 1), 1), 192),
    ((3, (1, 1, 1, 1), 2), 2304),
    ((3, (1, 1, 1, 2), 1), 0),
    ((3, (1, 1, 1, 2), 2), 720),
    ((3, (1, 1, 1, 1, 1), 1), 960),
    ((3, (1, 1, 1, 1, 1), 2), 28080),
    ((3, (1, 1, 1, 1, 1, 2), 1), 12480),
    ((3, (1, 1, 1, 1, 1, 1), 1), 6720),
    ((3, (1, 1, 1, 1, 1, 1), 2), 604800),
]


@pytest.mark.parametrize("key,expected", N_ANCHORS)
def test_count_exact_anchors(key, expected):
    q, coeffs, P = key
    f = QuadForm(FieldCtx(q), coeffs)
    assert count_exact(f, P) == expected


@pytest.mark.parametrize("key,expected", MOR_ANCHORS)
def test_morphism_anchors(key, expected):
    q, coeffs, P = key
    f = QuadForm(FieldCtx(q), coeffs)
    assert morphism_count(f, P) == expected


def test_count_circle_agrees_with_exact(F3):
    for coeffs in [(1, 1, 1), (1, 1, 1, 1), (1, 1, 1, 2), (1, 2, 2, 1, 1)]:
        f = QuadForm(F3, coeffs)
        for P in (1, 2, 3):
            assert count_circle(f, P) == count_exact(f, P)


def test_count_circle_small_n(F3):
    # no closed formula below three variables, but the circle route works
    f1 = QuadForm(F3, (1,))
    f2 = QuadForm(F3, (1, 2))
    assert count_circle(f1, 2) == 1  # x^2 = 0 forces x = 0
    assert count_circle(f2, 2) == 17  # oracle-frozen


def test_count_primitive(F3):
    f = QuadForm(F3, (1, 1, 1))
    assert count_primitive(f, 1) == 4
    assert count_primitive(f, 2) == 4


def test_morphism_from_counts_consistency(F3):
    for coeffs in [(1, 1, 1), (1, 1, 1, 1), (1, 1, 1, 2)]:
        f = QuadForm(F3, coeffs)
        for P in (1, 2, 3):
            n_plus = count_exact(f, P + 1)
            n_mid = count_exact(f, P)
            n_minus = count_exact(f, P - 1) if P >= 2 else 1  # N(0) = 1
            got = morphism_count_from_counts(n_plus, n_mid, n_minus, 3)
            assert got == morphism_count(f, P)


def test_morphism_from_counts_rejects_inconsistent():
    with pytest.raises(ValueError):
        morphism_count_from_counts(1, 0, 0, 3)  # 1 not divisible by q - 1 = 2
    with pytest.raises(ValueError):
        morphism_count_from_counts(0, 10, 0, 3)  # negative result


def test_phi_degree_sum_matches_enumeration(F3, F5):
    for ctx in (F3, F5):
        for rho in range(0, 4 if ctx.q == 3 else 3):
            total = sum(euler_phi(r) for r in enumerate_monic(ctx, rho))
            assert total == phi_degree_sum(ctx.q, rho)
    assert phi_degree_sum(3, 0) == 1
    with pytest.raises(ValueError):
        phi_degree_sum(3, -1)


@pytest.mark.parametrize("q", [3, 5])
@pytest.mark.parametrize("signed", [False, True])
@pytest.mark.parametrize("c", [0, 1, 2, 3])
def test_phi_power_sum_closed_forms(q, signed, c):
    for M in range(0, 6):
        direct = Fraction(0)
        for rho in range(M + 1):
            term = Fraction(phi_degree_sum(q, rho), q ** (c * rho))
            direct += -term if (signed and rho % 2) else term
        assert phi_power_sum(q, M, c, signed) == direct


def test_low_stratum_plus_top_is_count(F3):
    for coeffs in [(1, 1, 1), (1, 1, 1, 1), (1, 1, 1, 2), (1, 1, 1, 1, 1), (1, 1, 1, 1, 1, 1)]:
        f = QuadForm(F3, coeffs)
        for P in (1, 2):
            top = Fraction(0)
            for r in enumerate_monic(F3, P):
                top += Fraction(local_factor_closed(f, r), 3 ** (2 * P))
            assert low_stratum_sum(f, P) + top == count_exact(f, P)


def test_diagonalize_gram(F3, F5):
    # hyperbolic plane 2xy: congruent to a diagonal form with the same counts
    f = diagonalize(F3, [[0, 1], [1, 0]])
    assert f.n == 2

    def gram_count(ctx, gram, P):
        total = 0
        n = len(gram)
        from itertools import product

        from quadricpoints import Poly

        box = list(enumerate_below(ctx, P))
        for xs in product(box, repeat=n):
            acc = Poly.zero(ctx)
            for i in range(n):
                for j in range(n):
                    acc = acc + (xs[i] * xs[j]).scale(gram[i][j])
            if acc.is_zero():
                total += 1
        return total

    from quadricpoints import brute_count

    for ctx, gram in [
        (F3, [[0, 1], [1, 0]]),
        (F3, [[1, 2], [2, 2]]),
        (F5, [[0, 2], [2, 3]]),
        (F3, [[1, 0, 1], [0, 2, 0], [1, 0, 2]]),
    ]:
        diag = diagonalize(ctx, gram)
        for P in (1, 2):
            assert brute_count(diag, P) == gram_count(ctx, gram, P)


def test_diagonalize_rejects_bad_input(F3):
    with pytest.raises(ValueError):
        diagonalize(F3, [[1, 1], [1, 1]])  # degenerate (det = 0)
    with pytest.raises(ValueError):
        diagonalize(F3, [[0, 1], [2, 0]])  # not symmetric
    with pytest.raises(ValueError):
        diagonalize(F3, [[1, 0, 0], [0, 1, 0]])  # not square
    with pytest.raises(ValueError):
        diagonalize(F3, [[3, 0], [0, 1]])  # entries outside F_q encodings


def test_count_report(F3, F9):
    f = QuadForm(F3, (1, 1, 1, 2))
    rep = CountReport.build(f, 2, "exact_formula", count_exact(f, 2))
    doc = rep.to_json_dict()
    assert doc["q"] == 3 and doc["n"] == 4 and doc["P"] == 2
    assert doc["case"] == "nonsplit_even"
    assert doc["coeffs"] == [1, 1, 1, 2]
    g = QuadForm(F9, (1, 1, 1))
    rep9 = CountReport.build(g, 1, "exact_formula", count_exact(g, 1))
    doc9 = rep9.to_json_dict()
    assert doc9["q"] == 9 and doc9["coeffs"] == [[1, 0], [1, 0], [1, 0]]
    assert doc9["value"] == 81


def test_validation_errors(F3):
    f2 = QuadForm(F3, (1, 2))
    f3 = QuadForm(F3, (1, 1, 1))
    with pytest.raises(ValueError):
        count_exact(f2, 1)
    with pytest.raises(ValueError):
        count_exact(f3, 0)
    with pytest.raises(ValueError):
        morphism_count(f3, 0)
    with pytest.raises(ValueError):
        low_stratum_sum(f3, 0)
