from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import series_2var, z_polys
from semismall.series import (
    HODGE_VARS,
    POINCARE_VARS,
    GradedPoly,
    NonTerminationError,
    StructureError,
    TruncatedSeries,
    binomial,
    canonical,
    coefficient,
    euler_factor,
    format_rational,
    parse_rational,
    series_mul,
    xy_poly,
    z_poly,
)

Z = POINCARE_VARS


def t_series(coeffs, bound):
    return TruncatedSeries(("t",), (bound,), Z, {(k,): c for k, c in coeffs.items()})


def test_canonical_rationals():
    assert canonical(Fraction(4, 2)) == 2 and type(canonical(Fraction(4, 2))) is int
    assert canonical(Fraction(2, 4)) == Fraction(1, 2)
    assert format_rational(Fraction(-3, 6)) == "-1/2"
    assert format_rational(7) == "7"
    assert parse_rational("6/4") == Fraction(3, 2)
    assert parse_rational(5) == 5


def test_generalized_binomial_matches_series_for_negative_exponent():
    # (1 - t)^(-e): coefficient of t^k is C(e + k - 1, k)
    for e in range(1, 5):
        for k in range(6):
            assert binomial(-e, k) * (-1) ** k == binomial(e + k - 1, k)


def test_graded_poly_drops_zero_terms():
    p = GradedPoly(Z, {(0,): 1, (2,): 0, (3,): Fraction(0, 5)})
    assert dict(p.terms) == {(0,): 1}
    assert not (p - p)


def test_graded_poly_variable_mismatch():
    with pytest.raises(StructureError):
        z_poly({1: 1}) + xy_poly({(1, 0): 1})


def test_difference_of_squares():
    a = t_series({0: 1, 1: 1}, 3)
    b = t_series({0: 1, 1: -1}, 3)
    assert series_mul(a, b) == t_series({0: 1, 2: -1}, 3)


def test_identity_element():
    a = t_series({m: 1 for m in range(4)}, 3)
    assert series_mul(a, TruncatedSeries.one(("t",), (3,), Z)) == a


def test_binomial_square():
    a = t_series({0: 1, 1: z_poly({2: 1})}, 4)
    want = t_series({0: 1, 1: z_poly({2: 2}), 2: z_poly({4: 1})}, 4)
    assert a * a == want


def test_product_bound_is_componentwise_min():
    a = TruncatedSeries.one(("t", "s1"), (5, 1), Z)
    b = TruncatedSeries.one(("t", "s1"), (2, 3), Z)
    assert series_mul(a, b).bounds == (2, 1)


def test_mismatched_series_variables():
    a = TruncatedSeries.one(("t",), (3,), Z)
    b = TruncatedSeries.one(("t", "s1"), (3, 3), Z)
    with pytest.raises(StructureError):
        series_mul(a, b)
    with pytest.raises(StructureError):
        series_mul(a, TruncatedSeries.one(("t",), (3,), HODGE_VARS))


def test_euler_factor_geometric():
    got = euler_factor(((1,), GradedPoly.constant(Z)), -1, (3,))
    assert got == t_series({0: 1, 1: 1, 2: 1, 3: 1}, 3)


def test_euler_factor_binomial():
    got = euler_factor(((1,), z_poly({2: 1})), 2, (2,))
    assert got == t_series({0: 1, 1: z_poly({2: 2}), 2: z_poly({4: 1})}, 2)


def test_euler_factor_mixed_monomial():
    got = euler_factor(((1, 1), z_poly({2: 1})), -1, (2, 2))
    want = TruncatedSeries(("t", "s1"), (2, 2), Z, {(0, 0): 1, (1, 1): z_poly({2: 1}), (2, 2): z_poly({4: 1})})
    assert got == want


def test_euler_factor_degree_zero_negative_power():
    with pytest.raises(NonTerminationError):
        euler_factor(((0,), GradedPoly.constant(Z)), -1, (3,))


def test_coefficient_examples():
    s = t_series({0: 1, 1: z_poly({2: 3})}, 2)
    assert coefficient(s, (1,)) == z_poly({2: 3})
    assert coefficient(t_series({0: 1, 2: 1}, 2), (1,)) == GradedPoly.zero(Z)
    c = xy_poly({(1, 1): 1})
    f = euler_factor(((1, 1), c), -1, (2, 2))
    assert coefficient(f, (1, 1)) == c


def test_coefficient_out_of_bound():
    with pytest.raises(IndexError):
        coefficient(t_series({0: 1}, 2), (3,))


def test_construction_drops_terms_outside_the_box():
    s = t_series({0: 1, 5: 7}, 3)
    assert s.support() == [(0,)]


@given(series_2var(), series_2var(), series_2var())
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + (b - a) == b


@given(
    st.tuples(st.integers(0, 2), st.integers(0, 2)).filter(any),
    z_polys(max_terms=2).filter(bool),
    st.integers(1, 4),
    st.sampled_from([1, -1]),
)
def test_euler_factor_inverse(exp, coeff, e, sign):
    bound = (3, 2)
    f = euler_factor((exp, coeff), e, bound, sign=sign)
    g = euler_factor((exp, coeff), -e, bound, sign=sign)
    assert f * g == TruncatedSeries.one(("t", "s1"), bound, Z)


@given(series_2var(), series_2var(), z_polys(), st.tuples(st.integers(0, 3), st.integers(0, 2)))
def test_coefficient_is_linear(a, b, p, deg):
    assert coefficient(a + b, deg) == coefficient(a, deg) + coefficient(b, deg)
    scalar = TruncatedSeries(("t", "s1"), (3, 2), Z, {(0, 0): p})
    assert coefficient(scalar * a, deg) == p * coefficient(a, deg)


def test_exactness_no_float_drift():
    third = t_series({0: Fraction(1, 3)}, 1)
    total = third + third + third
    assert coefficient(total, (0,)) == GradedPoly.constant(Z)


def test_palindromic_and_evaluate():
    p = z_poly({0: 1, 2: 2, 4: 1})
    assert p.is_palindromic(4)
    assert not p.is_palindromic(6)
    assert p.evaluate(1) == 4
    assert xy_poly({(1, 0): 1, (0, 1): 1}).diagonal() == z_poly({1: 2})
