"""Exact polynomial arithmetic and the positivity decision procedure.

Oracle values are worked by hand in the comments; nothing here depends on
the modules under test for its expected numbers.
"""
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gstower.series import (
    ExactPoly,
    NoRationalWitnessError,
    TruncSeries,
    Verdict,
    ZeroConstantTermError,
    ZeroPolynomialError,
    positive_on_open_unit_interval,
    series_inverse,
)

F = Fraction


def P(*coeffs) -> ExactPoly:
    return ExactPoly.from_coeffs([F(c) for c in coeffs])


# ---------------------------------------------------------------------------
# arithmetic
# ---------------------------------------------------------------------------

def test_multiplication_matches_hand_convolution():
    # (1 + 2t)(3 - t + t^2):
    #   t^0: 1*3 = 3
    #   t^1: 1*(-1) + 2*3 = 5
    #   t^2: 1*1 + 2*(-1) = -1
    #   t^3: 2*1 = 2
    assert (P(1, 2) * P(3, -1, 1)).coeffs == (F(3), F(5), F(-1), F(2))


def test_addition_and_subtraction():
    assert (P(1, 2, 3) + P(0, -2)).coeffs == (F(1), F(0), F(3))
    assert (P(1, 2, 3) - P(1, 2, 3)).degree == -1


def test_degree_and_trailing_zero_normalization():
    assert P(1, 0, 0).degree == 0
    assert P(0).degree == -1
    assert ExactPoly.zero().degree == -1
    assert P(0, 0, 5).degree == 2


def test_power():
    # (1 + t)^4 = 1 + 4t + 6t^2 + 4t^3 + t^4
    assert (P(1, 1) ** 4).coeffs == (F(1), F(4), F(6), F(4), F(1))
    assert (P(2, 1) ** 0).coeffs == (F(1),)


def test_evaluation_is_exact():
    # f = 2t^3 - 2t + 1:  f(1/2) = 1/4 - 1 + 1 = 1/4
    #                     f(1/3) = 2/27 - 2/3 + 1 = 11/27
    f = P(1, -2, 0, 2)
    assert f(F(1, 2)) == F(1, 4)
    assert f(F(1, 3)) == F(11, 27)
    assert f(F(0)) == 1
    assert f(F(1)) == 1


def test_derivative():
    # d/dt (1 - 2t + 3t^3) = -2 + 9t^2
    assert P(1, -2, 0, 3).derivative().coeffs == (F(-2), F(0), F(9))


def test_monomial_constructor():
    m = ExactPoly.monomial(3, F(5, 7))
    assert m.coeffs == (F(0), F(0), F(0), F(5, 7))


@given(
    st.lists(st.fractions(max_denominator=30), max_size=6),
    st.lists(st.fractions(max_denominator=30), max_size=6),
    st.fractions(max_denominator=50),
)
def test_arithmetic_commutes_with_evaluation(cs1, cs2, x):
    f = ExactPoly.from_coeffs(cs1)
    g = ExactPoly.from_coeffs(cs2)
    assert (f + g)(x) == f(x) + g(x)
    assert (f * g)(x) == f(x) * g(x)
    assert (f - g)(x) == f(x) - g(x)


# ---------------------------------------------------------------------------
# truncated series
# ---------------------------------------------------------------------------

def test_series_inverse_of_geometric_denominator():
    # 1 / (1 + t + t^2) = 1 - t + t^3 - t^4 + t^6 - ... (period 3)
    inv = series_inverse(TruncSeries.from_poly(P(1, 1, 1), 6))
    assert inv.coeffs == (F(1), F(-1), F(0), F(1), F(-1), F(0), F(1))


def test_series_inverse_requires_unit_constant_term():
    with pytest.raises(ZeroConstantTermError):
        series_inverse(TruncSeries.from_poly(P(0, 1), 4))


def test_series_inverse_roundtrip():
    f = P(1, -2, 0, 5, 1)
    inv = series_inverse(TruncSeries.from_poly(f, 9))
    prod = TruncSeries.from_poly(f, 9) * inv
    assert prod.coeffs[0] == 1
    assert all(c == 0 for c in prod.coeffs[1:])


def test_trunc_series_multiplication_truncates():
    s = TruncSeries.from_coeffs([F(1), F(1)], 3)
    sq = s * s
    assert sq.trunc_degree == 3
    assert sq.coeffs == (F(1), F(2), F(1), F(0))


@given(st.lists(st.fractions(max_denominator=20), min_size=1, max_size=5))
def test_series_inverse_is_two_sided(cs):
    cs = [F(1)] + cs
    f = ExactPoly.from_coeffs(cs)
    inv = series_inverse(TruncSeries.from_poly(f, 7))
    left = TruncSeries.from_poly(f, 7) * inv
    right = inv * TruncSeries.from_poly(f, 7)
    assert left.coeffs == right.coeffs
    assert left.coeffs[0] == 1
    assert all(c == 0 for c in left.coeffs[1:])


# ---------------------------------------------------------------------------
# positivity on the open unit interval
# ---------------------------------------------------------------------------

def test_positive_despite_interior_dip():
    # 2t^3 - 2t + 1 dips to 1 - 4/(3*sqrt(3)) ~ 0.2302 near t ~ 0.577 but
    # stays positive.
    report = positive_on_open_unit_interval(P(1, -2, 0, 2))
    assert report.verdict is Verdict.HOLDS
    assert report.certificate is not None
    assert report.certificate.roots_in_interval == 0


def test_violated_with_rational_witness():
    # t^3 + t - 1 is negative at 1/2: 1/8 + 1/2 - 1 = -3/8
    f = P(-1, 1, 0, 1)
    report = positive_on_open_unit_interval(f)
    assert report.verdict is Verdict.VIOLATED
    assert report.witness is not None
    assert 0 < report.witness < 1
    assert f(report.witness) <= 0
    assert report.witness_value == f(report.witness)


def test_trivially_positive():
    assert positive_on_open_unit_interval(P(1, 0, 1)).holds


def test_endpoint_zeros_are_ignored():
    # t - t^2 = t(1 - t) vanishes only at the endpoints.
    assert positive_on_open_unit_interval(P(0, 1, -1)).holds


def test_interior_touch_point_is_a_violation():
    # (2t - 1)^2 = 4t^2 - 4t + 1 is zero at 1/2, so not strictly positive.
    f = P(1, -4, 4)
    report = positive_on_open_unit_interval(f)
    assert report.verdict is Verdict.VIOLATED
    assert f(report.witness) == 0


def test_negative_constant_polynomial():
    report = positive_on_open_unit_interval(P(-3))
    assert report.verdict is Verdict.VIOLATED
    assert report.witness_value == -3


def test_zero_polynomial_rejected():
    with pytest.raises(ZeroPolynomialError):
        positive_on_open_unit_interval(ExactPoly.zero())


def test_irrational_touch_point_has_no_rational_witness():
    # 4t^4 - 4t^2 + 1 = (2t^2 - 1)^2 touches zero only at 1/sqrt(2); every
    # rational point evaluates positive, so no exact witness can exist.
    with pytest.raises(NoRationalWitnessError):
        positive_on_open_unit_interval(P(1, 0, -4, 0, 4))


def test_dense_sampling_agrees_with_the_dip_value():
    # Sampling is not part of the decision procedure; this pins the shape
    # of the HOLDS example above so a wrong sign convention cannot hide.
    f = P(1, -2, 0, 2)
    samples = [f(F(k, 512)) for k in range(1, 512)]
    assert min(samples) > 0
    assert min(float(s) for s in samples) == pytest.approx(0.2302, abs=5e-3)


@st.composite
def small_int_polys(draw):
    coeffs = draw(st.lists(st.integers(min_value=-6, max_value=6), min_size=1, max_size=7))
    return ExactPoly.from_coeffs([F(c) for c in coeffs])


@settings(deadline=None, max_examples=60)
@given(small_int_polys())
def test_decision_consistent_with_rational_sampling(f):
    if f.degree == -1:
        return
    report = positive_on_open_unit_interval(f)
    samples = [f(F(k, 64)) for k in range(1, 64)]
    if report.holds:
        assert all(v > 0 for v in samples)
    else:
        assert report.witness_value <= 0
        assert f(report.witness) == report.witness_value


@settings(deadline=None, max_examples=40)
@given(small_int_polys(), small_int_polys())
def test_product_of_positive_is_positive(f, g):
    if f.degree == -1 or g.degree == -1:
        return
    rf = positive_on_open_unit_interval(f)
    rg = positive_on_open_unit_interval(g)
    if rf.holds and rg.holds:
        assert positive_on_open_unit_interval(f * g).holds
