import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chordenum.series import (
    MARKERS,
    RATIONAL,
    MarkerPoly,
    SeriesError,
    TruncatedSeries,
    full_pde_residual,
    integer_coeffs,
    loop_pde_residual,
    marker_triangle,
    named_series,
)

rationals = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
)


def rational_series(draw_coeffs):
    return TruncatedSeries(RATIONAL, tuple(Fraction(c) for c in draw_coeffs))


series_strategy = st.lists(rationals, min_size=4, max_size=9).map(rational_series)


# ---------------------------------------------------------------------------
# ring operations


@settings(max_examples=80, deadline=None)
@given(series_strategy)
def test_reciprocal_is_inverse(s):
    if s[0] == 0:
        with pytest.raises(SeriesError):
            s.reciprocal()
        return
    product = s * s.reciprocal()
    assert product[0] == 1
    assert all(c == 0 for c in product.coeffs[1:])


@settings(max_examples=80, deadline=None)
@given(series_strategy)
def test_sqrt_squares_back(s):
    forced = TruncatedSeries(RATIONAL, (Fraction(1),) + s.coeffs[1:])
    root = forced.sqrt()
    assert (root * root).coeffs == forced.coeffs


@settings(max_examples=80, deadline=None)
@given(series_strategy)
def test_exp_of_negation_inverts(s):
    forced = TruncatedSeries(RATIONAL, (Fraction(0),) + s.coeffs[1:])
    product = forced.exp() * (-forced).exp()
    assert product[0] == 1
    assert all(c == 0 for c in product.coeffs[1:])


@settings(max_examples=60, deadline=None)
@given(series_strategy)
def test_derivative_undoes_antiderivative(s):
    assert s.antiderivative().derivative().coeffs == s.coeffs


def test_precondition_failures_are_loud():
    t = TruncatedSeries.identity(5)
    with pytest.raises(SeriesError):
        t.sqrt()  # constant term 0, not 1
    with pytest.raises(SeriesError):
        t.reciprocal()
    with pytest.raises(SeriesError):
        (1 + t).exp()  # constant term 1, not 0


def test_sqrt_example():
    t = TruncatedSeries.identity(3)
    s = (1 - 2 * t).sqrt()
    assert s.coeffs == (1, -1, Fraction(-1, 2), Fraction(-1, 2))


def test_exp_of_zero_is_one():
    zero = TruncatedSeries.constant(0, 6)
    assert zero.exp().coeffs == (1, 0, 0, 0, 0, 0, 0)


def test_mixed_ring_arithmetic_is_rejected():
    t = TruncatedSeries.identity(4)
    tm = TruncatedSeries.identity(4, MARKERS)
    with pytest.raises(SeriesError):
        t + tm


# ---------------------------------------------------------------------------
# marker polynomials


def test_marker_poly_arithmetic():
    z = MarkerPoly.marker("z")
    x = MarkerPoly.marker("x")
    p = (z + x) * (z - x)
    assert p == z * z - x * x
    assert p.substitute(z=1, x=1) == 0
    assert (z * x).differentiate("z") == x
    assert (z * z).differentiate("z") == 2 * z


def test_marker_inversion_requires_constant():
    z = MarkerPoly.marker("z")
    series = TruncatedSeries(MARKERS, (z, MARKERS.zero, MARKERS.zero))
    with pytest.raises(SeriesError):
        series.reciprocal()


# ---------------------------------------------------------------------------
# named series


def test_named_series_printed_expansions():
    assert integer_coeffs(named_series("phi", 5)) == [1, 0, 1, 5, 36, 329]
    assert integer_coeffs(named_series("U", 6)) == [0, 0, 1, 1, 21, 168, 1968]
    assert integer_coeffs(named_series("W", 4)) == [0, 1, 3, 24, 211]
    assert integer_coeffs(named_series("psi", 6)) == [0, 0, 1, 4, 31, 293, 3326]
    assert integer_coeffs(named_series("b", 4)) == [1, 1, 3, 15, 105]


def test_unknown_series_name():
    with pytest.raises(SeriesError):
        named_series("zeta", 5)


def test_reciprocal_sqrt_gives_double_factorials():
    values = integer_coeffs(named_series("b", 8))
    assert values == [math.prod(range(2 * n - 1, 0, -2)) for n in range(9)]


def test_marker_substitutions():
    wzx = named_series("wzx", 5)
    assert integer_coeffs(wzx, z=0, x=0) == [0, 1, 3, 24, 211, 2325]
    assert integer_coeffs(wzx, z=1, x=1) == [
        math.prod(range(2 * n + 1, 0, -2)) for n in range(6)
    ]
    wz = named_series("wz", 6)
    phi = named_series("phi", 6)
    assert wz.substitute_markers(z=0, x=0).coeffs == phi.coeffs
    b = named_series("b", 6)
    assert wz.substitute_markers(z=1, x=1).coeffs == b.coeffs


def test_classifier_starts_from_the_single_loop():
    wzx = named_series("wzx", 3)
    assert wzx[0] == MarkerPoly.marker("z")


def test_integer_coeffs_rejects_leftover_markers_and_nonintegers():
    wzx = named_series("wzx", 3)
    with pytest.raises(SeriesError):
        integer_coeffs(wzx, z=0)  # x left free
    with pytest.raises(SeriesError):
        integer_coeffs(named_series("phi", 3), z=0)
    half_t = TruncatedSeries(RATIONAL, (Fraction(0), Fraction(1, 2)))
    with pytest.raises(SeriesError):
        integer_coeffs(half_t)


def test_all_named_series_extract_nonnegative_integers():
    for name in ("b", "phi", "chi", "psi", "W", "U"):
        assert all(v >= 0 for v in integer_coeffs(named_series(name, 12)))
    for z in (0, 1):
        assert all(v >= 0 for v in integer_coeffs(named_series("wz", 9), z=z))
        for x in (0, 1):
            assert all(v >= 0 for v in integer_coeffs(named_series("wzx", 9), z=z, x=x))
    for x in (0, 1):
        assert all(v >= 0 for v in integer_coeffs(named_series("wx", 9), x=x))


# ---------------------------------------------------------------------------
# identities among the closed forms


def test_chord_series_identity_to_order_25():
    t = TruncatedSeries.identity(25)
    s = (1 - 2 * t).sqrt()
    expected = named_series("phi", 25) - 2 + t + (s - 1).exp()
    assert named_series("psi", 25).coeffs == expected.coeffs


def test_shifted_series_antiderivative_relation():
    # the derivative of the shifted series recovers the linear one
    chi = named_series("chi", 26)
    phi = named_series("phi", 25)
    assert chi.derivative().coeffs == (phi - 1).coeffs


def test_pde_residuals_vanish():
    assert loop_pde_residual(12).is_zero()
    assert full_pde_residual(10).is_zero()


def test_marker_triangle_round_trip():
    wx = named_series("wx", 4)
    triangle = marker_triangle(wx)
    assert triangle[(1, 0, 0)] == 2
    assert triangle[(1, 0, 1)] == 1
    assert triangle[(2, 0, 0)] == 10
