"""Laurent-series kernel: arithmetic, precision tracking, roots."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from piqcheck.series import (
    DivisionByZeroSeries,
    InsufficientPrecision,
    LaurentSeries,
    NonSquareLeadingCoefficient,
    OddValuation,
)


def S(valuation, coeffs, order):
    return LaurentSeries(valuation, tuple(coeffs), order)


ONE = LaurentSeries.constant(1, 8)
T = LaurentSeries.monomial(1, 8)


# ----------------------------------------------------------------------
# addition


def test_add_cancellation_keeps_min_order():
    a = ONE + T
    b = ONE - T
    total = a + b
    assert total.coefficient(0) == 2
    assert total.is_zero_up_to() or all(c == 0 for c in total.coeffs[1:])
    assert total.order == min(a.order, b.order)


def test_add_zero_is_identity():
    a = S(-2, [3, 0, 1], 4)
    z = LaurentSeries.zero(10)
    assert (z + a).equal_up_to(a)
    assert (a + z).valuation == a.valuation


def test_add_normalization_raises_valuation():
    a = S(-1, [1, 1], 6)      # t^-1 + 1
    b = S(-1, [-1], 6)        # -t^-1
    total = a + b
    assert total.valuation == 0
    assert total.coefficient(0) == 1


# ----------------------------------------------------------------------
# multiplication


def test_mul_binomials():
    prod = (ONE + T) * (ONE - T)
    assert prod.coefficient(0) == 1
    assert prod.coefficient(1) == 0
    assert prod.coefficient(2) == -1


def test_mul_monomials_add_exponents():
    a = LaurentSeries.monomial(-2, 4)
    b = LaurentSeries.monomial(5, 9)
    assert (a * b).valuation == 3


def test_triangular_indicator_square_matches_convolution_oracle():
    # brute-force convolution of the indicator of triangular numbers
    triangular = [1 if n in (0, 1, 3, 6) else 0 for n in range(7)]
    oracle = [
        sum(triangular[i] * triangular[k - i] for i in range(k + 1)) for k in range(7)
    ]
    assert oracle == [1, 2, 1, 2, 2, 0, 3]
    s = S(0, triangular, 7)
    assert [(s * s).coefficient(n) for n in range(7)] == oracle


def test_mul_order_rule():
    a = S(1, [1, 2], 3)   # known below t^3
    b = S(2, [1], 3)      # known below t^3
    prod = a * b
    assert prod.valuation == 3
    assert prod.order == min(a.order + b.valuation, b.order + a.valuation)


# ----------------------------------------------------------------------
# division


def test_div_geometric_series():
    quot = ONE / (ONE - T)
    assert [quot.coefficient(n) for n in range(8)] == [1] * 8


def test_div_monomials():
    a = LaurentSeries.monomial(2, 10)
    b = LaurentSeries.monomial(6, 14)
    assert (a / b).valuation == -4


def test_div_by_zero_series_raises():
    with pytest.raises(DivisionByZeroSeries):
        ONE / LaurentSeries.zero(8)


def test_div_nonmonic_leading_coefficient():
    a = LaurentSeries.constant(1, 6)
    b = S(0, [2, 1], 6)
    quot = a / b
    assert (quot * b).equal_up_to(a)
    assert quot.coefficient(0) == Fraction(1, 2)


# ----------------------------------------------------------------------
# square roots


def test_sqrt_perfect_square_polynomial():
    s = S(0, [1, 2, 1], 6)
    assert (s.sqrt() - (ONE + T)).is_zero_up_to()


def test_sqrt_monomial():
    s = LaurentSeries.monomial(10, 14)
    root = s.sqrt()
    assert root.valuation == 5
    assert root.coefficient(5) == 1


def test_sqrt_recursion_checked_by_squaring():
    s = S(0, [4, 4], 8)
    root = s.sqrt()
    assert root.coefficient(0) == 2
    assert root.coefficient(1) == 1
    assert root.coefficient(2) == Fraction(-1, 4)
    assert (root * root).equal_up_to(s)


def test_sqrt_requires_even_valuation():
    with pytest.raises(OddValuation):
        LaurentSeries.monomial(3, 9).sqrt()


def test_sqrt_requires_square_leading_coefficient():
    with pytest.raises(NonSquareLeadingCoefficient):
        S(0, [2], 5).sqrt()
    with pytest.raises(NonSquareLeadingCoefficient):
        S(0, [-1], 5).sqrt()


# ----------------------------------------------------------------------
# substitution, powers, coefficient access


def test_substitute_power_examples():
    s = (ONE + T).substitute_power(3)
    assert s.coefficient(0) == 1
    assert s.coefficient(3) == 1
    assert s.coefficient(1) == 0
    assert LaurentSeries.monomial(-1, 5).substitute_power(2).valuation == -2


def test_substitute_power_order_scales():
    s = S(0, [1, 1], 5)
    assert s.substitute_power(4).order == 20


def test_pow_int():
    sq = (ONE + T) ** 2
    assert [sq.coefficient(n) for n in range(3)] == [1, 2, 1]
    inv = (ONE - T) ** -1
    assert inv.coefficient(5) == 1


def test_coefficient_access():
    s = S(0, [1, 2], 4)
    assert s.coefficient(1) == 2
    assert s.coefficient(-3) == 0  # below the valuation: known zero
    with pytest.raises(InsufficientPrecision):
        s.coefficient(4)


def test_equal_up_to_uses_common_window():
    a = S(0, [1, 2, 3], 3)
    b = S(0, [1, 2, 7], 3)
    assert a.equal_up_to(b, 2)
    assert not a.equal_up_to(b, 3)
    assert a.equal_up_to(b.truncate(2))


# ----------------------------------------------------------------------
# zero representation


def test_zero_keeps_order():
    z = LaurentSeries.zero(12)
    assert z.is_zero and z.order == 12 and z.valuation == 12
    assert (z * S(2, [5], 4)).order == 14


def test_monomial_beyond_order_collapses_soundly():
    assert LaurentSeries.monomial(9, 8).is_zero


# ----------------------------------------------------------------------
# randomized properties

fractions = st.builds(
    Fraction,
    st.integers(min_value=-9, max_value=9),
    st.sampled_from([1, 1, 1, 2, 3, 4]),
)


@st.composite
def series(draw, min_valuation=-6, max_len=10):
    val = draw(st.integers(min_value=min_valuation, max_value=6))
    coeffs = draw(st.lists(fractions, min_size=1, max_size=max_len))
    return LaurentSeries(val, tuple(coeffs), val + len(coeffs))


nonzero_series = series().filter(lambda s: not s.is_zero)


@settings(max_examples=120, deadline=None)
@given(series(), series(), series())
def test_ring_axioms_on_valid_range(a, b, c):
    assert ((a + b) + c).equal_up_to(a + (b + c))
    assert (a + b).equal_up_to(b + a)
    assert ((a * b) * c).equal_up_to(a * (b * c))
    assert (a * b).equal_up_to(b * a)
    assert (a * (b + c)).equal_up_to(a * b + a * c)


@settings(max_examples=120, deadline=None)
@given(series(), nonzero_series)
def test_div_mul_round_trip(a, b):
    assert ((a / b) * b).equal_up_to(a)


@settings(max_examples=120, deadline=None)
@given(nonzero_series)
def test_sqrt_of_square_round_trip(r):
    square = r * r
    root = square.sqrt()
    expected = r if r.leading_coefficient > 0 else -r
    assert root.equal_up_to(expected)
    assert (root * root).equal_up_to(square)


@settings(max_examples=120, deadline=None)
@given(series())
def test_normalized_leading_coefficient(a):
    assert a.is_zero or a.coeffs[0] != 0


@settings(max_examples=80, deadline=None)
@given(series(), nonzero_series)
def test_precision_soundness_under_truncation(a, b):
    # computing at lower precision must agree with truncating the
    # higher-precision result
    full = a * b
    cut_inputs = a.truncate(a.order - 1) * b if a.precision > 1 else full
    assert full.equal_up_to(cut_inputs)
