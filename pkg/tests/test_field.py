"""Polynomials, rational functions, and quadratic extensions over Q(m)."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from piqcheck.field import (
    M,
    DivisionByZeroRatFunc,
    ModulusMismatch,
    Poly,
    QuadExt,
    RatFunc,
    ZeroNormInverse,
    poly_gcd,
    quadext_equal,
)


# ----------------------------------------------------------------------
# polynomials


def test_poly_gcd_common_factor():
    assert poly_gcd(M * M - 1, M * M + 2 * M - 3) == (M - 1)


def test_poly_product():
    assert (M - 1) * (M + 3) == M**2 + 2 * M - 3


def test_poly_gcd_with_zero_is_monic_normalization():
    assert poly_gcd(2 * M + 2, Poly(())) == M + 1


def test_poly_divmod():
    q, r = divmod(M**3 + 1, M + 1)
    assert q * (M + 1) + r == M**3 + 1
    assert r.is_zero


def test_poly_no_trailing_zeros():
    p = Poly((1, 2, 0, 0))
    assert p.degree == 1


# ----------------------------------------------------------------------
# rational functions


def test_ratfunc_partial_fraction_sum():
    total = RatFunc.of(1, M - 1) + RatFunc.of(1, M + 3)
    assert total == RatFunc.of(2 * M + 2, M**2 + 2 * M - 3)


def test_ratfunc_product_of_inverses():
    prod = RatFunc.of(M - 1, M + 3) * RatFunc.of(M + 3, M - 1)
    assert prod == RatFunc.of(1)


def test_degree3_alpha_beta_product():
    alpha = RatFunc.of((M - 1) * (M + 3) ** 3, 16 * M**3)
    beta = RatFunc.of((M - 1) ** 3 * (M + 3), 16 * M)
    assert alpha * beta == RatFunc.of((M - 1) ** 4 * (M + 3) ** 4, 256 * M**4)


def test_ratfunc_zero_denominator_rejected():
    with pytest.raises(DivisionByZeroRatFunc):
        RatFunc.of(1, 0)
    with pytest.raises(DivisionByZeroRatFunc):
        RatFunc.of(M) / RatFunc.of(0)


def test_ratfunc_canonical_form_is_idempotent():
    r = RatFunc.of(2 * (M - 1) * (M + 2), 4 * (M + 2) * M)
    again = RatFunc(r.num, r.den)
    assert r == again
    assert r.den.leading_coefficient == 1
    assert poly_gcd(r.num, r.den).degree == 0


# ----------------------------------------------------------------------
# quadratic extensions

U3 = RatFunc.of((M - 1) * (M + 3), M)
U5 = RatFunc.of(M**3 - 2 * M**2 + 5 * M)


def test_conjugate_product_is_rational():
    rho = QuadExt.root(U5)
    m = QuadExt.scalar(M, U5)
    prod = (2 * m + rho) * (2 * m - rho)
    assert prod.is_rational
    assert quadext_equal(prod, QuadExt.scalar(RatFunc.of(M * (M - 1) * (5 - M)), U5))


def test_inverse_of_root():
    rho = QuadExt.root(U5)
    inv = rho.inverse()
    assert inv.a.is_zero
    assert inv.b == RatFunc.of(1) / U5
    assert quadext_equal(rho * inv, QuadExt.scalar(1, U5))


def test_degree3_half_root_squares_to_quarter_modulus():
    s = QuadExt.root(U3)
    half = s * Fraction(1, 2)
    assert quadext_equal(
        half * half, QuadExt.scalar(RatFunc.of((M - 1) * (M + 3), 4 * M), U3)
    )


def test_quadext_equality_and_branch():
    rho = QuadExt.root(U5)
    assert quadext_equal(rho, rho)
    assert not quadext_equal(rho, -rho)


def test_modulus_mismatch_rejected():
    with pytest.raises(ModulusMismatch):
        QuadExt.root(U3) * QuadExt.root(U5)
    with pytest.raises(ModulusMismatch):
        quadext_equal(QuadExt.root(U3), QuadExt.root(U5))


def test_zero_norm_inverse_rejected():
    # (m + s)(m - s) = m^2 - u; choose u = m^2 so the norm vanishes
    u = RatFunc.of(M**2)
    x = QuadExt(RatFunc.of(M), RatFunc.of(1), u)
    with pytest.raises(ZeroNormInverse):
        x.inverse()


# ----------------------------------------------------------------------
# randomized field / ring properties

small_fraction = st.builds(
    Fraction,
    st.integers(min_value=-6, max_value=6),
    st.sampled_from([1, 1, 2, 3]),
)

polys = st.builds(
    lambda cs: Poly(tuple(cs)), st.lists(small_fraction, min_size=0, max_size=4)
)
nonzero_polys = polys.filter(lambda p: not p.is_zero)


@st.composite
def ratfuncs(draw):
    return RatFunc(draw(polys), draw(nonzero_polys))


nonzero_ratfuncs = ratfuncs().filter(lambda r: not r.is_zero)


@settings(max_examples=100, deadline=None)
@given(ratfuncs(), ratfuncs(), ratfuncs())
def test_ratfunc_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a


@settings(max_examples=100, deadline=None)
@given(ratfuncs(), nonzero_ratfuncs)
def test_ratfunc_div_mul_round_trip(a, b):
    assert (a / b) * b == a


@st.composite
def quadexts(draw):
    return QuadExt(draw(ratfuncs()), draw(ratfuncs()), U3)


@settings(max_examples=80, deadline=None)
@given(quadexts(), quadexts(), quadexts())
def test_quadext_commutative_ring(x, y, z):
    assert quadext_equal((x + y) + z, x + (y + z))
    assert quadext_equal((x * y) * z, x * (y * z))
    assert quadext_equal(x * (y + z), x * y + x * z)
    assert quadext_equal(x * y, y * x)


@settings(max_examples=80, deadline=None)
@given(quadexts())
def test_quadext_conjugation_kills_root_component(x):
    prod = x * x.conjugate()
    assert prod.is_rational
    assert prod.a == x.norm()


@settings(max_examples=80, deadline=None)
@given(quadexts().filter(lambda x: not x.norm().is_zero))
def test_quadext_inverse(x):
    assert quadext_equal(x * x.inverse(), QuadExt.scalar(1, U3))
