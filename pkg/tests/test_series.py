from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from patstats.series import BivariateSeries, Series, UPolynomial


def F(a, b=1):
    return Fraction(a, b)


def test_geometric_reciprocal():
    s = Series([1, -2], order=3)
    assert s.reciprocal().coeffs == (F(1), F(2), F(4), F(8))


def test_product_truncates_to_min_order():
    a = Series([1, 1], order=2)
    b = Series([1, -1], order=2)
    assert (a * b).coeffs == (F(1), F(0), F(-1))
    short = Series([1, 1], order=1)
    assert (a * short).order == 1


def test_reciprocal_defining_property():
    s = Series([3, 1, -2, 5], order=6)
    prod = s * s.reciprocal()
    assert prod.coeffs[0] == 1
    assert all(c == 0 for c in prod.coeffs[1:])


def test_reciprocal_rejects_zero_constant():
    with pytest.raises(ValueError):
        Series([0, 1], order=2).reciprocal()


def test_coeff_out_of_range():
    s = Series([1, 2], order=1)
    with pytest.raises(ValueError):
        s.coeff(2)


def test_pow_matches_repeated_multiplication():
    s = Series([1, 2, 3], order=4)
    assert s ** 3 == s * s * s
    assert (s ** 0).coeffs[0] == 1


def test_shift():
    s = Series([1, 2], order=3)
    assert s.shift(2).coeffs == (F(0), F(0), F(1), F(2))


@st.composite
def small_series(draw):
    order = draw(st.integers(0, 5))
    coeffs = draw(st.lists(st.integers(-4, 4), min_size=order + 1, max_size=order + 1))
    return Series(coeffs, order)


@given(small_series(), small_series(), small_series())
@settings(max_examples=50)
def test_mul_distributes_over_add(a, b, c):
    order = min(a.order, b.order, c.order)

    def cut(s):
        return Series(s.coeffs, order)

    left = cut(a) * (cut(b) + cut(c))
    right = cut(a) * cut(b) + cut(a) * cut(c)
    assert left == right


@given(small_series())
@settings(max_examples=50)
def test_reciprocal_round_trip(s):
    if s.coeffs[0] == 0:
        return
    prod = s * s.reciprocal()
    assert prod.coeffs[0] == 1 and all(c == 0 for c in prod.coeffs[1:])


# --- polynomials in the hole marker ----------------------------------------

def test_upolynomial_arithmetic():
    u = UPolynomial.u()
    p = (u + 1) ** 2
    assert p.coeffs == (F(1), F(2), F(1))
    assert (p - p).degree == -1
    assert p(1) == 4
    assert p[1] == 2 and p[5] == 0


def test_upolynomial_trims_trailing_zeros():
    assert UPolynomial((1, 0, 0)).degree == 0


def test_upolynomial_inverse():
    assert UPolynomial((2,)).inverse() == UPolynomial((F(1, 2),))
    with pytest.raises(ZeroDivisionError):
        UPolynomial.u().inverse()
    with pytest.raises(ZeroDivisionError):
        UPolynomial(()).inverse()


def test_bivariate_round_trip():
    u = UPolynomial.u()
    # 1/(1 - (u + 1) z) over two letters of weight (1 + u)
    s = BivariateSeries([UPolynomial((1,)), -(u + 1)], order=3).reciprocal()
    assert s.coeff(2) == (u + 1) ** 2
    assert s.coeff_hole(2, 1) == 2
    assert s.at_u_one().coeff(2) == 4


def test_bivariate_coeff_hole_bounds():
    s = BivariateSeries([UPolynomial((1,))], order=2)
    with pytest.raises(ValueError):
        s.coeff_hole(1, 2)
