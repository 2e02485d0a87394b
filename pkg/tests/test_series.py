import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from eigenperm.intpoly import poly_mul, poly_mul_naive
from eigenperm.series import RationalSeries, complete_bell, exp_by_bell, series_exp

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=20)


def test_exp_of_z_is_exponential():
    e = series_exp(RationalSeries.from_list([0, 1] + [0] * 8))
    assert e.coefficients == tuple(Fraction(1, math.factorial(m)) for m in range(10))


def test_bell_numbers():
    assert [complete_bell([1] * m, m) for m in range(8)] == [1, 1, 2, 5, 15, 52, 203, 877]


@given(st.lists(fractions, min_size=1, max_size=8))
def test_exp_routes_agree(tail):
    s = RationalSeries.from_list([0] + tail)
    assert series_exp(s) == exp_by_bell(s)


@given(st.lists(fractions, min_size=1, max_size=6), st.lists(fractions, min_size=1, max_size=6))
def test_exp_is_a_homomorphism(a, b):
    M = min(len(a), len(b))
    sa = RationalSeries.from_list([0] + a[:M])
    sb = RationalSeries.from_list([0] + b[:M])
    assert series_exp(sa + sb) == series_exp(sa) * series_exp(sb)


def test_truncation_errors():
    s = RationalSeries.from_list([0, 1, 2])
    with pytest.raises(ValueError):
        s.coefficient(3)
    with pytest.raises(ValueError):
        s.truncate(5)
    with pytest.raises(ValueError):
        series_exp(RationalSeries.from_list([1, 1]))


ints = st.integers(-(2**200), 2**200)


@given(st.lists(ints, min_size=1, max_size=30), st.lists(ints, min_size=1, max_size=30), st.integers(0, 70))
def test_kronecker_product_matches_schoolbook(a, b, degree):
    assert poly_mul(a, b, degree) == poly_mul_naive(a, b, degree)


def test_zero_polynomials():
    assert poly_mul([0, 0], [1, 2], 3) == [0, 0, 0, 0]
