import math
from decimal import Decimal, getcontext
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from eigenperm.angles import CONSTANTS, Angle, Interval, default_interval, frac_diff_numerators
from eigenperm.errors import ConfigError


def test_named_constants_are_fractional_parts():
    getcontext().prec = 80
    for name, root in (("sqrt2", 2), ("sqrt3", 3), ("sqrt5", 5), ("sqrt7", 7)):
        exact = Decimal(root).sqrt() % 1
        assert abs(Decimal(Angle.parse(name).num) / Decimal(Angle.parse(name).den) - exact) < Decimal(10) ** -58
    assert abs(float(Angle.parse("golden")) - (math.sqrt(5) - 1) / 2) < 1e-15
    assert set(CONSTANTS) >= {"sqrt2", "sqrt3", "sqrt5", "sqrt7", "golden"}


def test_decimal_strings():
    a = Angle.parse("0.4142135623730950488016887242096980785696718753769480731766797")
    assert a.value == Angle.parse("sqrt2").value or abs(a.value - Angle.parse("sqrt2").value) < Fraction(1, 10**59)
    with pytest.raises(ConfigError):
        Angle.parse("0.41")  # too few digits to be a stand-in for an irrational
    with pytest.raises(ConfigError):
        Angle.parse("pi")


def test_interval_order():
    with pytest.raises(ConfigError):
        Interval.parse("sqrt3", "sqrt2")


def test_cycle_count_examples():
    I = default_interval()
    # 1/L spaced angles in (0.4142, 0.7320)
    assert [I.cycle_count(L) for L in (1, 2, 3, 4)] == [0, 1, 1, 1]
    assert I.cycle_count(10) == 3


@given(st.integers(1, 400))
def test_cycle_count_matches_enumeration(L):
    I = default_interval()
    assert I.cycle_count(L) == sum(1 for a in range(L) if I.contains(Fraction(a, L)))


@given(st.integers(1, 10**6))
def test_count_is_length_plus_frac_diff(L):
    I = default_interval()
    assert I.cycle_count(L) == L * I.length + I.frac_diff(L)


def test_rational_endpoint_on_lattice_is_excluded():
    I = Interval(Angle.from_fraction(Fraction(1, 4)), Angle.from_fraction(Fraction(1, 2)))
    assert I.cycle_count(4) == 0
    assert I.cycle_count(8) == 1


def test_frac_diff_numerators():
    I = default_interval()
    U, D = frac_diff_numerators(I, 50)
    assert all(Fraction(U[j], D) == I.frac_diff(j) for j in range(1, 51))
    assert U[0] == 0
