from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from eigenperm.angles import Interval, default_interval
from eigenperm.asymptotics import (
    cross_moment_targets,
    cumulant_series,
    finite_n_moment,
    gaussian_moments_k1,
    kappa,
    limiting_moments,
    limiting_moments_direct,
    poissonized_cumulant,
    poissonized_finite_moment,
    poissonized_moments,
    watterson_weights,
)
from eigenperm.cycles import exact_expectation, watterson_prefix
from eigenperm.errors import BoundError, ConfigError
from eigenperm.spectra import y_statistic

I = default_interval()
THETAS = [Fraction(1, 2), Fraction(1), Fraction(2)]


def test_known_values_k2():
    t = limiting_moments(2, 1, 8)
    assert t[2] == Fraction(1, 12)
    assert t[4] == Fraction(29, 1440)
    assert t[4] == (kappa(2, 1, 4) + kappa(2, 1, 2) ** 2 / 2) * 24 / 24  # 4! [z^4] exp(K) / (1)_4
    assert all(t[m] == 0 for m in (1, 3, 5, 7))


def test_k3_second_moment():
    assert limiting_moments(3, 1, 4)[2] == Fraction(1, 24)


@pytest.mark.parametrize("theta", THETAS)
@pytest.mark.parametrize("k", [2, 3, 4])
def test_series_and_partition_paths_agree(k, theta):
    t = limiting_moments(k, theta, 12)
    assert [limiting_moments_direct(k, theta, m) for m in range(13)] == list(t.moments)


@given(st.integers(2, 5), st.fractions(min_value=Fraction(1, 10), max_value=5, max_denominator=10))
def test_moment_table_basics(k, theta):
    t = limiting_moments(k, theta, 6)
    assert t[0] == 1
    assert t[1] == t[3] == t[5] == 0
    assert t[2] > 0 and t[4] >= t[2] ** 2  # Jensen
    assert t[2] <= 1  # |Y| <= 1


def test_cumulant_series_shape():
    s = cumulant_series(2, 1, 6)
    assert s.coefficients[0] == 0 and s.coefficients[1] == 0 and s.coefficients[2] == Fraction(1, 12)


def test_invalid_parameters():
    with pytest.raises(ConfigError):
        kappa(1, 1, 2)
    with pytest.raises(ConfigError):
        limiting_moments(2, 0)
    with pytest.raises(BoundError):
        limiting_moments_direct(2, 1, 32)
    with pytest.raises(BoundError):
        finite_n_moment(200, 2, 1, I, 3)


def test_poissonized_values():
    assert poissonized_cumulant(2, 1, 2) == Fraction(1, 12)
    m = poissonized_moments(2, 1, 4)
    assert m[2] == Fraction(1, 12)
    assert m[4] == Fraction(3, 80)
    assert m[4] != limiting_moments(2, 1, 4)[4]


def test_gaussian_k1():
    assert gaussian_moments_k1(1, 2) == Fraction(1, 6)
    assert gaussian_moments_k1(3, 4) == 3 * Fraction(1, 2) ** 2


def test_cross_moment_targets():
    prod, joint = cross_moment_targets()
    assert prod == Fraction(1, 144)
    assert joint == Fraction(7, 864)


@pytest.mark.parametrize("theta", THETAS)
def test_watterson_weights(theta):
    W, Q = watterson_weights(9, theta)
    assert [Fraction(w, Q) for w in W] == watterson_prefix(9, theta)


@pytest.mark.parametrize("theta", THETAS)
@pytest.mark.parametrize("k", [1, 2, 3])
def test_finite_moments_match_enumeration(k, theta):
    for n in range(1, 8):
        for m in range(1, 5):
            exact = exact_expectation(n, theta, lambda ct: y_statistic(ct, k, I) ** m)
            assert finite_n_moment(n, k, theta, I, m) == exact, (n, m)


def test_finite_second_moment_near_limit():
    assert abs(float(finite_n_moment(2000, 2, 1, I, 2)) - 1 / 12) < 0.01


def test_poissonized_finite_moment_small_n():
    # n = 1: Y* = C_1 u_1 with C_1 ~ Poisson(theta)
    u = I.frac_diff(1)
    assert poissonized_finite_moment(1, 2, 1, I, 1) == u
    assert poissonized_finite_moment(1, 2, 1, I, 2) == 2 * u * u
    assert poissonized_finite_moment(1, 2, 2, I, 2) == (2 + 4) * u * u


def test_finite_moment_other_interval():
    J = Interval.parse("sqrt5", "sqrt7")
    assert finite_n_moment(5, 2, 1, J, 2) == exact_expectation(5, 1, lambda ct: y_statistic(ct, 2, J) ** 2)
