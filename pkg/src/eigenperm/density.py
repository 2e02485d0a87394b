"""Closed-form law of Y_{inf,2} at theta = 1 and its Stieltjes transform."""

from __future__ import annotations

import cmath
import math
from functools import lru_cache

import numpy as np
from scipy.integrate import quad

from .asymptotics import cumulant_series

P0 = math.exp(1.5) / math.pi
CUT_TOLERANCE = 1e-12
SERIES_RADIUS = 0.1
SERIES_ORDER = 30


class QuadratureError(RuntimeError):
    pass


@lru_cache(maxsize=1)
def _kappa_floats() -> tuple[float, ...]:
    return tuple(float(c) for c in cumulant_series(2, 1, SERIES_ORDER).coefficients)


def _distance_to_cuts(z: complex) -> float:
    x, y = abs(z.real), abs(z.imag)
    if x >= 1:
        return y
    return math.hypot(1 - x, y)


def K_series(z: complex, order: int = SERIES_ORDER) -> complex:
    """Partial sum sum_{2m <= order} kappa_{2m} z^{2m} (k = 2, theta = 1)."""
    c = _kappa_floats() if order == SERIES_ORDER else tuple(float(x) for x in cumulant_series(2, 1, order).coefficients)
    out = 0j
    for coef in reversed(c[: order + 1]):
        out = out * z + coef
    return out


def K_closed(z: complex) -> complex:
    """3/2 - (1 - 1/z)^2 log(1 - z) / 2 - (1 + 1/z)^2 log(1 + z) / 2.

    Principal logarithms, so the cuts are [1, inf) and (-inf, -1]. Near 0 the
    expression cancels catastrophically and the power series is used.
    """
    z = complex(z)
    if not all(map(math.isfinite, (z.real, z.imag))):
        raise ValueError(f"non-finite argument {z}")
    if _distance_to_cuts(z) < CUT_TOLERANCE:
        raise ValueError(f"K is not defined on its branch cuts; got z={z}")
    if abs(z) < SERIES_RADIUS:
        return K_series(z)
    w = 1 / z
    return 1.5 - 0.5 * (1 - w) ** 2 * cmath.log(1 - z) - 0.5 * (1 + w) ** 2 * cmath.log(1 + z)


def stieltjes_G(z: complex) -> complex:
    """G(z) = exp(K(1/z)) / z, the Stieltjes transform of the k = 2 limit law."""
    z = complex(z)
    if z.imag == 0 and abs(z.real) <= 1:
        raise ValueError(f"G is defined off the support [-1, 1]; got z={z}")
    return cmath.exp(K_closed(1 / z)) / z


def inversion_check(t: float, epsilon: float) -> float:
    """-Im G(t + i epsilon) / pi, which tends to the density as epsilon -> 0."""
    return -stieltjes_G(complex(t, epsilon)).imag / math.pi


def density_p(t: float) -> float:
    """Density of Y_{inf,2} for theta = 1 on [-1, 1]."""
    a = abs(float(t))
    if a > 1:
        raise ValueError(f"density is supported on [-1, 1]; got t={t}")
    if a < 1e-8:
        return P0
    if a == 1:
        return 0.0
    log_val = (
        -math.log(a)
        - 0.5 * (1 - a) ** 2 * math.log(1 / a - 1)
        - 0.5 * (1 + a) ** 2 * math.log(1 / a + 1)
    )
    return math.exp(1.5 + log_val) / math.pi * math.sin(math.pi * (1 - a) ** 2 / 2)


def _quad(f, a, b):
    val, err = quad(f, a, b, limit=200, epsabs=1e-12, epsrel=1e-10)
    if not math.isfinite(val) or err > 1e-8:
        raise QuadratureError(f"quadrature on [{a}, {b}] did not converge (error estimate {err})")
    return val


def _half_integral(g) -> float:
    """integral_0^1 g(t) dt with t = 1 - sqrt(u) on [1/2, 1] to smooth the edge."""
    inner = _quad(g, 0.0, 0.5)
    edge = _quad(lambda u: g(1 - math.sqrt(u)) / (2 * math.sqrt(u)) if u > 0 else 0.0, 0.0, 0.25)
    return inner + edge


def density_moment(m: int) -> float:
    """integral of t^m p(t) over [-1, 1] by adaptive quadrature."""
    if m < 0 or m > 12:
        raise ValueError("density_moment supports 0 <= m <= 12")
    half = _half_integral(lambda t: t ** m * density_p(t))
    return half * (1 + (-1) ** m)


def cdf(t: float) -> float:
    """P(Y_{inf,2} <= t), theta = 1."""
    t = float(t)
    if t <= -1:
        return 0.0
    if t >= 1:
        return 1.0
    a = abs(t)
    part = _quad(density_p, 0.0, a) if a < 0.5 else _quad(density_p, 0.0, 0.5) + _quad(density_p, 0.5, a)
    return 0.5 + math.copysign(part, t)


@lru_cache(maxsize=4)
def cdf_table(points: int = 2001) -> tuple[np.ndarray, np.ndarray]:
    """CDF on an even grid of [-1, 1], integrated panel by panel."""
    grid = np.linspace(-1.0, 1.0, points)
    half = grid[grid >= 0]
    cum = [0.0]
    for lo, hi in zip(half[:-1], half[1:]):
        cum.append(cum[-1] + _quad(density_p, lo, hi))
    cum = np.array(cum)
    right = 0.5 + cum
    left = 0.5 - cum[::-1]
    values = np.clip(np.concatenate([left[:-1], right]), 0.0, 1.0)
    grid.flags.writeable = False
    values.flags.writeable = False
    return grid, values


def cdf_interp(x) -> np.ndarray:
    grid, values = cdf_table()
    return np.interp(x, grid, values, left=0.0, right=1.0)


def ks_distance(samples, cdf_fn=cdf_interp) -> float:
    """Kolmogorov-Smirnov distance between the empirical law of ``samples`` and a CDF."""
    x = np.sort(np.asarray(samples, dtype=np.float64))
    N = len(x)
    if N == 0:
        raise ValueError("no samples")
    F = cdf_fn(x)
    i = np.arange(1, N + 1)
    return float(max(np.max(i / N - F), np.max(F - (i - 1) / N)))


def density_table(points: int = 201) -> list[tuple[float, float, float]]:
    """(t, p(t), CDF(t)) on an even grid of [-1, 1]."""
    ts = np.linspace(-1.0, 1.0, points)
    F = cdf_interp(ts)
    return [(float(t), density_p(t), float(f)) for t, f in zip(ts, F)]
