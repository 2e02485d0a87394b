"""Fractional-part sequences {j alpha}: Weyl sums, discrepancy, power-mean limits."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .angles import Angle


@dataclass(frozen=True)
class FracSequence:
    """The values {j alpha} for j = 1..n, produced exactly on demand."""

    alpha: Angle
    n: int

    def __len__(self):
        return self.n

    def __getitem__(self, j: int) -> Fraction:
        if not 1 <= j <= self.n:
            raise IndexError(j)
        return self.alpha.frac_mul(j)

    def __iter__(self) -> Iterator[Fraction]:
        for j in range(1, self.n + 1):
            yield self.alpha.frac_mul(j)

    def floats(self) -> np.ndarray:
        den = self.alpha.den
        return np.array([(j * self.alpha.num) % den / den for j in range(1, self.n + 1)])


def _diff_numerators(alpha: Angle, beta: Angle, n: int) -> tuple[list[int], int]:
    """U_j with {j alpha} - {j beta} = U_j / D for j = 1..n (index 0 unused)."""
    D = alpha.den * beta.den // math.gcd(alpha.den, beta.den)
    a = alpha.num * (D // alpha.den)
    b = beta.num * (D // beta.den)
    return [0] + [(j * a) % D - (j * b) % D for j in range(1, n + 1)], D


def weyl_sum(h: Sequence[int], alphas: Sequence[Angle], n: int) -> complex:
    """(1/n) sum_{j<=n} exp(2 pi i h . ({j alpha_1}, ..., {j alpha_d}))."""
    if len(h) != len(alphas):
        raise ValueError("h and alphas must have the same length")
    if not any(h):
        raise ValueError("h must be nonzero")
    if n < 1:
        raise ValueError("n must be positive")
    # h . {j alpha} = j (h . alpha) mod 1, so only the combined angle matters
    gamma = sum((hi * a.value for hi, a in zip(h, alphas)), Fraction(0)) % 1
    num, den = gamma.numerator, gamma.denominator
    phases = np.array([(j * num) % den for j in range(1, n + 1)], dtype=object)
    x = np.array([p / den for p in phases], dtype=np.float64)
    z = np.exp(2j * np.pi * x)
    return complex(math.fsum(z.real), math.fsum(z.imag)) / n


def discrepancy_1d(points: Sequence, kind: str = "star") -> float:
    """Discrepancy of points in [0, 1), exactly, by sorting.

    ``star``: sup over [0, x) of |count/N - x|.
    ``extreme``: sup over all subintervals; equals the sum of the two
    one-sided star deviations.
    """
    if len(points) == 0:
        raise ValueError("discrepancy of an empty point set")
    x = sorted(points)
    N = len(x)
    above = max(Fraction(i + 1, N) - Fraction(v) for i, v in enumerate(x)) if isinstance(x[0], Fraction) else max((i + 1) / N - v for i, v in enumerate(x))
    below = max(Fraction(v) - Fraction(i, N) for i, v in enumerate(x)) if isinstance(x[0], Fraction) else max(v - i / N for i, v in enumerate(x))
    if kind == "star":
        return float(max(above, below))
    if kind == "extreme":
        return float(max(above, 0) + max(below, 0))
    raise ValueError(f"unknown discrepancy kind {kind!r}")


@dataclass(frozen=True)
class GridDiscrepancy:
    """Star discrepancy of a 2D point set bracketed by a grid of boxes."""

    lower: float
    upper: float
    resolution: int


def discrepancy_2d(points, resolution: int = 256) -> GridDiscrepancy:
    """Anchored-box discrepancy of points in [0, 1)^2 on a resolution x resolution grid.

    ``lower`` is the exact maximum over grid-corner boxes; any anchored box
    is sandwiched between grid boxes whose areas differ by at most
    2/resolution, so the true value is at most ``upper``.
    """
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError("points must be an (N, 2) array")
    N = len(pts)
    if N == 0:
        raise ValueError("discrepancy of an empty point set")
    R = int(resolution)
    cells = np.minimum((pts * R).astype(np.int64), R - 1)
    hist = np.zeros((R, R), dtype=np.int64)
    np.add.at(hist, (cells[:, 0], cells[:, 1]), 1)
    cum = np.zeros((R + 1, R + 1), dtype=np.int64)
    cum[1:, 1:] = hist.cumsum(0).cumsum(1)
    g = np.arange(R + 1) / R
    area = np.outer(g, g)
    lower = float(np.max(np.abs(cum / N - area)))
    return GridDiscrepancy(lower, lower + 2.0 / R, R)


def _power_sum(U: list[int], D: int, m: int, weight_exp: int, n: int) -> Fraction:
    if weight_exp:
        s = sum(j ** weight_exp * U[j] ** m for j in range(1, n + 1))
    else:
        s = sum(U[j] ** m for j in range(1, n + 1))
    return Fraction(s, D ** m)


def empirical_power_mean(alpha: Angle, beta: Angle, m: int, n: int) -> float:
    """(1/n) sum_{j<=n} ({j alpha} - {j beta})^m, summed exactly."""
    if m < 1 or n < 1:
        raise ValueError("need m >= 1 and n >= 1")
    U, D = _diff_numerators(alpha, beta, n)
    return float(_power_sum(U, D, m, 0, n) / n)


def weighted_power_mean(alpha: Angle, beta: Angle, m: int, k: int, n: int) -> float:
    """n^(-m(k-1)) sum_{j<=n} j^(m(k-1)-1) ({j alpha} - {j beta})^m, summed exactly."""
    if k < 2 or m < 1 or n < 1:
        raise ValueError("need k >= 2, m >= 1, n >= 1")
    U, D = _diff_numerators(alpha, beta, n)
    e = m * (k - 1)
    return float(_power_sum(U, D, m, e - 1, n) / n ** e)


def power_mean_table(alpha: Angle, beta: Angle, n: int, ms: Sequence[int], ks: Sequence[int]) -> dict:
    """Empirical and weighted means for several (m, k) sharing one pass over j."""
    U, D = _diff_numerators(alpha, beta, n)
    out = {}
    for m in ms:
        out[("empirical", m)] = float(_power_sum(U, D, m, 0, n) / n)
        for k in ks:
            e = m * (k - 1)
            out[("weighted", m, k)] = float(_power_sum(U, D, m, e - 1, n) / n ** e)
    return out


def empirical_power_limit(m: int) -> Fraction:
    return Fraction(0) if m % 2 else Fraction(2, (m + 1) * (m + 2))


def weighted_power_limit(m: int, k: int) -> Fraction:
    return Fraction(0) if m % 2 else Fraction(2, (k - 1) * m * (m + 1) * (m + 2))


@dataclass(frozen=True)
class HarmonicSums:
    partial: np.ndarray
    running_max: np.ndarray

    @property
    def final(self) -> float:
        return float(self.partial[-1])

    @property
    def max(self) -> float:
        return float(self.running_max[-1])


def bounded_harmonic_sum(alpha: Angle, beta: Angle, n: int) -> HarmonicSums:
    """Partial sums of sum_{j<=N} ({j alpha} - {j beta}) / j and their running max of |.|."""
    U, D = _diff_numerators(alpha, beta, n)
    terms = np.array([U[j] / D / j for j in range(1, n + 1)], dtype=np.float64)
    partial = np.cumsum(terms)
    return HarmonicSums(partial, np.maximum.accumulate(np.abs(partial)))
