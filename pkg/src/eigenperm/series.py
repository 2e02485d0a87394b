"""Truncated power series with exact rational coefficients."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class RationalSeries:
    """c_0 + c_1 z + ... + c_M z^M, known exactly up to order M."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(Fraction(c) for c in self.coefficients))
        if not self.coefficients:
            raise ValueError("a series needs at least the constant coefficient")

    @classmethod
    def from_list(cls, coefficients: Sequence) -> "RationalSeries":
        return cls(tuple(coefficients))

    @classmethod
    def zero(cls, order: int) -> "RationalSeries":
        return cls((Fraction(0),) * (order + 1))

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, m: int) -> Fraction:
        if m < 0:
            raise ValueError("negative index")
        if m > self.order:
            raise ValueError(f"coefficient {m} requested from a series known only to order {self.order}")
        return self.coefficients[m]

    __getitem__ = coefficient

    def truncate(self, order: int) -> "RationalSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return RationalSeries(self.coefficients[: order + 1])

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        M = min(self.order, other.order)
        return RationalSeries(tuple(a + b for a, b in zip(self.coefficients[: M + 1], other.coefficients[: M + 1])))

    def __mul__(self, other):
        if isinstance(other, RationalSeries):
            M = min(self.order, other.order)
            a, b = self.coefficients, other.coefficients
            return RationalSeries(tuple(sum((a[i] * b[m - i] for i in range(m + 1)), Fraction(0)) for m in range(M + 1)))
        return RationalSeries(tuple(c * other for c in self.coefficients))

    __rmul__ = __mul__

    def evaluate(self, z):
        """Horner evaluation of the truncated polynomial (float or complex z)."""
        out = 0
        for c in reversed(self.coefficients):
            out = out * z + float(c)
        return out


def series_exp(s: RationalSeries) -> RationalSeries:
    """exp(s) for s with zero constant term, via f' = s' f."""
    if s.coefficient(0) != 0:
        raise ValueError("series_exp needs a zero constant term")
    M = s.order
    c = s.coefficients
    f = [Fraction(1)] + [Fraction(0)] * M
    for m in range(1, M + 1):
        f[m] = sum((i * c[i] * f[m - i] for i in range(1, m + 1)), Fraction(0)) / m
    return RationalSeries(tuple(f))


def complete_bell(a: Sequence[Fraction], m: int) -> Fraction:
    """Complete Bell polynomial B_m(a_1, ..., a_m), with a[i-1] = a_i.

    B_{m+1} = sum_i C(m, i) a_{i+1} B_{m-i}.
    """
    B = [Fraction(1)]
    for j in range(m):
        B.append(sum((math.comb(j, i) * Fraction(a[i]) * B[j - i] for i in range(j + 1)), Fraction(0)))
    return B[m]


def exp_by_bell(s: RationalSeries) -> RationalSeries:
    """exp(s) coefficient-wise as B_m(1! s_1, 2! s_2, ...) / m!."""
    if s.coefficient(0) != 0:
        raise ValueError("exp needs a zero constant term")
    a = [math.factorial(i) * s.coefficient(i) for i in range(1, s.order + 1)]
    return RationalSeries(tuple(complete_bell(a, m) / math.factorial(m) for m in range(s.order + 1)))
