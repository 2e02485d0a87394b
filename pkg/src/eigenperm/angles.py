"""Exact eigenangle endpoints.

Irrational endpoints are carried as exact rationals read from decimal
literals of at least 40 significant digits. Since every such value has a
power-of-ten denominator, ``{L*alpha}`` and ``floor(L*alpha)`` reduce to
integer arithmetic on the numerator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction

from .errors import ConfigError

MIN_DIGITS = 40

# fractional parts at 60 significant digits
CONSTANTS = {
    "sqrt2": "0.414213562373095048801688724209698078569671875376948073176680",
    "sqrt3": "0.732050807568877293527446341505872366942805253810380628055807",
    "sqrt5": "0.236067977499789696409173668731276235440618359611525724270897",
    "sqrt7": "0.645751311064590590501615753639260425710259183082450180368334",
    # (sqrt5 - 1)/2: not linearly independent of sqrt5 together with 1
    "golden": "0.618033988749894848204586834365638117720309179805762862135449",
}


@dataclass(frozen=True)
class Angle:
    """An eigenangle in [0, 1) stored as ``num / den`` exactly."""

    num: int
    den: int
    name: str = ""

    def __post_init__(self):
        if self.den <= 0 or not 0 <= self.num < self.den:
            raise ConfigError(f"angle {self.num}/{self.den} not in [0, 1)")

    @classmethod
    def parse(cls, text: str, min_digits: int = MIN_DIGITS) -> "Angle":
        """Read a named constant (``sqrt2``...) or a decimal literal."""
        key = text.strip()
        if key in CONSTANTS:
            return cls._from_decimal(CONSTANTS[key], key, min_digits)
        return cls._from_decimal(key, "", min_digits)

    @classmethod
    def _from_decimal(cls, text: str, name: str, min_digits: int) -> "Angle":
        try:
            d = Decimal(text)
        except Exception as exc:
            raise ConfigError(f"cannot parse angle {text!r}") from exc
        if not d.is_finite():
            raise ConfigError(f"angle {text!r} is not finite")
        digits = len(d.as_tuple().digits)
        if digits < min_digits:
            raise ConfigError(
                f"angle {text!r} has {digits} significant digits; at least {min_digits} required"
            )
        f = Fraction(d)
        return cls(f.numerator, f.denominator, name)

    @classmethod
    def from_fraction(cls, value: Fraction, name: str = "") -> "Angle":
        value = Fraction(value)
        return cls(value.numerator, value.denominator, name)

    @property
    def value(self) -> Fraction:
        return Fraction(self.num, self.den)

    def floor_mul(self, L: int) -> int:
        """floor(L * angle)."""
        return (L * self.num) // self.den

    def frac_mul(self, L: int) -> Fraction:
        """{L * angle} as an exact rational."""
        return Fraction((L * self.num) % self.den, self.den)

    def frac_num(self, L: int) -> int:
        """Numerator of {L * angle} over ``self.den``."""
        return (L * self.num) % self.den

    def lattice_margin(self, L: int) -> Fraction:
        """Distance from L * angle to the nearest integer."""
        r = Fraction((L * self.num) % self.den, self.den)
        return min(r, 1 - r)

    def near_lattice(self, L: int, digits: int | None = None) -> bool:
        """True when the rational stand-in could flip floor(L * x) for the true x.

        A decimal literal with ``digits`` significant digits is within
        ``10**-digits`` of the constant it names, so ``L * x`` moves by at
        most ``L * 10**-digits``.
        """
        if digits is None:
            digits = len(str(self.den)) - 1
        return self.lattice_margin(L) <= Fraction(L, 10 ** digits)

    def __float__(self):
        return self.num / self.den

    def __str__(self):
        return self.name or str(float(self))


@dataclass(frozen=True)
class Interval:
    """Open arc (alpha, beta) of the circle with 0 < alpha < beta < 1."""

    alpha: Angle
    beta: Angle

    def __post_init__(self):
        if self.alpha.num == 0:
            raise ConfigError("interval must satisfy alpha > 0")
        if not self.alpha.value < self.beta.value:
            raise ConfigError(f"interval endpoints must satisfy alpha < beta, got {self.alpha}, {self.beta}")

    @classmethod
    def parse(cls, alpha: str, beta: str) -> "Interval":
        return cls(Angle.parse(alpha), Angle.parse(beta))

    @property
    def length(self) -> Fraction:
        return self.beta.value - self.alpha.value

    def cycle_count(self, L: int) -> int:
        """Number of angles {0, 1/L, ..., (L-1)/L} inside the open arc.

        Equals floor(L beta) - floor(L alpha) unless L beta is an integer.
        """
        return -((-L * self.beta.num) // self.beta.den) - 1 - self.alpha.floor_mul(L)

    def frac_diff(self, L: int) -> Fraction:
        """{L alpha} - {L beta}."""
        return self.alpha.frac_mul(L) - self.beta.frac_mul(L)

    def contains(self, x: Fraction) -> bool:
        return self.alpha.value < x < self.beta.value

    def __str__(self):
        return f"({self.alpha}, {self.beta})"


def default_interval() -> Interval:
    return Interval.parse("sqrt2", "sqrt3")


def common_denominator(interval: Interval) -> int:
    a, b = interval.alpha.den, interval.beta.den
    return a * b // math.gcd(a, b)


def frac_diff_numerators(interval: Interval, n: int) -> tuple[list[int], int]:
    """Integers U_j with {j alpha} - {j beta} = U_j / D for j = 0..n, and D."""
    D = common_denominator(interval)
    a = interval.alpha.num * (D // interval.alpha.den)
    b = interval.beta.num * (D // interval.beta.den)
    return [(j * a) % D - (j * b) % D for j in range(n + 1)], D
