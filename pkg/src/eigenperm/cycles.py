"""Cycle types, the Ewens measure, and exact factorial moments of cycle counts."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

from .errors import BoundError, ConfigError

ENUMERATION_BOUND = 12


def as_fraction(value) -> Fraction:
    """Parse an int, Fraction or string such as ``"1/2"`` into a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise ConfigError("theta must be given exactly (int, Fraction or 'p/q' string), not float")
    return Fraction(value)


@dataclass(frozen=True)
class CycleType:
    """Multiset of cycle lengths of a permutation of ``[n]``.

    ``parts`` holds ``(length, count)`` pairs sorted by length with no zero
    counts, so equal cycle types compare and hash equal.
    """

    n: int
    parts: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        total = 0
        last = 0
        for j, c in self.parts:
            if j <= last or c <= 0:
                raise ValueError(f"malformed cycle type parts {self.parts!r}")
            total += j * c
            last = j
        if self.n < 1 or total != self.n:
            raise ValueError(f"cycle lengths sum to {total}, expected n={self.n}")

    @classmethod
    def from_counts(cls, counts: Mapping[int, int], n: int | None = None) -> "CycleType":
        parts = tuple(sorted((int(j), int(c)) for j, c in counts.items() if c))
        if n is None:
            n = sum(j * c for j, c in parts)
        return cls(n, parts)

    @classmethod
    def from_lengths(cls, lengths: Sequence[int]) -> "CycleType":
        counts: dict[int, int] = {}
        for L in lengths:
            counts[int(L)] = counts.get(int(L), 0) + 1
        return cls.from_counts(counts)

    @property
    def counts(self) -> dict[int, int]:
        return dict(self.parts)

    def count(self, j: int) -> int:
        for length, c in self.parts:
            if length == j:
                return c
        return 0

    @property
    def lengths(self) -> tuple[int, ...]:
        """Distinct cycle lengths present."""
        return tuple(j for j, _ in self.parts)

    @property
    def num_cycles(self) -> int:
        return sum(c for _, c in self.parts)

    def partition(self) -> tuple[int, ...]:
        """Cycle lengths as a non-increasing tuple (one entry per cycle)."""
        out: list[int] = []
        for j, c in reversed(self.parts):
            out.extend([j] * c)
        return tuple(out)

    def representative(self) -> list[int]:
        """A one-line permutation (0-based images) with this cycle type."""
        perm = []
        start = 0
        for L in self.partition():
            perm.extend(start + (i + 1) % L for i in range(L))
            start += L
        return perm

    def __str__(self):
        return "{" + ", ".join(f"{j}:{c}" for j, c in self.parts) + "}"


@dataclass(frozen=True)
class EwensParams:
    n: int
    theta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "theta", as_fraction(self.theta))
        if self.n < 1:
            raise ConfigError(f"n must be positive, got {self.n}")
        if self.theta <= 0:
            raise ConfigError(f"theta must be positive, got {self.theta}")


def _check_bijection(perm: Sequence[int]) -> int:
    """Return the offset (0 or 1) of a one-line permutation, or raise."""
    n = len(perm)
    if n == 0:
        raise ValueError("empty permutation")
    values = sorted(perm)
    if values == list(range(n)):
        return 0
    if values == list(range(1, n + 1)):
        return 1
    raise ValueError(f"not a bijection on [n]: {list(perm)!r}")


def cycle_lengths_of(perm: Sequence[int]) -> list[int]:
    offset = _check_bijection(perm)
    images = [p - offset for p in perm]
    seen = [False] * len(images)
    lengths = []
    for start in range(len(images)):
        if seen[start]:
            continue
        L = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = images[i]
            L += 1
        lengths.append(L)
    return lengths


def cycle_type_of(perm: Sequence[int]) -> CycleType:
    """Cycle type of a one-line permutation, accepting 0- or 1-based images.

    >>> str(cycle_type_of([2, 3, 1]))
    '{3:1}'
    """
    return CycleType.from_lengths(cycle_lengths_of(perm))


def rising_factorial(x, m: int):
    """x (x+1) ... (x+m-1)."""
    out = 1
    for i in range(m):
        out *= x + i
    return out


def falling_factorial(x, m: int):
    """x (x-1) ... (x-m+1)."""
    out = 1
    for i in range(m):
        out *= x - i
    return out


def class_size(ct: CycleType) -> int:
    denom = 1
    for j, c in ct.parts:
        denom *= j ** c * math.factorial(c)
    return math.factorial(ct.n) // denom


def ewens_class_probability(ct: CycleType, theta) -> Fraction:
    """Probability of the conjugacy class ``ct`` under Ewens(theta)."""
    theta = as_fraction(theta)
    if theta <= 0:
        raise ConfigError(f"theta must be positive, got {theta}")
    return class_size(ct) * theta ** ct.num_cycles / rising_factorial(theta, ct.n)


def watterson_prefix(n: int, theta, upto: int | None = None) -> list[Fraction]:
    """``P[l] = prod_{i<l} (n-i)/(theta+n-i-1)`` for l = 0..upto (default n)."""
    theta = as_fraction(theta)
    upto = n if upto is None else upto
    out = [Fraction(1)]
    for i in range(upto):
        out.append(out[-1] * (n - i) / (theta + n - i - 1))
    return out


def watterson_factorial_moment(n: int, theta, b: Mapping[int, int]) -> Fraction:
    """E[prod_j (C_j)_{b_j}] under Ewens(theta) on S_n, exactly.

    The product of falling factorials of cycle counts has expectation
    ``1(l <= n) prod_j (theta/j)^{b_j} prod_{i<l} (n-i)/(theta+n-i-1)``
    with ``l = sum_j j b_j``.
    """
    theta = as_fraction(theta)
    if any(e < 0 for e in b.values()):
        raise ValueError("exponents must be non-negative")
    l = sum(j * e for j, e in b.items())
    if l > n:
        return Fraction(0)
    out = Fraction(1)
    for j, e in b.items():
        if e:
            out *= (theta / j) ** e
    for i in range(l):
        out *= Fraction(n - i) / (theta + n - i - 1)
    return out


def integer_partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n as non-increasing tuples, in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in integer_partitions(n - first, first):
            yield (first,) + rest


def enumerate_cycle_types(n: int, bound: int = ENUMERATION_BOUND) -> list[tuple[CycleType, int]]:
    """All cycle types of S_n with their conjugacy class sizes."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > bound:
        raise BoundError(f"enumerate_cycle_types: n={n} exceeds bound {bound}")
    out = []
    for lam in integer_partitions(n):
        ct = CycleType.from_lengths(lam)
        out.append((ct, class_size(ct)))
    return out


def exact_expectation(n: int, theta, fn) -> Fraction:
    """E[fn(ct)] under Ewens(theta) by exhaustive enumeration of cycle types."""
    return sum(
        (ewens_class_probability(ct, theta) * fn(ct) for ct, _ in enumerate_cycle_types(n)),
        Fraction(0),
    )
