"""Binary necklace counts by period."""

from __future__ import annotations

import math
from functools import lru_cache
from itertools import combinations


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return tuple(sorted(set(small + [n // d for d in small])))


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    out = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            out = -out
        p += 1
    if n > 1:
        out = -out
    return out


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    out = n
    p = 2
    m = n
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            out -= out // p
        p += 1
    if m > 1:
        out -= out // m
    return out


@lru_cache(maxsize=None)
def aperiodic_necklaces(length: int, ones: int) -> int:
    """L_{length, ones}: necklaces whose rotation class has full size."""
    if length == 0:
        return 0
    total = sum(mobius(d) * math.comb(length // d, ones // d) for d in divisors(math.gcd(length, ones)))
    q, r = divmod(total, length)
    assert r == 0
    return q


@lru_cache(maxsize=None)
def necklaces(length: int, ones: int) -> int:
    """N_{length, ones}: all binary necklaces of the given length and weight."""
    total = sum(totient(d) * math.comb(length // d, ones // d) for d in divisors(math.gcd(length, ones)))
    q, r = divmod(total, length)
    assert r == 0
    return q


@lru_cache(maxsize=None)
def necklaces_with_period(length: int, ones: int, period: int) -> int:
    """N^d_{length, ones}: necklaces of period ``period``; zero unless the period divides."""
    if length % period or (ones * period) % length:
        return 0
    return aperiodic_necklaces(period, ones * period // length)


def necklace_counts(length: int, ones: int) -> tuple[int, int, dict[int, int]]:
    """(N, L, {period: N^period}) for binary necklaces of ``length`` with ``ones`` ones.

    Only periods with a nonzero count appear in the map.
    """
    if not 0 <= ones <= length:
        raise ValueError(f"need 0 <= ones <= length, got {ones}, {length}")
    by_period = {}
    for d in divisors(length):
        c = necklaces_with_period(length, ones, d)
        if c:
            by_period[d] = c
    return necklaces(length, ones), aperiodic_necklaces(length, ones), by_period


def enumerate_necklaces(length: int, ones: int) -> dict[int, int]:
    """Brute-force rotation classes of 0/1 strings, keyed by period."""
    seen = set()
    by_period: dict[int, int] = {}
    for pos in combinations(range(length), ones):
        word = [0] * length
        for p in pos:
            word[p] = 1
        rots = {tuple(word[i:] + word[:i]) for i in range(length)}
        rep = min(rots)
        if rep in seen:
            continue
        seen.add(rep)
        by_period[len(rots)] = by_period.get(len(rots), 0) + 1
    return by_period
