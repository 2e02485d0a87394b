import math

import pytest
from hypothesis import given, strategies as st

from eigenperm.necklaces import (
    aperiodic_necklaces,
    divisors,
    enumerate_necklaces,
    mobius,
    necklace_counts,
    necklaces,
    totient,
)


def test_number_theory_helpers():
    assert [mobius(n) for n in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]
    assert [totient(n) for n in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]
    assert divisors(12) == (1, 2, 3, 4, 6, 12)


def test_small_values():
    # 6 beads, 3 ones: 000111, 001011, 001101, 010101
    assert necklace_counts(6, 3) == (4, 3, {2: 1, 6: 3})
    assert necklaces(4, 2) == 2
    assert aperiodic_necklaces(4, 2) == 1


@pytest.mark.parametrize("length", range(1, 13))
def test_formulas_match_enumeration(length):
    for ones in range(length + 1):
        N, L, by_period = necklace_counts(length, ones)
        assert by_period == enumerate_necklaces(length, ones)
        assert N == sum(by_period.values())
        assert L == by_period.get(length, 0)


@given(st.integers(1, 60), st.data())
def test_orbit_sizes_account_for_all_words(length, data):
    ones = data.draw(st.integers(0, length))
    _, _, by_period = necklace_counts(length, ones)
    assert sum(d * c for d, c in by_period.items()) == math.comb(length, ones)


@given(st.integers(1, 200))
def test_mobius_inversion_identity(n):
    assert sum(mobius(d) for d in divisors(n)) == (1 if n == 1 else 0)
    assert sum(totient(d) for d in divisors(n)) == n
