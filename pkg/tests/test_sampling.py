from collections import Counter
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.stats import chisquare

from eigenperm.cycles import EwensParams, enumerate_cycle_types, ewens_class_probability, CycleType
from eigenperm.sampling import (
    feller_cycle_counts_bulk,
    feller_cycle_lengths,
    sample_ewens,
    sample_ewens_indexed,
    sample_poisson_counts,
    sample_rng,
)


@given(st.integers(1, 300), st.integers(0, 2**32), st.sampled_from([0.5, 1.0, 2.0]))
def test_lengths_partition_n(n, seed, theta):
    lengths = feller_cycle_lengths(n, theta, sample_rng(seed))
    assert lengths.sum() == n and (lengths > 0).all()


def test_determinism_and_index_independence():
    p = EwensParams(200, Fraction(1))
    assert sample_ewens(p, 7) == sample_ewens(p, 7)
    a = [sample_ewens_indexed(p, 3, i) for i in range(20)]
    b = [sample_ewens_indexed(p, 3, i) for i in reversed(range(20))][::-1]
    assert a == b
    assert len(set(a)) > 1


def test_bulk_rows_are_cycle_counts():
    counts = feller_cycle_counts_bulk(9, 1.5, sample_rng(1), 500)
    assert (counts @ np.arange(1, 10) == 9).all()


@pytest.mark.parametrize("theta", [Fraction(1, 2), Fraction(2)])
def test_chi_square_against_ewens(theta):
    n = 6
    types = [ct for ct, _ in enumerate_cycle_types(n)]
    counts = feller_cycle_counts_bulk(n, float(theta), sample_rng(11), 200_000)
    observed = Counter(CycleType.from_counts({j + 1: int(c) for j, c in enumerate(row) if c}, n) for row in counts)
    obs = np.array([observed[ct] for ct in types])
    exp = np.array([float(ewens_class_probability(ct, theta)) for ct in types]) * len(counts)
    assert chisquare(obs, exp).pvalue > 1e-3


def test_poisson_counts_means():
    rng = sample_rng(5)
    draws = np.array([sample_poisson_counts(20, 1.0, rng) for _ in range(20000)])
    expect = 1.0 / np.arange(1, 21)
    se = np.sqrt(expect / len(draws))
    assert (np.abs(draws.mean(0) - expect) < 5 * se).all()
