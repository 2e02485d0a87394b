"""Ewens(theta) cycle-type sampler and the Poissonized cycle counts.

Cycle lengths come from the Feller coupling: with independent
xi_i ~ Bernoulli(theta / (theta + i - 1)), i = 1..n, the cycle lengths are
the gaps between consecutive ones in xi_1, ..., xi_n, 1. This is the
Chinese restaurant process read off without building the permutation.

Per-sample generators are derived from (master seed, sample index) through
numpy's SeedSequence, so a sample does not depend on which worker drew it.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache

import numpy as np

from .cycles import CycleType, EwensParams

RNG_ALGORITHM = "numpy.random.Philox seeded by SeedSequence(entropy=master_seed, spawn_key=(sample_index,))"


def sample_rng(master_seed: int, index: int | None = None) -> np.random.Generator:
    if index is None:
        ss = np.random.SeedSequence(master_seed)
    else:
        ss = np.random.SeedSequence(master_seed, spawn_key=(index,))
    return np.random.Generator(np.random.Philox(ss))


@lru_cache(maxsize=32)
def _new_cycle_probabilities(n: int, theta: float) -> np.ndarray:
    i = np.arange(1, n + 1, dtype=np.float64)
    p = theta / (theta + i - 1)
    p.flags.writeable = False
    return p


def feller_cycle_lengths(n: int, theta: float, rng: np.random.Generator) -> np.ndarray:
    """Cycle lengths (in order of creation) of one Ewens(theta) draw on S_n."""
    xi = rng.random(n) < _new_cycle_probabilities(n, theta)
    xi[0] = True
    ones = np.flatnonzero(xi)
    return np.diff(np.append(ones, n))


def feller_cycle_counts_bulk(n: int, theta: float, rng: np.random.Generator, size: int) -> np.ndarray:
    """Cycle counts of ``size`` independent draws from one generator.

    Row s, column j-1 holds C_j of draw s. Same construction as
    ``feller_cycle_lengths``, vectorized over draws; meant for large
    goodness-of-fit runs at small n, not for the seeded experiment path.
    """
    xi = rng.random((size, n)) < _new_cycle_probabilities(n, theta)
    xi[:, 0] = True
    xi = np.concatenate([xi, np.ones((size, 1), dtype=bool)], axis=1)
    pos = np.where(xi, np.arange(n + 1), n + 1)
    # position of the next one strictly after each column
    nxt = np.minimum.accumulate(pos[:, ::-1], axis=1)[:, ::-1]
    nxt = np.concatenate([nxt[:, 1:], np.full((size, 1), n + 1)], axis=1)
    rows, cols = np.nonzero(xi[:, :n])
    lengths = nxt[rows, cols] - cols
    counts = np.zeros((size, n), dtype=np.int64)
    np.add.at(counts, (rows, lengths - 1), 1)
    return counts


def sample_ewens(params: EwensParams, seed: int) -> CycleType:
    """One Ewens(theta) cycle type, deterministic in (params, seed).

    Uses SeedSequence(seed) directly; experiment runs use
    ``sample_ewens_indexed`` so that samples are independent of scheduling.
    """
    lengths = feller_cycle_lengths(params.n, float(params.theta), sample_rng(seed))
    return CycleType.from_counts(Counter(lengths.tolist()), params.n)


def sample_ewens_indexed(params: EwensParams, master_seed: int, index: int) -> CycleType:
    lengths = feller_cycle_lengths(params.n, float(params.theta), sample_rng(master_seed, index))
    return CycleType.from_counts(Counter(lengths.tolist()), params.n)


def sample_poisson_counts(n: int, theta: float, rng: np.random.Generator) -> np.ndarray:
    """Independent C_j ~ Poisson(theta / j), j = 1..n; entry j-1 holds C_j."""
    j = np.arange(1, n + 1, dtype=np.float64)
    return rng.poisson(theta / j)
