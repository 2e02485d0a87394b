"""Eigenangle spectra of the k-tuple and k-subset permutation representations.

A permutation representation is itself a permutation, so its spectrum is
determined by the cycle type of the induced permutation: each induced cycle
of length L contributes the angles {0, 1/L, ..., (L-1)/L}. Everything here is
computed from the cycle type of sigma alone.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .angles import Interval
from .cycles import CycleType, as_fraction, cycle_lengths_of, falling_factorial, watterson_prefix
from .errors import BoundError
from .necklaces import necklaces_with_period

K_BOUND = 5
BRUTE_FORCE_BOUND = 10**6


@dataclass(frozen=True)
class SpectrumCycleType:
    """Cycle type of an induced permutation: ``parts`` are (length, count) pairs."""

    total: int
    parts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if sum(L * c for L, c in self.parts) != self.total:
            raise ValueError("induced cycle lengths do not sum to the degree")

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> "SpectrumCycleType":
        parts = tuple(sorted((int(L), int(c)) for L, c in counts.items() if c))
        return cls(sum(L * c for L, c in parts), parts)

    @property
    def counts(self) -> dict[int, int]:
        return dict(self.parts)

    def angles(self) -> Counter:
        """The full eigenangle multiset; only sensible for small totals."""
        out: Counter = Counter()
        for L, c in self.parts:
            for a in range(L):
                out[Fraction(a, L)] += c
        return out

    def __str__(self):
        return "{" + ", ".join(f"{L}:{c}" for L, c in self.parts) + "}"


def _lcm(values: Iterable[int]) -> int:
    return math.lcm(*values)


def set_partitions(items: Sequence) -> Iterator[list[list]]:
    """All partitions of ``items`` into nonempty blocks."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def _check_k(n: int, k: int, bound: int):
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    if k > bound:
        raise BoundError(f"k={k} exceeds bound {bound}")


# ---------------------------------------------------------------- tuples

@lru_cache(maxsize=None)
def tuple_double_partition_shapes(k: int) -> tuple[tuple[tuple[tuple[int, ...], ...], int], ...]:
    """Double partitions of the set [k], grouped by shape.

    A double partition is a set partition {A_r} of [k] (entries of A_r lie in
    cycles of one common length, distinct lengths for distinct r) with a
    nested set partition of each A_r (entries in one sub-block share a cycle).
    The shape lists, per block, the sorted sub-block sizes. Blocks are
    labelled sets, so injective assignments of lengths to blocks never
    double count.
    """
    shapes: Counter = Counter()
    for outer in set_partitions(range(k)):
        nested_options = [list(set_partitions(block)) for block in outer]
        for choice in product(*nested_options):
            shape = tuple(sorted(tuple(sorted((len(s) for s in sub), reverse=True)) for sub in choice))
            shapes[shape] += 1
    return tuple(sorted(shapes.items()))


def induced_tuple_cycle_type(ct: CycleType, k: int, bound: int = K_BOUND) -> SpectrumCycleType:
    """Cycle type of sigma acting on ordered k-tuples of distinct points."""
    _check_k(ct.n, k, bound)
    counts = ct.counts
    lengths = ct.lengths
    out: Counter = Counter()
    for shape, mult in tuple_double_partition_shapes(k):
        m = len(shape)
        for seq in permutations(lengths, m):
            term = mult
            for i, sub in zip(seq, shape):
                term *= falling_factorial(counts[i], len(sub))
                if not term:
                    break
                for size in sub:
                    term *= falling_factorial(i, size)
            if not term:
                continue
            L = _lcm(seq)
            q, r = divmod(term, L)
            assert r == 0
            out[L] += q
    return SpectrumCycleType.from_counts(out)


# ---------------------------------------------------------------- subsets

@lru_cache(maxsize=None)
def subset_double_partitions(k: int) -> tuple[tuple[tuple[tuple[int, ...], ...], int], ...]:
    """Double partitions of the integer k as (rows, symmetry) pairs.

    Each row is a non-increasing sub-partition of k_r. Rows are in canonical
    non-increasing order; ``symmetry`` is the product of factorials of the
    multiplicities of identical rows, which is how often an ordered sequence
    of distinct lengths revisits the same set of subsets.
    """
    from .cycles import integer_partitions

    out = []
    seen = set()
    for outer in integer_partitions(k):
        for subs in product(*[list(integer_partitions(kr)) for kr in outer]):
            rows = tuple(sorted(subs, key=lambda row: (sum(row), row), reverse=True))
            if rows in seen:
                continue
            seen.add(rows)
            sym = 1
            for c in Counter(rows).values():
                sym *= math.factorial(c)
            out.append((rows, sym))
    return tuple(out)


@lru_cache(maxsize=None)
def _period_weights(i: int, ones: int) -> tuple[tuple[int, int], ...]:
    """(d, d * N^d_{i,ones}) for the periods present."""
    out = []
    for d in range(1, i + 1):
        if i % d == 0:
            c = necklaces_with_period(i, ones, d)
            if c:
                out.append((d, d * c))
    return tuple(out)


def induced_subset_cycle_type(ct: CycleType, k: int, bound: int = K_BOUND) -> SpectrumCycleType:
    """Cycle type of sigma acting on k-subsets."""
    _check_k(ct.n, k, bound)
    counts = ct.counts
    lengths = ct.lengths
    out: Counter = Counter()
    for rows, sym in subset_double_partitions(k):
        m = len(rows)
        denom = sym
        for row in rows:
            for c in Counter(row).values():
                denom *= math.factorial(c)
        # integer numerators over denom * L; each (rows, L) class is a union of
        # whole induced cycles, so the division is exact per class
        acc: Counter = Counter()
        for seq in permutations(lengths, m):
            prefactor = 1
            options = []
            for i, row in zip(seq, rows):
                if row[0] > i:
                    prefactor = 0
                    break
                prefactor *= falling_factorial(counts[i], len(row))
                if not prefactor:
                    break
                options.extend(_period_weights(i, size) for size in row)
            if not prefactor:
                continue
            for combo in product(*options):
                weight = prefactor
                for _, w in combo:
                    weight *= w
                acc[math.lcm(*(d for d, _ in combo))] += weight
        for L, num in acc.items():
            q, r = divmod(num, denom * L)
            if r:
                raise AssertionError(f"non-integral subset cycle count at length {L}")
            out[L] += q
    return SpectrumCycleType.from_counts(out)


# ---------------------------------------------------------------- oracle

def brute_force_induced(perm: Sequence[int], k: int, mode: str, bound: int = BRUTE_FORCE_BOUND) -> SpectrumCycleType:
    """Build the induced permutation explicitly and read off its cycle type."""
    n = len(perm)
    offset = 0 if 0 in perm else 1
    cycle_lengths_of(perm)  # validates
    images = [p - offset for p in perm]
    if mode == "tuple":
        size = math.perm(n, k)
        if size > bound:
            raise BoundError(f"{size} tuples exceeds bound {bound}")
        points = list(permutations(range(n), k))
        act = lambda t: tuple(images[x] for x in t)
    elif mode == "subset":
        size = math.comb(n, k)
        if size > bound:
            raise BoundError(f"{size} subsets exceeds bound {bound}")
        points = list(combinations(range(n), k))
        act = lambda t: tuple(sorted(images[x] for x in t))
    else:
        raise ValueError(f"mode must be 'tuple' or 'subset', got {mode!r}")
    index = {p: i for i, p in enumerate(points)}
    induced = [index[act(p)] for p in points]
    return SpectrumCycleType.from_counts(Counter(cycle_lengths_of(induced)))


# ---------------------------------------------------------------- counting

def count_in_interval(spectrum: SpectrumCycleType | Mapping[int, int], interval: Interval) -> int:
    """Number of eigenangles (with multiplicity) in the open arc.

    Also accepts a signed mapping length -> coefficient, as produced for
    the hook irreducible representation.
    """
    parts = spectrum.parts if isinstance(spectrum, SpectrumCycleType) else spectrum.items()
    return sum(c * interval.cycle_count(L) for L, c in parts)


def y_statistic(ct: CycleType, k: int, interval: Interval) -> Fraction:
    """sum_j j^(k-1) C_j ({j alpha} - {j beta}) / n^(k-1), exactly."""
    if k < 1:
        raise ValueError("k must be >= 1")
    s = sum((j ** (k - 1) * c * interval.frac_diff(j) for j, c in ct.parts), Fraction(0))
    return s / ct.n ** (k - 1)


def representation_count(ct: CycleType, k: int, interval: Interval, mode: str) -> int:
    """X: number of eigenangles of the mode-k representation of sigma in the arc."""
    if mode == "tuple":
        return count_in_interval(induced_tuple_cycle_type(ct, k), interval)
    if mode in ("set", "subset"):
        return count_in_interval(induced_subset_cycle_type(ct, k), interval)
    if mode == "irrep":
        from .hook import hook_irrep_count

        return hook_irrep_count(ct, k, interval)
    raise ValueError(f"unknown mode {mode!r}")


def y_rep_statistic(ct: CycleType, k: int, interval: Interval, mode: str, centering):
    """(X - centering) / n^(k-1), times k! for the set and irrep modes.

    Exact (Fraction) when ``centering`` is exact, float otherwise.
    """
    x = representation_count(ct, k, interval, mode)
    scale = 1 if mode == "tuple" else math.factorial(k)
    if isinstance(centering, float):
        return scale * (x - centering) / ct.n ** (k - 1)
    return scale * (x - as_fraction(centering)) / ct.n ** (k - 1)


# ---------------------------------------------------------------- smooth f

def trapezoid_error(f: Callable, j: int, integral=None):
    """R_j(f): trapezoid-rule error of f on [0, 1] with j panels.

    ``f`` is called with exact ``Fraction`` nodes. Without ``integral`` the
    exact integral is replaced by adaptive quadrature.
    """
    if j < 1:
        raise ValueError("j must be positive")
    if integral is None:
        integral = getattr(f, "integral", None)
    if integral is None:
        from scipy.integrate import quad

        integral = quad(lambda x: float(f(x)), 0.0, 1.0, limit=200)[0]
    total = (f(Fraction(0)) + f(Fraction(1))) * Fraction(1, 2)
    for i in range(1, j):
        total += f(Fraction(i, j))
    return total / j - integral


class Indicator:
    """Indicator of an open arc, exact on rational arguments."""

    def __init__(self, interval: Interval):
        self.interval = interval
        self.integral = interval.length

    def __call__(self, x) -> int:
        return 1 if self.interval.contains(Fraction(x)) else 0


def y_statistic_f(ct: CycleType, k: int, f: Callable, integral=None):
    """sum_j C_j j^k R_j(f) / n^(k-1)."""
    total = 0
    for j, c in ct.parts:
        total += c * j ** k * trapezoid_error(f, j, integral)
    if isinstance(total, float):
        return total / ct.n ** (k - 1)
    return Fraction(total) / ct.n ** (k - 1)


# ---------------------------------------------------------------- expectations

def watterson_sum(n: int, theta, s: int, weight: Callable[[tuple[int, ...]], object],
                  max_terms: int | None = None) -> Fraction:
    """E[sum over ordered s-tuples of distinct cycles of weight(lengths)].

    Uses E[prod_v (C_v)_{b_v}] = prod_v (theta/v)^{b_v} P(l), which makes the
    expectation a plain sum over length vectors with sum <= n.
    """
    theta = as_fraction(theta)
    if max_terms is not None and math.comb(n, s) > max_terms:
        raise BoundError(f"Watterson sum over {math.comb(n, s)} length vectors exceeds {max_terms}")
    P = watterson_prefix(n, theta)
    total = Fraction(0)

    def rec(prefix: tuple[int, ...], used: int, coef: Fraction):
        nonlocal total
        if len(prefix) == s:
            w = weight(prefix)
            if w:
                total += coef * P[used] * w
            return
        for L in range(1, n - used + 1):
            rec(prefix + (L,), used + L, coef * theta / L)

    rec((), 0, Fraction(1))
    return total


def expected_tuple_count(n: int, k: int, theta, interval: Interval, max_terms: int | None = None) -> Fraction:
    """E[X^tuple] under Ewens(theta), exactly."""
    total = Fraction(0)
    for blocks in set_partitions(range(k)):
        sizes = [len(b) for b in blocks]

        def weight(lengths, sizes=sizes):
            L = _lcm(lengths)
            num = 1
            for length, size in zip(lengths, sizes):
                num *= falling_factorial(length, size)
            if not num:
                return 0
            return Fraction(num, L) * interval.cycle_count(L)

        total += watterson_sum(n, theta, len(blocks), weight, max_terms)
    return total


def _compositions(k: int, s: int) -> Iterator[tuple[int, ...]]:
    if s == 1:
        yield (k,)
        return
    for first in range(1, k - s + 2):
        for rest in _compositions(k - first, s - 1):
            yield (first,) + rest


def expected_subset_count(n: int, k: int, theta, interval: Interval, max_terms: int | None = None) -> Fraction:
    """E[X^set] under Ewens(theta), exactly."""
    total = Fraction(0)
    for s in range(1, k + 1):
        for comp in _compositions(k, s):

            def weight(lengths, comp=comp):
                if any(size > L for size, L in zip(comp, lengths)):
                    return 0
                acc = Fraction(0)
                for combo in product(*[_period_weights(L, size) for L, size in zip(lengths, comp)]):
                    w = 1
                    for _, x in combo:
                        w *= x
                    M = _lcm(d for d, _ in combo)
                    acc += Fraction(w, M) * interval.cycle_count(M)
                return acc

            total += watterson_sum(n, theta, s, weight, max_terms) / math.factorial(s)
    return total


def expected_count(n: int, k: int, theta, interval: Interval, mode: str, max_terms: int | None = None) -> Fraction:
    if mode == "tuple":
        return expected_tuple_count(n, k, theta, interval, max_terms)
    if mode in ("set", "subset"):
        return expected_subset_count(n, k, theta, interval, max_terms)
    if mode == "irrep":
        from .hook import expected_hook_irrep_count

        return expected_hook_irrep_count(n, k, theta, interval, max_terms)
    raise ValueError(f"unknown mode {mode!r}")
