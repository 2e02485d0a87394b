"""Eigenangles of the hook irreducible representation S^(n-k, 1^k).

Two independent routes:

* enumeration: the angles are the sums, mod 1, of the by-cycle angle vector
  b over all k-subsets of its first n-1 entries (one per standard tableau of
  hook shape, through its descent set);
* power sums: the hook irrep is the k-th exterior power of the reflection
  representation V, and Lambda^k V = sum_i (-1)^i Lambda^(k-i) P with P the
  defining representation. Exterior powers expand in power sums, and each
  power sum of sigma is a nonnegative combination of full grids Z/M, so the
  spectrum becomes a signed combination of grids whose interval counts need
  no enumeration.
"""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterable, Sequence

from .angles import Interval
from .cycles import CycleType, as_fraction, integer_partitions
from .errors import BoundError
from .spectra import set_partitions, watterson_sum

HOOK_ENUMERATION_BOUND = 10**7


def b_vector(ct: CycleType) -> list[Fraction]:
    """By-cycle eigenangles of the defining representation.

    Cycles are listed longest first; a cycle of length L contributes
    1/L, 2/L, ..., L/L, with L/L stored as 0.
    """
    out: list[Fraction] = []
    for L in ct.partition():
        out.extend(Fraction(a % L, L) for a in range(1, L + 1))
    return out


def _check(ct: CycleType, k: int):
    if not 0 <= k <= ct.n - 1:
        raise ValueError(f"need 0 <= k <= n-1, got k={k}, n={ct.n}")


# ---------------------------------------------------------------- enumeration

def hook_irrep_angle_index(ct: CycleType, k: int, bound: int = HOOK_ENUMERATION_BOUND) -> Counter:
    """Multiset {sum_{i in S} b(i) mod 1 : S a k-subset of [n-1]} as angle -> multiplicity.

    Subset sums are accumulated by dynamic programming over residues modulo
    the lcm of the cycle lengths, so memory is bounded by the number of
    distinct angles rather than by C(n-1, k).
    """
    _check(ct, k)
    total = math.comb(ct.n - 1, k)
    if total > bound:
        raise BoundError(f"C(n-1, k) = {total} exceeds enumeration bound {bound}")
    M = math.lcm(*ct.lengths)
    residues = [int(x * M) for x in b_vector(ct)[: ct.n - 1]]
    layers: list[Counter] = [Counter({0: 1})] + [Counter() for _ in range(k)]
    for r in residues:
        for j in range(k, 0, -1):
            src = layers[j - 1]
            if not src:
                continue
            dst = layers[j]
            for a, c in src.items():
                dst[(a + r) % M] += c
    return Counter({Fraction(a, M): c for a, c in layers[k].items()})


def hook_irrep_angles_naive(ct: CycleType, k: int) -> Counter:
    """Same multiset by direct iteration over k-subsets (test oracle)."""
    _check(ct, k)
    b = b_vector(ct)[: ct.n - 1]
    return Counter(sum((b[i] for i in S), Fraction(0)) % 1 for S in combinations(range(ct.n - 1), k))


# ---------------------------------------------------------------- tableaux

def hook_tableaux(n: int, k: int) -> Iterable[list[list[int]]]:
    """Standard Young tableaux of shape (n-k, 1^k) as lists of rows."""
    if not 0 <= k <= n - 1:
        raise ValueError("need 0 <= k <= n-1")
    for below in combinations(range(2, n + 1), k):
        rest = [x for x in range(2, n + 1) if x not in below]
        yield [[1] + rest] + [[x] for x in below]


def descent_set(tableau: Sequence[Sequence[int]]) -> frozenset[int]:
    """Entries i with i+1 in a strictly lower row."""
    row_of = {x: r for r, row in enumerate(tableau) for x in row}
    return frozenset(i for i in row_of if i + 1 in row_of and row_of[i + 1] > row_of[i])


def is_standard(tableau: Sequence[Sequence[int]]) -> bool:
    entries = sorted(x for row in tableau for x in row)
    if entries != list(range(1, len(entries) + 1)):
        return False
    for r, row in enumerate(tableau):
        if r and len(row) > len(tableau[r - 1]):
            return False
        for c, x in enumerate(row):
            if c and row[c - 1] >= x:
                return False
            if r and tableau[r - 1][c] >= x:
                return False
    return True


def hook_length_dimension(shape: Sequence[int]) -> int:
    """Number of standard tableaux of a shape, by the hook length formula."""
    n = sum(shape)
    conj = [sum(1 for part in shape if part > c) for c in range(shape[0])] if shape else []
    prod = 1
    for r, part in enumerate(shape):
        for c in range(part):
            prod *= (part - c - 1) + (conj[c] - r - 1) + 1
    return math.factorial(n) // prod


def hook_irrep_angles_from_tableaux(ct: CycleType, k: int) -> Counter:
    """Angle multiset indexed by hook tableaux through their descent sets."""
    b = b_vector(ct)
    out: Counter = Counter()
    for T in hook_tableaux(ct.n, k):
        out[sum((b[i - 1] for i in descent_set(T)), Fraction(0)) % 1] += 1
    return out


# ---------------------------------------------------------------- power sums

def _convolve(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    """Sumset of grid combinations: [Z/x] + [Z/y] = (xy / lcm) [Z/lcm]."""
    out: dict[int, int] = {}
    for x, cx in a.items():
        for y, cy in b.items():
            g = math.gcd(x, y)
            m = x // g * y
            out[m] = out.get(m, 0) + cx * cy * g
    return out


def _power_sum_grid(ct: CycleType, r: int) -> dict[int, int]:
    """Eigenangles of sigma^r on the defining representation, as grids.

    A cycle of length L raised to the power r splits into gcd(r, L) cycles
    of length L / gcd(r, L).
    """
    out: dict[int, int] = {}
    for L, c in ct.parts:
        g = math.gcd(r, L)
        out[L // g] = out.get(L // g, 0) + c * g
    return out


def _z(lam: Sequence[int]) -> int:
    out = 1
    for part, mult in Counter(lam).items():
        out *= part ** mult * math.factorial(mult)
    return out


def exterior_power_terms(j: int) -> list[tuple[tuple[int, ...], Fraction]]:
    """e_j = sum_lambda sign(lambda) p_lambda / z_lambda as (lambda, coefficient)."""
    return [(lam, Fraction((-1) ** (j - len(lam)), _z(lam))) for lam in integer_partitions(j)]


@lru_cache(maxsize=None)
def hook_signed_terms(k: int) -> tuple[tuple[tuple[int, ...], Fraction], ...]:
    """Lambda^k V = sum_i (-1)^i e_(k-i)(P), flattened into power-sum terms."""
    terms: dict[tuple[int, ...], Fraction] = {}
    for i in range(k + 1):
        for lam, coef in exterior_power_terms(k - i):
            terms[lam] = terms.get(lam, 0) + (-1) ** i * coef
    return tuple((lam, c) for lam, c in terms.items() if c)


def hook_irrep_grids(ct: CycleType, k: int) -> dict[int, int]:
    """Hook-irrep angle multiset as a signed integer combination of grids Z/M."""
    _check(ct, k)
    # every z_lambda with |lambda| <= k divides k!, so k! clears denominators
    scale = math.factorial(k)
    powers: dict[int, dict[int, int]] = {}
    total: dict[int, int] = {}
    for lam, coef in hook_signed_terms(k):
        acc: dict[int, int] = {1: 1}
        for r in lam:
            if r not in powers:
                powers[r] = _power_sum_grid(ct, r)
            acc = _convolve(acc, powers[r])
        c_int = int(coef * scale)
        for m, c in acc.items():
            total[m] = total.get(m, 0) + c_int * c
    out = {}
    for m, c in total.items():
        q, r = divmod(c, scale)
        if r:
            raise AssertionError(f"non-integral grid coefficient {Fraction(c, scale)} at {m}")
        if q:
            out[m] = q
    return out


def grids_to_angles(grids: dict[int, int]) -> Counter:
    out: Counter = Counter()
    for m, c in grids.items():
        for a in range(m):
            out[Fraction(a, m)] += c
    return Counter({x: c for x, c in out.items() if c})


def hook_irrep_count(ct: CycleType, k: int, interval: Interval) -> int:
    """Number of hook-irrep eigenangles in the open arc, without enumeration."""
    return sum(c * interval.cycle_count(m) for m, c in hook_irrep_grids(ct, k).items())


def expected_hook_irrep_count(n: int, k: int, theta, interval: Interval, max_terms: int | None = None) -> Fraction:
    """E[X^irrep] under Ewens(theta), exactly.

    Each power-sum product p_lambda sums over tuples of cycles with repetition;
    grouping equal cycles by a set partition of the parts turns it into sums
    over distinct cycles, which the Watterson formula evaluates.
    """
    theta = as_fraction(theta)
    total = Fraction(0)
    for lam, coef in hook_signed_terms(k):
        if not lam:
            total += coef * interval.cycle_count(1)
            continue
        for blocks in set_partitions(range(len(lam))):

            def weight(lengths, blocks=blocks):
                acc: dict[int, int] = {1: 1}
                for L, block in zip(lengths, blocks):
                    for idx in block:
                        g = math.gcd(lam[idx], L)
                        acc = _convolve(acc, {L // g: g})
                return sum((c * interval.cycle_count(m) for m, c in acc.items()), Fraction(0))

            total += coef * watterson_sum(n, theta, len(blocks), weight, max_terms)
    return total


# ---------------------------------------------------------------- multiset identities

def angle_sums(b: Sequence[Fraction], index_sets: Iterable[Sequence[int]]) -> Counter:
    """E^U: multiset of sum_{i in S} b(i) mod 1 over S in U (0-based indices)."""
    return Counter(sum((b[i] for i in S), Fraction(0)) % 1 for S in index_sets)


def tuples(m: int, k: int) -> Iterable[tuple[int, ...]]:
    """Q_{m,k}^tuple with 0-based entries."""
    return permutations(range(m), k)


def duplicate_tuples(n: int, k: int) -> list[tuple[int, ...]]:
    """k-tuples over [n] with exactly one repeated value, repeated exactly twice."""
    out = []
    for t in product(range(n), repeat=k):
        mult = sorted(Counter(t).values(), reverse=True)
        if mult[0] == 2 and (len(mult) == 1 or mult[1] == 1):
            out.append(t)
    return out


def rotate(multiset: Counter, shift: Fraction) -> Counter:
    return Counter({(x + shift) % 1: c for x, c in multiset.items()})


def check_recursive_identity(ct: CycleType, k: int) -> bool:
    """E over Q_{n,k}^tuple = E over Q_{n-1,k}^tuple plus k copies of E over Q_{n-1,k-1}^tuple.

    Holds because the last entry of b is 0 (the closing angle of a cycle).
    """
    b = b_vector(ct)
    n = ct.n
    lhs = angle_sums(b, tuples(n, k))
    rhs = angle_sums(b, tuples(n - 1, k))
    for x, c in angle_sums(b, tuples(n - 1, k - 1)).items():
        rhs[x] += k * c
    return lhs == rhs


def duplicate_decomposition_holds(ct: CycleType, k: int) -> bool:
    """Duplicate tuples split by repeated value j and the two positions it occupies.

    Each of the n * C(k, 2) pieces is E over the (k-2)-tuples avoiding j,
    rotated by 2 b(j). This is an exact identity of multisets.
    """
    b = b_vector(ct)
    n = ct.n
    lhs = angle_sums(b, duplicate_tuples(n, k))
    rhs: Counter = Counter()
    pairs = math.comb(k, 2)
    for j in range(n):
        others = [i for i in range(n) if i != j]
        piece = angle_sums(b, permutations(others, k - 2))
        for x, c in rotate(piece, 2 * b[j]).items():
            rhs[x] += pairs * c
    return lhs == rhs


def _rref(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals; the last column is the right-hand side."""
    rows = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][col]
        rows[r] = [x / lead for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    return rows, pivots


def find_rotation_cover(target: Counter, base: Counter, copies: int,
                        max_free_points: int = 10**6) -> list[Fraction] | None:
    """Rotations r_1..r_copies with the union of base + r_i equal to target, or None.

    All angles lie on a grid Z/M, so a cover is a vector c >= 0 of rotation
    counts with base * c = target (cyclic convolution). The system is solved
    exactly; when it is singular the free coordinates are enumerated.
    """
    if sum(target.values()) != copies * sum(base.values()):
        return None
    if not base:
        return [Fraction(0)] * copies if not target else None
    M = math.lcm(*(x.denominator for x in list(target) + list(base)))
    T = [0] * M
    B = [0] * M
    for x, c in target.items():
        T[int(x * M)] += c
    for x, c in base.items():
        B[int(x * M)] += c
    rows = [[Fraction(B[(x - r) % M]) for r in range(M)] + [Fraction(T[x])] for x in range(M)]
    rows, pivots = _rref(rows, M)
    if any(all(v == 0 for v in row[:M]) and row[M] != 0 for row in rows):
        return None
    free = [c for c in range(M) if c not in pivots]
    if (copies + 1) ** len(free) > max_free_points:
        raise BoundError(f"{len(free)} free rotation counts; search space too large")

    def solution(values: Sequence[int]) -> list[int] | None:
        c = [0] * M
        for f, v in zip(free, values):
            c[f] = v
        for i, col in enumerate(pivots):
            x = rows[i][M] - sum(rows[i][f] * c[f] for f in free)
            if x.denominator != 1 or x < 0:
                return None
            c[col] = int(x)
        return c

    for values in product(range(copies + 1), repeat=len(free)):
        if sum(values) > copies:
            continue
        c = solution(values)
        if c is not None and sum(c) == copies:
            return [Fraction(r, M) for r in range(M) for _ in range(c[r])]
    return None


def duplicate_rotation_cover(ct: CycleType, k: int) -> list[Fraction] | None:
    """Search for n * C(k, 2) rotations of E over Q_{n-1,k-2}^tuple whose union is E over the duplicates."""
    b = b_vector(ct)
    n = ct.n
    target = angle_sums(b, duplicate_tuples(n, k))
    base = angle_sums(b, tuples(n - 1, k - 2))
    return find_rotation_cover(target, base, n * math.comb(k, 2))
