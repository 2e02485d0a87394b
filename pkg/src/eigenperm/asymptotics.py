"""Exact limiting and finite-n moments of the cycle statistic Y_{n,k}.

Limits: the even cumulant-like coefficients
    kappa_{2m} = 2 theta (2m(k-1) - 1)! / (2m + 2)!
generate E[Y_inf^m] = m! [z^m] exp(K(z)) / (theta)_{m(k-1)}, where
(theta)_j is the rising factorial.

Finite n: under Ewens(theta) the cycle counts are independent Poisson(theta/j)
variables conditioned on sum_j j C_j = n, so for Y = sum_j w_j C_j
    E[exp(tY)] = [x^n] exp(sum_j theta/j x^j e^{t w_j}) / [x^n] (1-x)^{-theta}.
Extracting [t^m] leaves sums over l of P(l) times coefficients of products
of the series s_r(x) = sum_j theta w_j^r x^j / (j r!), with P(l) the
Watterson weight. Those products are computed exactly with integer
polynomial multiplication.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .angles import Interval, frac_diff_numerators
from .cycles import as_fraction, integer_partitions, rising_factorial
from .errors import BoundError, ConfigError
from .intpoly import poly_mul
from .series import RationalSeries, series_exp

DEFAULT_ORDER = 20
# largest n for which finite_n_moment accepts a given moment order
FINITE_MOMENT_MAX_N = {1: 5000, 2: 5000, 3: 150, 4: 150, 5: 60, 6: 60, 7: 60, 8: 60}


def _check_k(k: int):
    if k < 2:
        raise ConfigError(f"limit theory here needs k >= 2, got k={k}")


def _theta(theta) -> Fraction:
    theta = as_fraction(theta)
    if theta <= 0:
        raise ConfigError(f"theta must be positive, got {theta}")
    return theta


def kappa(k: int, theta, order: int) -> Fraction:
    """Coefficient of z^order in K(z); zero for odd order."""
    _check_k(k)
    theta = _theta(theta)
    if order <= 0 or order % 2:
        return Fraction(0)
    return 2 * theta * math.factorial(order * (k - 1) - 1) / Fraction(math.factorial(order + 2))


def cumulant_series(k: int, theta, M: int = DEFAULT_ORDER) -> RationalSeries:
    if M < 2:
        raise ValueError("truncation order must be at least 2")
    return RationalSeries(tuple(kappa(k, theta, i) for i in range(M + 1)))


@dataclass(frozen=True)
class MomentTable:
    k: int
    theta: Fraction
    moments: tuple[Fraction, ...]

    def __getitem__(self, m: int) -> Fraction:
        if m >= len(self.moments):
            raise ValueError(f"moment {m} not computed (table has {len(self.moments) - 1})")
        return self.moments[m]


def limiting_moments(k: int, theta, M: int = DEFAULT_ORDER) -> MomentTable:
    """E[Y_inf^m] for m = 0..M by exponentiating the series K."""
    theta = _theta(theta)
    e = series_exp(cumulant_series(k, theta, max(M, 2)))
    moments = tuple(e[m] * math.factorial(m) / rising_factorial(theta, m * (k - 1)) for m in range(M + 1))
    return MomentTable(k, theta, moments)


def limiting_moments_direct(k: int, theta, m: int) -> Fraction:
    """E[Y_inf^m] as a sum over partitions of m into even parts."""
    _check_k(k)
    theta = _theta(theta)
    if m > 30:
        raise BoundError("limiting_moments_direct is limited to m <= 30")
    if m % 2:
        return Fraction(0)
    total = Fraction(0)
    for lam in integer_partitions(m):
        if any(part % 2 for part in lam):
            continue
        term = Fraction(math.factorial(m))
        for c in Counter(lam).values():
            term /= math.factorial(c)
        for part in lam:
            term *= 2 * theta * math.factorial(part * (k - 1) - 1) / Fraction(math.factorial(part + 2))
        total += term
    return total / rising_factorial(theta, m * (k - 1))


def gaussian_moments_k1(theta, m: int) -> Fraction:
    """Limit of E[Z_n^m] for the log-normalized k = 1 statistic: N(0, theta/6) moments."""
    theta = _theta(theta)
    if m < 0:
        raise ValueError("m must be non-negative")
    if m % 2:
        return Fraction(0)
    h = m // 2
    return Fraction(math.factorial(m), 2 ** h * math.factorial(h)) * (theta / 6) ** h


def poissonized_cumulant(k: int, theta, order: int) -> Fraction:
    """Cumulant of the given order of the Poissonized limit Y*_{inf,k}."""
    _check_k(k)
    theta = _theta(theta)
    if order <= 0 or order % 2:
        return Fraction(0)
    return 2 * theta / Fraction((k - 1) * order * (order + 1) * (order + 2))


def poissonized_cumulants(k: int, theta, m: int) -> Fraction:
    """Alias of ``poissonized_cumulant``: m is the cumulant order."""
    return poissonized_cumulant(k, theta, m)


def poissonized_moments(k: int, theta, M: int = DEFAULT_ORDER) -> tuple[Fraction, ...]:
    """Moments 0..M of Y*_{inf,k} from its cumulants."""
    s = RationalSeries(tuple(poissonized_cumulant(k, theta, r) / math.factorial(r) for r in range(M + 1)))
    e = series_exp(s)
    return tuple(e[m] * math.factorial(m) for m in range(M + 1))


def cross_moment_targets() -> tuple[Fraction, Fraction]:
    """(product of second moments, joint fourth cross-moment) for k = 2, theta = 1."""
    return Fraction(1, 144), Fraction(1, 144) + Fraction(1, 864)


# ---------------------------------------------------------------- finite n

def watterson_weights(n: int, theta) -> tuple[list[int], int]:
    """Integers W_l and a denominator Q with P(l) = W_l / Q for l = 0..n.

    P(l) = prod_{i<l} (n-i) / (theta + n - i - 1).
    """
    theta = _theta(theta)
    p, q = theta.numerator, theta.denominator
    Q = 1
    for u in range(n):
        Q *= p + q * u
    W = [Q]
    for l in range(n):
        num = W[-1] * q * (n - l)
        w, r = divmod(num, p + q * (n - l - 1))
        assert r == 0
        W.append(w)
    return W, Q


def _power_sequences(n: int, k: int, interval: Interval, m: int) -> tuple[list[list[int]], list[Fraction]]:
    """Integer sequences A_r and scalars c_r with theta-free s_r[j] = c_r A_r[j].

    s_r[j] = w_j^r / (j r!) where w_j = j^(k-1) u_j / n^(k-1), u_j = U_j / D.
    """
    U, D = frac_diff_numerators(interval, n)
    seqs, scalars = [], []
    if k >= 2:
        for r in range(1, m + 1):
            e = r * (k - 1) - 1
            seqs.append([0] + [j ** e * U[j] ** r for j in range(1, n + 1)])
            scalars.append(Fraction(1, math.factorial(r) * D ** r * n ** (r * (k - 1))))
    else:
        lcm = math.lcm(*range(1, n + 1))
        for r in range(1, m + 1):
            seqs.append([0] + [(lcm // j) * U[j] ** r for j in range(1, n + 1)])
            scalars.append(Fraction(1, math.factorial(r) * D ** r * lcm))
    return seqs, scalars


def finite_n_moment(n: int, k: int, theta, interval: Interval, m: int, max_n: int | None = None) -> Fraction:
    """E[Y_{n,k}^m] under Ewens(theta), exactly."""
    theta = _theta(theta)
    if k < 1 or m < 0:
        raise ValueError("need k >= 1 and m >= 0")
    if m == 0:
        return Fraction(1)
    if max_n is None:
        max_n = FINITE_MOMENT_MAX_N.get(m, 0)
    if n > max_n:
        raise BoundError(f"finite_n_moment: n={n} exceeds the bound {max_n} for m={m}")
    seqs, scalars = _power_sequences(n, k, interval, m)
    W, Q = watterson_weights(n, theta)
    total = Fraction(0)
    for lam in integer_partitions(m):
        scale = Fraction(1)
        prod = None
        for r, c in Counter(lam).items():
            scale *= (theta * scalars[r - 1]) ** c / math.factorial(c)
            for _ in range(c):
                prod = seqs[r - 1] if prod is None else poly_mul(prod, seqs[r - 1], n)
        weighted = sum(W[l] * prod[l] for l in range(len(prod)) if prod[l])
        total += scale * Fraction(weighted, Q)
    return total * math.factorial(m)


def poissonized_finite_moment(n: int, k: int, theta, interval: Interval, m: int) -> Fraction:
    """E[(Y*_{n,k})^m] with independent C_j ~ Poisson(theta/j), exactly."""
    theta = _theta(theta)
    U, D = frac_diff_numerators(interval, n)
    scale = D * n ** (k - 1)
    cumulants = [Fraction(0)]
    for r in range(1, m + 1):
        # kappa_r = sum_j theta/j (j^(k-1) U_j / scale)^r
        if r * (k - 1) >= 1:
            s = sum(j ** (r * (k - 1) - 1) * U[j] ** r for j in range(1, n + 1))
            cumulants.append(theta * Fraction(s, scale ** r))
        else:
            cumulants.append(theta * sum((Fraction(U[j] ** r, j) for j in range(1, n + 1)), Fraction(0)) / scale ** r)
    s = RationalSeries(tuple(c / math.factorial(r) for r, c in enumerate(cumulants)))
    return series_exp(s)[m] * math.factorial(m)
