"""Exact counting: binomials, summand-count densities, and moment closed forms.

All counts are Python integers and all probabilities exact fractions;
floats appear only in caller-facing convenience conversions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .sequences import QuadRat, fardiff_S, fib


def binom(m: int, j: int) -> int:
    """C(m, j), zero outside 0 <= j <= m.

    A negative upper index also yields zero (not the generalized signed
    value); counting arguments here never need the signed extension.
    """
    if j < 0 or m < 0 or j > m:
        return 0
    return math.comb(m, j)


def zeck_count(n: int, k: int) -> int:
    """Number of integers in [F_n, F_{n+1}) with exactly k + 1 summands."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return binom(n - 1 - k, k)


@dataclass(frozen=True)
class DensityTable:
    """Summand-count histogram over [F_n, F_{n+1}), exact.

    ``counts[k]`` is the number of integers whose decomposition has k
    summands beyond the forced F_n; ``normalizer`` is the interval size
    F_{n-1}.
    """

    n: int
    counts: tuple[int, ...]
    normalizer: int

    def prob(self, k: int) -> Fraction:
        if 0 <= k < len(self.counts):
            return Fraction(self.counts[k], self.normalizer)
        return Fraction(0)

    def support(self) -> range:
        return range(len(self.counts))

    def rows(self, digits: int = 6):
        """CSV rows `n,k,count,prob_num,prob_den,prob_float`."""
        for k, count in enumerate(self.counts):
            p = Fraction(count, self.normalizer)
            yield (self.n, k, count, p.numerator, p.denominator,
                   format(float(p), f".{digits}g"))


def zeck_density(n: int) -> DensityTable:
    """Exact table counts[k] = C(n-1-k, k) with normalizer F_{n-1}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    counts = tuple(zeck_count(n, k) for k in range((n - 1) // 2 + 1))
    return DensityTable(n, counts, fib(n - 1))


def stars_and_bars(n: int, p: int, mins) -> int:
    """Solutions of y_1 + ... + y_p = n with y_i >= mins[i].

    Zero when infeasible.
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    mins = tuple(mins)
    if len(mins) != p:
        raise ValueError("mins must have length p")
    slack = n - sum(mins)
    if slack < 0:
        return 0
    return binom(slack + p - 1, p - 1)


def script_E(n: int) -> int:
    """Weighted count sum_k k * C(n-1-k, k)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return sum(k * binom(n - 1 - k, k) for k in range(1, (n - 1) // 2 + 1))


def mean_closed(n: int) -> QuadRat:
    """Closed form ((5 - sqrt5)/10) n - 2/5 for the non-forced summand mean."""
    if n < 1:
        raise ValueError("n must be >= 1")
    slope = QuadRat(Fraction(1, 2), Fraction(-1, 10))
    return slope * n - Fraction(2, 5)


def variance_closed(n: int) -> QuadRat:
    """Closed form (1/(5 sqrt5)) n - 2/25 for the non-forced summand variance."""
    if n < 1:
        raise ValueError("n must be >= 1")
    slope = QuadRat(Fraction(0), Fraction(1, 25))
    return slope * n - Fraction(2, 25)


def weighted_geom(m: int, x):
    """S(m, x) = sum_{j=0}^m j x^j via the closed form.

    Works on Fractions and QuadRats alike; x = 1 is the singular point
    of the closed form and falls back to m(m+1)/2 directly.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    if isinstance(x, int):
        x = Fraction(x)
    one = x ** 0
    if x == one:
        return one * Fraction(m * (m + 1), 2)
    return (m * x ** (m + 2) - (m + 1) * x ** (m + 1) + x) / (x - one) ** 2


def joint_count(n: int, k: int, ell: int) -> int:
    """Integers in (S_{n-1}, S_n] with k positive and ell negative summands.

    Closed form from the sign-block structure of a signed representation:
    group the terms into maximal same-sign runs (r runs of +, and r or
    r - 1 runs of -), compose k and ell into those runs, and distribute
    the leftover index budget by stars and bars.  With t = k + ell the
    two run layouts give, per r,

        C(k-1, k-r) [ C(ell-1, r-2) C(n - 3t + 2r,     t-1)
                    + C(ell-1, r-1) C(n - 3t + 2r + 1, t-1) ].

    ell = 0 is the single-run boundary (the composition of 0 into 0
    parts, which the zero-for-negative binomial convention cannot
    express) and gets an explicit branch.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if k <= 0 or ell < 0:
        return 0
    t = k + ell
    base = n - 3 * t
    if ell == 0:
        return binom(base + 2, k - 1)
    total = 0
    for r in range(1, k + 1):
        runs = binom(k - 1, k - r)
        if not runs:
            continue
        total += runs * (binom(ell - 1, r - 2) * binom(base + 2 * r, t - 1)
                         + binom(ell - 1, r - 1) * binom(base + 2 * r + 1, t - 1))
    return total


@dataclass(frozen=True)
class JointTable:
    """Joint (positive, negative) summand-count histogram over (S_{n-1}, S_n]."""

    n: int
    counts: dict[tuple[int, int], int]
    normalizer: int

    def prob(self, k: int, ell: int) -> Fraction:
        return Fraction(self.counts.get((k, ell), 0), self.normalizer)

    def rows(self):
        """CSV rows `n,k,l,count`."""
        for (k, ell) in sorted(self.counts):
            yield (self.n, k, ell, self.counts[(k, ell)])


def joint_table(n: int) -> JointTable:
    """All nonzero joint counts for the interval led by F_n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    counts: dict[tuple[int, int], int] = {}
    bound = n // 3 + 2
    for k in range(1, bound + 1):
        for ell in range(0, bound + 1):
            c = joint_count(n, k, ell)
            if c:
                counts[(k, ell)] = c
    return JointTable(n, counts, fardiff_S(n) - fardiff_S(n - 1))
