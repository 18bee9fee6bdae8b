"""Moment extraction, the Stirling split of the density, and normal-fit reports.

Moments come out of the exact tables as fractions and are only floated
for reporting.  The Stirling split evaluates the density's smooth
approximation in log space, which keeps n in the thousands in range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from . import oracle
from .combinatorics import DensityTable, joint_table, zeck_density

_SQRT5 = math.sqrt(5.0)
_PHI = (1.0 + _SQRT5) / 2.0
_INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)

Convention = Literal["forced", "nonforced"]


@dataclass(frozen=True)
class MomentReport:
    """Exact mean/variance with float mirrors and standardized tail moments.

    ``skewness``/``excess_kurtosis`` are None when the distribution is a
    point mass (variance zero), e.g. for the smallest intervals.
    """

    n: int
    convention: Convention
    mean: Fraction
    variance: Fraction
    skewness: float | None
    excess_kurtosis: float | None

    @property
    def mean_float(self) -> float:
        return float(self.mean)

    @property
    def variance_float(self) -> float:
        return float(self.variance)

    def to_json_dict(self, digits: int = 6) -> dict:
        return {
            "n": self.n,
            "convention": self.convention,
            "mean": f"{self.mean.numerator}/{self.mean.denominator}",
            "variance": f"{self.variance.numerator}/{self.variance.denominator}",
            "mean_float": float(format(self.mean_float, f".{digits}g")),
            "variance_float": float(format(self.variance_float, f".{digits}g")),
            "skewness": None if self.skewness is None
            else float(format(self.skewness, f".{digits}g")),
            "excess_kurtosis": None if self.excess_kurtosis is None
            else float(format(self.excess_kurtosis, f".{digits}g")),
        }


def exact_moments(table: DensityTable, convention: Convention = "nonforced") -> MomentReport:
    """Exact moments of the summand count under either weighting.

    "nonforced" weights entry k by k; "forced" counts the leading
    summand too and weights it by k + 1.  Central moments agree; only
    the mean shifts by one.
    """
    if convention not in ("forced", "nonforced"):
        raise ValueError("convention must be 'forced' or 'nonforced'")
    shift = 1 if convention == "forced" else 0
    total = sum(table.counts)
    s1 = s2 = s3 = s4 = 0
    for k, count in enumerate(table.counts):
        w = k + shift
        s1 += w * count
        w2 = w * w
        s2 += w2 * count
        s3 += w2 * w * count
        s4 += w2 * w2 * count
    m1 = Fraction(s1, total)
    m2 = Fraction(s2, total)
    m3 = Fraction(s3, total)
    m4 = Fraction(s4, total)
    variance = m2 - m1 * m1
    if variance == 0:
        return MomentReport(table.n, convention, m1, variance, None, None)
    mu3 = m3 - 3 * m1 * m2 + 2 * m1 ** 3
    mu4 = m4 - 4 * m1 * m3 + 6 * m1 * m1 * m2 - 3 * m1 ** 4
    sigma = math.sqrt(float(variance))
    skew = float(mu3) / sigma ** 3
    kurt = float(mu4) / float(variance) ** 2 - 3.0
    return MomentReport(table.n, convention, m1, variance, skew, kurt)


@dataclass(frozen=True)
class StirlingFactors:
    """Split f(k) = N_factor * S_factor of the density's Stirling form.

    ``u`` is the scaled displacement x * sigma / n of k from the mean.
    """

    n: int
    k: float
    N_factor: float
    S_factor: float
    f_value: float
    u: float

    def to_json_dict(self, digits: int = 6) -> dict:
        fmt = lambda v: float(format(v, f".{digits}g"))
        return {
            "n": self.n,
            "k": self.k,
            "N_factor": fmt(self.N_factor),
            "S_factor": fmt(self.S_factor),
            "f_value": fmt(self.f_value),
            "u": fmt(self.u),
        }


def stirling_f(n: int, k: float) -> StirlingFactors:
    """Smooth approximation to the density over [F_{n+1}, F_{n+2}) at k.

    N_factor = (1/sqrt(2 pi)) sqrt((n-k)/(k(n-2k))) * sqrt(5)/phi and
    S_factor = phi^{-n} (n-k)^{n-k} / (k^k (n-2k)^{n-2k}), the latter
    evaluated in log space.  k may be non-integral; it must satisfy
    0 < k < n/2.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not (0 < k and n - 2 * k > 0):
        raise ValueError("k out of domain: need 0 < k < n/2")
    nk = n - k
    n2k = n - 2 * k
    n_factor = _INV_SQRT_2PI * math.sqrt(nk / (k * n2k)) * (_SQRT5 / _PHI)
    log_s = (-n * math.log(_PHI) + nk * math.log(nk) - k * math.log(k)
             - n2k * math.log(n2k))
    s_factor = math.exp(log_s)
    report = exact_moments(zeck_density(n + 1))
    sigma = math.sqrt(float(report.variance))
    x = (k - float(report.mean)) / sigma
    return StirlingFactors(n, k, n_factor, s_factor, n_factor * s_factor,
                           x * sigma / n)


@dataclass(frozen=True)
class GaussFit:
    """Standardized density against the normal curve on a symmetric grid.

    Each grid entry holds the requested offset x, the scaled density
    sigma * p(k) at k = round(mu + x sigma), and the normal pdf at the
    standardized coordinate of that same integer k, so the deviation
    column measures the density's convergence rather than rounding
    noise.
    """

    n: int
    grid: tuple[tuple[float, float, float], ...]
    sup_deviation: float


def gauss_profile(n: int, half_width_sigmas: float = 4.0, step: float = 0.1) -> GaussFit:
    """Tabulate sigma * p_n against the standard normal over mu +- w sigma."""
    if n < 10:
        raise ValueError("n must be >= 10")
    if half_width_sigmas <= 0 or step <= 0:
        raise ValueError("half_width_sigmas and step must be positive")
    table = zeck_density(n)
    report = exact_moments(table)
    mu = float(report.mean)
    sigma = math.sqrt(float(report.variance))
    points = int(round(2 * half_width_sigmas / step))
    grid = []
    sup = 0.0
    for i in range(points + 1):
        x = -half_width_sigmas + i * step
        k = round(mu + x * sigma)
        scaled = sigma * float(table.prob(k))
        x_eff = (k - mu) / sigma
        pdf = _INV_SQRT_2PI * math.exp(-0.5 * x_eff * x_eff)
        sup = max(sup, abs(scaled - pdf))
        grid.append((x, scaled, pdf))
    return GaussFit(n, tuple(grid), sup)


@dataclass(frozen=True)
class FardiffStats:
    """Joint moments of the positive/negative summand counts.

    Float views of exact fractions; the fractions themselves ride along
    for downstream exact checks.  ``cov_sum_diff`` is the covariance of
    (K + L, K - L), which collapses to var K - var L.
    """

    n: int
    source: str
    mean_k: float
    mean_l: float
    var_k: float
    var_l: float
    cov_kl: float
    corr_kl: float
    cov_sum_diff: float
    corr_sum_diff: float
    exact: dict[str, Fraction]

    def to_json_dict(self, digits: int = 6) -> dict:
        fmt = lambda v: float(format(v, f".{digits}g"))
        out = {
            "n": self.n,
            "source": self.source,
            "mean_K": fmt(self.mean_k),
            "mean_L": fmt(self.mean_l),
            "var_K": fmt(self.var_k),
            "var_L": fmt(self.var_l),
            "cov_KL": fmt(self.cov_kl),
            "corr_KL": fmt(self.corr_kl),
            "cov_sum_diff": fmt(self.cov_sum_diff),
            "corr_sum_diff": fmt(self.corr_sum_diff),
        }
        out["exact"] = {name: f"{v.numerator}/{v.denominator}"
                        for name, v in sorted(self.exact.items())}
        return out


def fardiff_stats(n: int, source: Literal["oracle", "formula"] = "formula") -> FardiffStats:
    """Exact joint statistics of the signed-representation summand counts.

    "oracle" builds the joint histogram by exhaustive enumeration of the
    interval (subject to the enumeration guard); "formula" evaluates the
    closed-form counts.  The two agree wherever both run.
    """
    if source == "oracle":
        counts = oracle.empirical_joint(n)
    elif source == "formula":
        counts = joint_table(n).counts
    else:
        raise ValueError("source must be 'oracle' or 'formula'")
    total = sk = sl = skk = sll = skl = 0
    for (k, ell), c in counts.items():
        total += c
        sk += k * c
        sl += ell * c
        skk += k * k * c
        sll += ell * ell * c
        skl += k * ell * c
    mean_k = Fraction(sk, total)
    mean_l = Fraction(sl, total)
    var_k = Fraction(skk, total) - mean_k * mean_k
    var_l = Fraction(sll, total) - mean_l * mean_l
    cov = Fraction(skl, total) - mean_k * mean_l
    if var_k > 0 and var_l > 0:
        corr = float(cov) / math.sqrt(float(var_k) * float(var_l))
    else:
        corr = math.nan
    sum_var = var_k + var_l + 2 * cov
    diff_var = var_k + var_l - 2 * cov
    if sum_var > 0 and diff_var > 0:
        corr_sd = float(var_k - var_l) / math.sqrt(float(sum_var) * float(diff_var))
    else:
        corr_sd = math.nan
    exact = {
        "mean_K": mean_k,
        "mean_L": mean_l,
        "var_K": var_k,
        "var_L": var_l,
        "cov_KL": cov,
        "cov_sum_diff": var_k - var_l,
    }
    return FardiffStats(n, source, float(mean_k), float(mean_l), float(var_k),
                        float(var_l), float(cov), corr, float(var_k - var_l),
                        corr_sd, exact)


def figure_overlay_params(n: int) -> tuple[float, float]:
    """Leading-order mean n/(phi^2 + 1) and variance n/(5 sqrt5) for overlays."""
    return n / (_PHI ** 2 + 1.0), n / (5.0 * _SQRT5)


def figure_rows(n: int, digits: int = 6):
    """CSV rows `k,probability,normal` for the density-vs-normal figure.

    The normal overlay uses the leading-order mean and variance, the
    probabilities come from the exact table.
    """
    table = zeck_density(n)
    mu, var = figure_overlay_params(n)
    sigma = math.sqrt(var)
    for k in table.support():
        p = float(table.prob(k))
        z = (k - mu) / sigma
        overlay = _INV_SQRT_2PI / sigma * math.exp(-0.5 * z * z)
        yield (k, format(p, f".{digits}g"), format(overlay, f".{digits}g"))
