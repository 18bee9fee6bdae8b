"""Exhaustive ground truth for small parameters.

Everything here enumerates rather than computes: legal digit strings are
generated directly from the block structure of the legality definition
(not by calling the greedy expander), and signed representations are
generated from the index-gap rules.  Agreement between these
enumerations and the closed-form or greedy routes is how the rest of
the package earns its correctness claims.

Enumerations refuse, rather than thrash, above a size guard; the
``ZECK_MAX_ENUM`` environment variable raises the guard (at your own
risk).
"""

from __future__ import annotations

import os
import sys
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .decompose import Decomposition, SignedDecomposition, decompose, is_legal, reconstruct
from .sequences import PlrsSpec, cache_for, fardiff_S, fib

DEFAULT_MAX_ENUM = 10**7
DEFAULT_MAX_FARDIFF_INDEX = 30


class TooLargeError(ValueError):
    """Enumeration would exceed the configured guard."""


def _max_enum() -> int:
    raw = os.environ.get("ZECK_MAX_ENUM")
    if raw:
        return int(raw)
    return DEFAULT_MAX_ENUM


def _guard(size: int, what: str) -> None:
    limit = _max_enum()
    if size > limit:
        raise TooLargeError(
            f"{what} would enumerate {size} values (guard {limit}; "
            f"set ZECK_MAX_ENUM to override)"
        )


def _pattern_caps(c: tuple[int, ...]) -> list[int]:
    # max digit at 0-based pattern offset j; the final offset must drop
    L = len(c)
    return [c[j] if j < L - 1 else c[L - 1] - 1 for j in range(L)]


def interval(spec: PlrsSpec, n: int) -> tuple[int, int]:
    """[H_n, H_{n+1}) as a half-open pair."""
    terms = cache_for(spec).upto(n + 1)
    return terms[n - 1], terms[n]


def enumerate_legal(spec: PlrsSpec, n: int) -> list[Decomposition]:
    """Every legal digit string with top index exactly n, in value order."""
    lo, hi = interval(spec, n)
    _guard(hi - lo, f"enumerate_legal(n={n})")
    c = spec.coeffs
    L = len(c)
    caps = _pattern_caps(c)
    out: list[Decomposition] = []
    digits = [0] * n
    sys.setrecursionlimit(max(sys.getrecursionlimit(), n + 100))

    def rec(p: int, j: int) -> None:
        if p == n:
            out.append(Decomposition(spec, tuple(digits)))
            return
        cj = c[j]
        nxt = j + 1 if j < L - 1 else 0
        for d in range(1 if p == 0 else 0, caps[j] + 1):
            digits[p] = d
            rec(p + 1, nxt if d == cj else 0)
        digits[p] = 0

    rec(0, 0)
    return out


@dataclass
class BijectionReport:
    """Result of checking decomposition uniqueness over one interval."""

    spec: PlrsSpec
    n: int
    interval_size: int
    passed: bool
    counterexamples: list[tuple[int, int]] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "coeffs": list(self.spec.coeffs),
            "n": self.n,
            "interval_size": self.interval_size,
            "passed": self.passed,
            "counterexamples": [list(x) for x in self.counterexamples],
        }


def verify_bijection(spec: PlrsSpec, n: int, direct_samples: int = 2000) -> BijectionReport:
    """Check that [H_n, H_{n+1}) and the legal strings with top index n biject.

    Three passes:
      1. the definition-driven enumeration must produce values that are
         exactly H_n, H_n + 1, ..., H_{n+1} - 1 in order (existence and
         uniqueness at once);
      2. the greedy expansion, run over every integer of the interval,
         must come back to remainder zero (its output is legal by
         construction, hence equals the unique string from pass 1);
      3. ``decompose`` itself is run on a sample of the interval and its
         output checked against ``is_legal`` and ``reconstruct``.
    """
    lo, hi = interval(spec, n)
    size = hi - lo
    _guard(size, f"verify_bijection(n={n})")
    c = spec.coeffs
    L = len(c)
    caps = _pattern_caps(c)
    terms = cache_for(spec).upto(n)
    weights = terms[::-1]  # weights[p] = H_{n-p}
    sys.setrecursionlimit(max(sys.getrecursionlimit(), n + 100))

    count = 0
    ordered = True

    def rec(p: int, j: int, acc: int) -> None:
        nonlocal count, ordered
        if p == n:
            if acc != lo + count:
                ordered = False
            count += 1
            return
        h = weights[p]
        cj = c[j]
        nxt = j + 1 if j < L - 1 else 0
        for d in range(1 if p == 0 else 0, caps[j] + 1):
            rec(p + 1, nxt if d == cj else 0, acc + d * h)

    rec(0, 0, 0)

    counterexamples: list[tuple[int, int]] = []
    if not ordered or count != size:
        counterexamples = _recount_values(spec, n, lo, hi)

    greedy_bad = _greedy_residuals(c, caps, terms, lo, hi)
    counterexamples.extend((int(v), 1) for v in greedy_bad)

    if not counterexamples:
        step = max(1, size // max(1, direct_samples))
        for value in list(range(lo, hi, step)) + [hi - 1]:
            dec = decompose(spec, value)
            if not is_legal(spec, dec.coeffs) or reconstruct(spec, dec) != value:
                counterexamples.append((value, 1))

    counterexamples = sorted(set(counterexamples))
    return BijectionReport(spec, n, size, not counterexamples, counterexamples)


def _recount_values(spec: PlrsSpec, n: int, lo: int, hi: int) -> list[tuple[int, int]]:
    # slow diagnostic path: per-value representation counts
    seen: Counter[int] = Counter()
    for dec in enumerate_legal(spec, n):
        seen[reconstruct(spec, dec)] += 1
    bad = [(v, k) for v, k in seen.items() if k != 1 or not lo <= v < hi]
    bad.extend((v, 0) for v in range(lo, hi) if v not in seen)
    return bad


def _greedy_residuals(c, caps, terms, lo: int, hi: int) -> list[int]:
    # run the greedy digit loop over the whole interval at once
    if hi >= 2**62:
        raise TooLargeError("interval values exceed the vectorized greedy range")
    last = len(c) - 1
    remainder = np.arange(lo, hi, dtype=np.int64)
    state = np.zeros(remainder.shape, dtype=np.int64)
    c_arr = np.asarray(c, dtype=np.int64)
    cap_arr = np.asarray(caps, dtype=np.int64)
    for i in range(len(terms) - 1, -1, -1):
        h = terms[i]
        d = remainder // h
        np.minimum(d, cap_arr[state], out=d)
        remainder -= d * h
        state = np.where((state < last) & (d == c_arr[state]), state + 1, 0)
    return [int(v) for v in np.arange(lo, hi, dtype=np.int64)[remainder != 0][:20]]


def empirical_density(spec: PlrsSpec, n: int) -> dict[int, int]:
    """Histogram of summand counts over [H_n, H_{n+1}), by enumeration."""
    lo, hi = interval(spec, n)
    _guard(hi - lo, f"empirical_density(n={n})")
    c = spec.coeffs
    L = len(c)
    caps = _pattern_caps(c)
    sys.setrecursionlimit(max(sys.getrecursionlimit(), n + 100))
    hist: Counter[int] = Counter()

    def rec(p: int, j: int, total: int) -> None:
        if p == n:
            hist[total] += 1
            return
        cj = c[j]
        nxt = j + 1 if j < L - 1 else 0
        for d in range(1 if p == 0 else 0, caps[j] + 1):
            rec(p + 1, nxt if d == cj else 0, total + d)

    rec(0, 0, 0)
    return dict(hist)


def _fardiff_guard(max_index: int) -> None:
    if os.environ.get("ZECK_MAX_ENUM"):
        _guard(fardiff_S(max_index), f"signed enumeration to index {max_index}")
    elif max_index > DEFAULT_MAX_FARDIFF_INDEX:
        raise TooLargeError(
            f"signed enumeration guard is index {DEFAULT_MAX_FARDIFF_INDEX} "
            f"(set ZECK_MAX_ENUM to override)"
        )


class DuplicateValueError(ValueError):
    """Two distinct signed representations produced the same integer."""


def enumerate_fardiff(max_index: int) -> dict[int, SignedDecomposition]:
    """All valid signed representations with indices <= max_index, by value.

    Includes the empty representation of 0.  A value collision raises
    ``DuplicateValueError``: it would disprove uniqueness.
    """
    if max_index < 1:
        raise ValueError("max_index must be >= 1")
    _fardiff_guard(max_index)
    out: dict[int, SignedDecomposition] = {0: SignedDecomposition(())}
    stack: list[tuple[int, int]] = []

    def emit(value: int) -> None:
        if value in out:
            raise DuplicateValueError(
                f"{value} has two signed representations: "
                f"{out[value].terms} and {tuple(stack)}"
            )
        out[value] = SignedDecomposition(tuple(stack))

    def rec(value: int, last_idx: int, last_sign: int) -> None:
        emit(value)
        for idx in range(last_idx - 3, 0, -1):
            stack.append((idx, -last_sign))
            rec(value - last_sign * fib(idx), idx, -last_sign)
            stack.pop()
        for idx in range(last_idx - 4, 0, -1):
            stack.append((idx, last_sign))
            rec(value + last_sign * fib(idx), idx, last_sign)
            stack.pop()

    for lead in range(1, max_index + 1):
        stack.append((lead, 1))
        rec(fib(lead), lead, 1)
        stack.pop()
    return out


def empirical_joint(n: int) -> dict[tuple[int, int], int]:
    """Histogram of (positive, negative) summand counts over (S_{n-1}, S_n].

    Integers in that interval are exactly the ones whose representation
    leads with +F_n, so the enumeration walks every valid continuation
    below a forced leading term.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    _guard(fardiff_S(n) - fardiff_S(n - 1), f"empirical_joint(n={n})")
    hist: Counter[tuple[int, int]] = Counter()

    def rec(last_idx: int, last_sign: int, pos: int, neg: int) -> None:
        hist[(pos, neg)] += 1
        for idx in range(last_idx - 3, 0, -1):
            rec(idx, -last_sign, pos + (last_sign < 0), neg + (last_sign > 0))
        for idx in range(last_idx - 4, 0, -1):
            rec(idx, last_sign, pos + (last_sign > 0), neg + (last_sign < 0))

    rec(n, 1, 1, 0)
    return dict(hist)
