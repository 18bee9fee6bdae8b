"""Legal decompositions, Zeckendorf index sets, and far-difference representations.

Coefficients are stored most-significant-first: in a decomposition with
top index m, ``coeffs[0]`` multiplies H_m and ``coeffs[m-1]`` multiplies
H_1.  That mirrors the prefix condition that defines legality: a digit
string is legal when it splits into blocks, each block being a proper
prefix of (c_1, ..., c_L) that ends with a strict drop below the next
pattern coefficient, followed by any run of zeros.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .sequences import FIBONACCI, PlrsSpec, cache_for, fardiff_S, fib


@dataclass(frozen=True)
class Decomposition:
    """Digit string a_1..a_m against H_m..H_1 for a fixed recurrence."""

    spec: PlrsSpec
    coeffs: tuple[int, ...]

    @property
    def top_index(self) -> int:
        return len(self.coeffs)

    def to_json(self) -> str:
        return json.dumps({"top_index": self.top_index, "coeffs": list(self.coeffs)})

    @classmethod
    def from_json(cls, spec: PlrsSpec, text: str) -> "Decomposition":
        data = json.loads(text)
        coeffs = tuple(int(x) for x in data["coeffs"])
        if len(coeffs) != int(data["top_index"]):
            raise ValueError("top_index does not match coefficient count")
        return cls(spec, coeffs)


def is_legal(spec: PlrsSpec, coeffs) -> bool:
    """Whether a digit string is a legal decomposition.

    The empty string is legal (the block recursion bottoms out on it);
    a non-empty string must lead with a positive digit.
    """
    a = tuple(coeffs)
    if any(x < 0 for x in a):
        return False
    if a and a[0] == 0:
        return False
    return _legal_tail(spec.coeffs, a)


def _legal_tail(c: tuple[int, ...], a: tuple[int, ...]) -> bool:
    # a is empty or starts with a positive digit
    L = len(c)
    while a:
        m = len(a)
        if m < L and a == c[:m]:
            return True
        for s in range(min(L, m)):
            if a[s] > c[s]:
                return False
            if a[s] < c[s]:
                j = s + 1
                while j < m and a[j] == 0:
                    j += 1
                a = a[j:]
                break
        else:
            return False  # full pattern matched with no strict drop
    return True


def decompose(spec: PlrsSpec, value: int) -> Decomposition:
    """The unique legal decomposition of a positive integer.

    Greedy scan from the top term, tracking the position inside the
    coefficient pattern: at pattern offset j the digit may not exceed
    c_{j+1} (strictly below c_L at the final offset), and taking exactly
    the pattern coefficient advances the offset while any smaller digit
    starts a new block.
    """
    if value < 1:
        raise ValueError("value must be a positive integer")
    cache = cache_for(spec)
    m = cache.top_index(value)
    terms = cache.upto(m)
    digits = _greedy_digits(spec.coeffs, terms, value)
    return Decomposition(spec, tuple(digits))


def _greedy_digits(c: tuple[int, ...], terms: list[int], value: int) -> list[int]:
    # terms = [H_1 .. H_m]; emits digits for H_m down to H_1
    L = len(c)
    last = L - 1
    digits = []
    remainder = value
    j = 0
    for i in range(len(terms) - 1, -1, -1):
        h = terms[i]
        cap = c[j] if j < last else c[last] - 1
        d = remainder // h
        if d > cap:
            d = cap
        if d:
            remainder -= d * h
        digits.append(d)
        j = j + 1 if (j < last and d == c[j]) else 0
    if remainder:
        raise RuntimeError(
            f"greedy expansion failed to terminate at zero for {value}"
        )
    return digits


def reconstruct(spec: PlrsSpec, dec: Decomposition) -> int:
    """Sum a_i * H_{m+1-i} exactly."""
    m = dec.top_index
    terms = cache_for(spec).upto(m) if m else []
    return sum(a * terms[m - 1 - i] for i, a in enumerate(dec.coeffs))


def summand_count(dec: Decomposition) -> int:
    """Total number of summands a_1 + ... + a_m."""
    return sum(dec.coeffs)


def zeckendorf(value: int) -> set[int]:
    """Indices of the non-consecutive Fibonacci summands of a positive integer.

    Uses the classic greedy step directly on the Fibonacci numbers
    (F_1 = 1, F_2 = 2); agrees with ``decompose`` under the (1, 1) spec.
    """
    if value < 1:
        raise ValueError("value must be a positive integer")
    cache = cache_for(FIBONACCI)
    i = cache.top_index(value)
    out = set()
    remainder = value
    while remainder:
        f = fib(i)
        if f <= remainder:
            out.add(i)
            remainder -= f
            i -= 2
        else:
            i -= 1
    return out


@dataclass(frozen=True)
class SignedDecomposition:
    """Signed Fibonacci summands, indices strictly decreasing.

    Valid representations keep same-sign indices at least 4 apart and
    opposite-sign indices at least 3 apart; the empty tuple stands for 0.
    """

    terms: tuple[tuple[int, int], ...]

    def value(self) -> int:
        return sum(sign * fib(i) for i, sign in self.terms)

    def positive_count(self) -> int:
        return sum(1 for _, sign in self.terms if sign > 0)

    def negative_count(self) -> int:
        return sum(1 for _, sign in self.terms if sign < 0)

    def to_json(self) -> str:
        return json.dumps([{"index": i, "sign": s} for i, s in self.terms])

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " ".join(f"{'+' if s > 0 else '-'}F{i}" for i, s in self.terms)


def fardiff(value: int) -> SignedDecomposition:
    """Far-difference representation of a non-negative integer.

    Repeatedly take the F_n with S_{n-1} < remainder <= S_n; a negative
    new remainder flips the orientation of every later term.
    """
    if value < 0:
        raise ValueError("value must be non-negative")
    out = []
    sign = 1
    remainder = value
    while remainder:
        n = _fardiff_lead(remainder)
        out.append((n, sign))
        remainder -= fib(n)
        if remainder < 0:
            remainder = -remainder
            sign = -sign
    return SignedDecomposition(tuple(out))


def _fardiff_lead(value: int) -> int:
    # smallest n with S_n >= value, i.e. S_{n-1} < value <= S_n
    n = 1
    while fardiff_S(n) < value:
        n += 1
    return n


def fardiff_valid(sd: SignedDecomposition) -> bool:
    """Check ordering, lead sign, and the 4/3 gap rules."""
    terms = sd.terms
    if not terms:
        return True
    if terms[0][1] != 1:
        return False
    for i, (idx, sign) in enumerate(terms):
        if idx < 1 or sign not in (1, -1):
            return False
        if i:
            prev_idx, prev_sign = terms[i - 1]
            gap = prev_idx - idx
            if gap < (4 if sign == prev_sign else 3):
                return False
    return True
