"""Positive linear recurrence sequences and exact Q[sqrt(5)] arithmetic.

A recurrence is described by its coefficient list (c_1, ..., c_L) with
c_1 >= 1 and c_L >= 1.  Terms follow

    H_{n+1} = c_1 H_n + ... + c_L H_{n+1-L}          for n >= L,
    H_1 = 1,  H_{n+1} = c_1 H_n + ... + c_n H_1 + 1  for 1 <= n < L.

(1, 1) gives the Fibonacci numbers in the shifted indexing F_1 = 1,
F_2 = 2, F_3 = 3, ...; (B,) gives powers of B, i.e. ordinary base-B
positional notation.
"""

from __future__ import annotations

import bisect
import json
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


@dataclass(frozen=True)
class PlrsSpec:
    """Validated recurrence coefficients (c_1, ..., c_L)."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = self.coeffs
        if len(c) == 0:
            raise ValueError("coefficient list must be non-empty")
        if any(not isinstance(x, int) or isinstance(x, bool) for x in c):
            raise ValueError("coefficients must be integers")
        if any(x < 0 for x in c):
            raise ValueError("coefficients must be non-negative")
        if c[0] == 0:
            raise ValueError("leading coefficient c_1 must be positive")
        if c[-1] == 0:
            raise ValueError("trailing coefficient c_L must be positive")
        if c == (1,):
            # H would be constant 1; the numeration system degenerates.
            raise ValueError("depth-1 recurrence needs c_1 >= 2")

    @property
    def depth(self) -> int:
        return len(self.coeffs)

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.coeffs)


def make_plrs(coeffs) -> PlrsSpec:
    """Build a validated spec from any iterable of integers."""
    return PlrsSpec(tuple(coeffs))


def parse_spec(text: str) -> PlrsSpec:
    """Parse `2 3 1` or `{"coeffs": [2, 3, 1]}` into a spec."""
    text = text.strip()
    if text.startswith("{"):
        data = json.loads(text)
        return make_plrs(data["coeffs"])
    return make_plrs(int(tok) for tok in text.split())


FIBONACCI = PlrsSpec((1, 1))


class SequenceCache:
    """Lazily extended prefix H_1..H_m of a recurrence.

    Extension happens under a lock and only appends, so concurrent
    readers never observe a partially written term.
    """

    def __init__(self, spec: PlrsSpec):
        self.spec = spec
        self._terms: list[int] = [1]
        self._lock = threading.Lock()

    def _extend_to(self, m: int) -> None:
        with self._lock:
            c = self.spec.coeffs
            L = len(c)
            t = self._terms
            while len(t) < m:
                n = len(t)
                if n < L:
                    nxt = sum(c[i] * t[n - 1 - i] for i in range(n)) + 1
                else:
                    nxt = sum(c[i] * t[n - 1 - i] for i in range(L))
                t.append(nxt)

    def term(self, i: int) -> int:
        """H_i (1-based)."""
        if i < 1:
            raise ValueError("term index must be >= 1")
        if i > len(self._terms):
            self._extend_to(i)
        return self._terms[i - 1]

    def upto(self, m: int) -> list[int]:
        """List [H_1, ..., H_m]."""
        if m < 1:
            raise ValueError("m must be >= 1")
        if m > len(self._terms):
            self._extend_to(m)
        return self._terms[:m]

    def top_index(self, value: int) -> int:
        """Largest n with H_n <= value (value >= 1)."""
        if value < 1:
            raise ValueError("value must be >= 1")
        t = self._terms
        while t[len(t) - 1] <= value:
            self._extend_to(len(t) + 1)
        return bisect.bisect_right(t, value)


_caches: dict[tuple[int, ...], SequenceCache] = {}
_caches_lock = threading.Lock()


def cache_for(spec: PlrsSpec) -> SequenceCache:
    """Shared per-spec term cache."""
    key = spec.coeffs
    cache = _caches.get(key)
    if cache is None:
        with _caches_lock:
            cache = _caches.setdefault(key, SequenceCache(spec))
    return cache


def terms(spec: PlrsSpec, m: int) -> list[int]:
    """First m terms H_1..H_m, exact."""
    return cache_for(spec).upto(m)


_FIB_CACHE = cache_for(FIBONACCI)


def fib(n: int) -> int:
    """F_n with F_1 = 1, F_2 = 2.  F_0 is defined as 1.

    The F_0 = 1 normalization keeps |[F_1, F_2)| = F_0 and extends the
    recurrence backwards consistently (F_2 - F_1 = 1).
    """
    if n < 0:
        raise ValueError("Fibonacci index must be >= 0")
    if n == 0:
        return 1
    return _FIB_CACHE.term(n)


_SQRT5_F = math.sqrt(5.0)
_PHI_F = (1.0 + _SQRT5_F) / 2.0


def binet_estimate(n: int) -> float:
    """Closed-form F_n = (phi/sqrt5) phi^n - ((1-phi)/sqrt5) (1-phi)^n in floats.

    Overflows to +inf for n beyond float range (n around 1475).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    try:
        lead = (_PHI_F / _SQRT5_F) * _PHI_F ** n
    except OverflowError:
        return math.inf
    return lead - ((1.0 - _PHI_F) / _SQRT5_F) * (1.0 - _PHI_F) ** n


@lru_cache(maxsize=None)
def fardiff_S(n: int) -> int:
    """S_n = F_n + F_{n-4} + F_{n-8} + ... ; zero for n <= 0."""
    if n <= 0:
        return 0
    return fib(n) + fardiff_S(n - 4)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


@dataclass(frozen=True)
class QuadRat:
    """Exact element a + b*sqrt(5) of the field Q[sqrt(5)]."""

    a: Fraction
    b: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", _as_fraction(self.a))
        object.__setattr__(self, "b", _as_fraction(self.b))

    # -- ring/field operations ------------------------------------------
    def _coerce(self, other) -> "QuadRat | None":
        if isinstance(other, QuadRat):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadRat(_as_fraction(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadRat(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadRat(-self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadRat(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadRat(self.a * o.a + 5 * self.b * o.b,
                       self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def inverse(self) -> "QuadRat":
        norm = self.a * self.a - 5 * self.b * self.b
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q[sqrt(5)]")
        return QuadRat(self.a / norm, -self.b / norm)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        out = QuadRat(Fraction(1))
        base = self
        e = exponent
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def conjugate(self) -> "QuadRat":
        return QuadRat(self.a, -self.b)

    # -- ordering ---------------------------------------------------------
    def _sign(self) -> int:
        a, b = self.a, self.b
        if a == 0 and b == 0:
            return 0
        if a >= 0 and b >= 0:
            return 1
        if a <= 0 and b <= 0:
            return -1
        # mixed signs: compare a^2 with 5 b^2 (sqrt(5) irrational, no tie)
        if a > 0:
            return 1 if a * a > 5 * b * b else -1
        return 1 if 5 * b * b > a * a else -1

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o)._sign() < 0

    def __le__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o)._sign() <= 0

    def __gt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o)._sign() > 0

    def __ge__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o)._sign() >= 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))

    def to_float(self) -> float:
        return float(self.a) + float(self.b) * _SQRT5_F

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        return f"{self.a} + {self.b}*sqrt(5)"


#: golden mean (1 + sqrt(5)) / 2; satisfies PHI**2 == PHI + 1 exactly
PHI = QuadRat(Fraction(1, 2), Fraction(1, 2))
SQRT5 = QuadRat(Fraction(0), Fraction(1))
