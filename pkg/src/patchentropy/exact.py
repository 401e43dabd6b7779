"""Exact numbers: rationals plus one quadratic irrational at a time.

A coordinate is either a plain rational (``int`` or ``Fraction``) or a
:class:`Coord` ``a + b*alpha`` with ``b != 0``.  Arithmetic between the two
kinds works through the usual operator protocol, and results collapse back to
plain rationals whenever the irrational part cancels.  Comparisons are decided
with a float fast path and, when that is inconclusive, by interval refinement
of ``alpha`` (which always terminates because ``alpha`` is irrational).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union


@dataclass(frozen=True)
class Alpha:
    """Quadratic irrational ``(sqrt(disc) - shift) / denom``.

    ``square`` holds ``(p, q)`` with ``alpha**2 == p + q*alpha``.
    """

    name: str
    disc: int
    shift: int
    denom: int
    square: tuple[Fraction, Fraction]

    @property
    def approx(self) -> float:
        return (math.sqrt(self.disc) - self.shift) / self.denom

    def bracket(self, bits: int) -> tuple[Fraction, Fraction]:
        s = math.isqrt(self.disc << (2 * bits))
        lo = Fraction(s, 1 << bits)
        hi = Fraction(s + 1, 1 << bits)
        return (lo - self.shift) / self.denom, (hi - self.shift) / self.denom

    @property
    def conjugate(self) -> tuple[Fraction, Fraction]:
        """``(a, b)`` such that the algebraic conjugate equals ``a + b*alpha``."""
        # roots of x^2 - q x - p sum to q
        return self.square[1], Fraction(-1)


ALPHAS: dict[str, Alpha] = {
    "sqrt2m1": Alpha("sqrt2m1", 2, 1, 1, (Fraction(1), Fraction(-2))),
    "golden": Alpha("golden", 5, 1, 2, (Fraction(1), Fraction(-1))),
}


def get_alpha(name: str) -> Alpha:
    try:
        return ALPHAS[name]
    except KeyError:
        raise ValueError(f"unknown irrational constant {name!r}; known: {sorted(ALPHAS)}")


Number = Union[int, Fraction, "Coord"]


def _q(x) -> Fraction | int:
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"not an exact rational: {x!r}")


def make(a, b=0, alpha: str | None = None) -> Number:
    """Build ``a + b*alpha``, collapsing to a rational when ``b == 0``."""
    b = _q(b)
    if b == 0:
        return _q(a)
    if alpha is None:
        raise ValueError("irrational part given without an alpha constant")
    return Coord(_q(a), b, alpha)


class Coord:
    """``a + b*alpha`` with rational ``a``, nonzero rational ``b``."""

    __slots__ = ("a", "b", "alpha", "_f")

    def __init__(self, a, b, alpha: str):
        self.a = a
        self.b = b
        self.alpha = alpha
        self._f = None

    # -- helpers -----------------------------------------------------------
    def _parts(self, other):
        if isinstance(other, Coord):
            if other.alpha != self.alpha:
                raise ValueError(f"mixed irrational bases {self.alpha!r} and {other.alpha!r}")
            return other.a, other.b
        if isinstance(other, (int, Fraction)):
            return other, 0
        if isinstance(other, Rational):
            return Fraction(other.numerator, other.denominator), 0
        return None

    def __float__(self) -> float:
        if self._f is None:
            self._f = float(self.a) + float(self.b) * ALPHAS[self.alpha].approx
        return self._f

    def __repr__(self) -> str:
        return f"Coord({self.a}, {self.b}, {self.alpha!r})"

    def __str__(self) -> str:
        return format_number(self)

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.alpha))

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return make(self.a + p[0], self.b + p[1], self.alpha)

    __radd__ = __add__

    def __sub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return make(self.a - p[0], self.b - p[1], self.alpha)

    def __rsub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return make(p[0] - self.a, p[1] - self.b, self.alpha)

    def __neg__(self):
        return Coord(-self.a, -self.b, self.alpha)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if type(other) is int:
            return Coord(self.a * other, self.b * other, self.alpha) if other else 0
        p = self._parts(other)
        if p is None:
            return NotImplemented
        c, d = p
        sq_p, sq_q = ALPHAS[self.alpha].square
        # (a + b x)(c + d x) = ac + (ad + bc) x + bd x^2
        bd = self.b * d
        return make(self.a * c + bd * sq_p, self.a * d + self.b * c + bd * sq_q, self.alpha)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Coord):
            raise TypeError("division by an irrational coordinate is not supported")
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return make(Fraction(self.a) / p[0], Fraction(self.b) / p[0], self.alpha)

    def __abs__(self):
        return -self if sign(self) < 0 else self

    # -- comparison --------------------------------------------------------
    def __eq__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return self.a == p[0] and self.b == p[1]

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def _cmp(self, other):
        p = self._parts(other)
        if p is None:
            return None
        return _sign_ab(self.a - p[0], self.b - p[1], self.alpha)

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c >= 0


def _sign_ab(a, b, alpha: str) -> int:
    """Sign of ``a + b*alpha``, certified."""
    if b == 0:
        return (a > 0) - (a < 0)
    al = ALPHAS[alpha]
    est = float(a) + float(b) * al.approx
    scale = abs(float(a)) + abs(float(b)) + 1.0
    if abs(est) > 1e-9 * scale:
        return 1 if est > 0 else -1
    bits = 64
    while True:
        lo, hi = al.bracket(bits)
        v1, v2 = a + b * lo, a + b * hi
        if v1 > 0 and v2 > 0:
            return 1
        if v1 < 0 and v2 < 0:
            return -1
        bits *= 2


def sign(x: Number) -> int:
    if isinstance(x, Coord):
        return _sign_ab(x.a, x.b, x.alpha)
    return (x > 0) - (x < 0)


def floor_num(x: Number) -> int:
    if not isinstance(x, Coord):
        return math.floor(x)
    k = math.floor(float(x))
    while x < k:
        k -= 1
    while x >= k + 1:
        k += 1
    return k


def ceil_num(x: Number) -> int:
    return -floor_num(-x)


def alpha_of(values: Iterable) -> str | None:
    """The single irrational base used by ``values`` (None if all rational)."""
    found = None
    for v in values:
        if isinstance(v, Coord):
            if found is None:
                found = v.alpha
            elif found != v.alpha:
                raise ValueError(f"mixed irrational bases {found!r} and {v.alpha!r}")
    return found


def approx(x: Number) -> float:
    return float(x)


def sort_exact(values: Sequence) -> list:
    """Sort exact numbers (or tuples of them) using float keys, then repair.

    Float keys put the list in order except possibly among neighbours whose
    approximations nearly coincide; those are re-ordered by exact comparison.
    """
    if not values:
        return []
    first = values[0]
    if isinstance(first, tuple):
        key = lambda t: tuple(float(c) for c in t)  # noqa: E731
    else:
        key = float
    out = sorted(values, key=key)
    # insertion repair: only touches neighbours out of exact order
    for i in range(1, len(out)):
        j = i
        while j > 0 and out[j] < out[j - 1]:
            out[j], out[j - 1] = out[j - 1], out[j]
            j -= 1
    return out


# ---------------------------------------------------------------------------
# parsing / formatting
# ---------------------------------------------------------------------------

def parse_rational(text: str | int | Fraction) -> Fraction | int:
    if isinstance(text, (int, Fraction)):
        return _q(text)
    return _q(Fraction(str(text).strip()))


def parse_number(obj, alpha: str | None = None) -> Number:
    """Parse ``"p/q"``, ``"p/q+r/s*alpha"`` or ``{"a":..,"b":..,"alpha":..}``."""
    if isinstance(obj, dict):
        return make(parse_rational(obj["a"]), parse_rational(obj.get("b", 0)), obj.get("alpha"))
    if isinstance(obj, (int, Fraction)):
        return _q(obj)
    if isinstance(obj, float):
        raise TypeError("floats are not exact; write the value as 'p/q'")
    text = str(obj).replace(" ", "")
    if "*" in text:
        # split at the last sign that begins the irrational term
        head, _, name = text.rpartition("*")
        name = name or alpha
        idx = max(head.rfind("+", 1), head.rfind("-", 1))
        if idx <= 0:
            a, b = 0, parse_rational(head)
        else:
            a, b = parse_rational(head[:idx]), parse_rational(head[idx:])
        return make(a, b, name)
    if alpha is not None and text in (alpha, "alpha"):
        return make(0, 1, alpha)
    if text in ALPHAS:
        return make(0, 1, text)
    return parse_rational(text)


def format_rational(x) -> str:
    x = _q(x)
    if isinstance(x, int):
        return str(x)
    return f"{x.numerator}/{x.denominator}"


def format_number(x: Number) -> str:
    if isinstance(x, Coord):
        b = format_rational(x.b)
        sep = "" if b.startswith("-") else "+"
        return f"{format_rational(x.a)}{sep}{b}*{x.alpha}"
    return format_rational(x)


def number_to_json(x: Number):
    if isinstance(x, Coord):
        return {"a": format_rational(x.a), "b": format_rational(x.b), "alpha": x.alpha}
    return format_rational(x)


# ---------------------------------------------------------------------------
# certified exponentials
# ---------------------------------------------------------------------------

def exp_bracket(x, terms: int = 0) -> tuple[Fraction, Fraction]:
    """Rational ``lo <= e**x <= hi`` for rational ``x`` (Taylor series + tail bound)."""
    x = Fraction(x)
    if x < 0:
        lo, hi = exp_bracket(-x, terms)
        return 1 / hi, 1 / lo
    if x == 0:
        return Fraction(1), Fraction(1)
    n = max(terms, int(2 * x) + 20)
    total = Fraction(0)
    term = Fraction(1)
    for k in range(n + 1):
        total += term
        term = term * x / (k + 1)
    # term is now x^(n+1)/(n+1)!; the tail is at most term / (1 - x/(n+2))
    tail = term / (1 - x / (n + 2))
    return total, total + tail


def ceil_exp(x) -> int:
    """Certified ``ceil(e**x)`` for rational ``x``."""
    x = Fraction(x)
    if x == 0:
        return 1
    terms = 0
    while True:
        lo, hi = exp_bracket(x, terms)
        if math.floor(lo) == math.floor(hi) and hi != math.floor(hi) and lo != math.floor(lo):
            return math.floor(lo) + 1
        terms = max(2 * terms, 40)


def floor_exp(x) -> int:
    x = Fraction(x)
    if x == 0:
        return 1
    return ceil_exp(x) - 1


def exp_lt(x, value) -> bool:
    """Certified ``e**x < value`` for rational ``x`` and ``value``."""
    x, value = Fraction(x), Fraction(value)
    if x == 0:
        return 1 < value
    terms = 0
    while True:
        lo, hi = exp_bracket(x, terms)
        if hi < value:
            return True
        if lo >= value:
            return False
        terms = max(2 * terms, 40)


def exp_le(x, value) -> bool:
    x, value = Fraction(x), Fraction(value)
    if x == 0:
        return 1 <= value
    # e**x is irrational for rational x != 0, so < and <= agree
    return exp_lt(x, value)


def exp_upper_dyadic(x, bits: int = 32) -> Fraction:
    """Smallest ``m / 2**bits`` strictly above ``e**x`` (``1`` when ``x == 0``).

    For rational ``x != 0`` the value ``e**x`` is irrational, so the result is
    a certified rational in ``(e**x, e**x + 2**-bits]``.
    """
    x = Fraction(x)
    if x == 0:
        return Fraction(1)
    scale = 1 << bits
    terms = 0
    while True:
        lo, hi = exp_bracket(x, terms)
        if math.floor(lo * scale) == math.floor(hi * scale):
            return Fraction(math.floor(lo * scale) + 1, scale)
        terms = max(2 * terms, 40)
