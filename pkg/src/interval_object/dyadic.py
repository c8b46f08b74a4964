"""Exact scalars for the interval [-1, 1].

``Dyadic`` is an exact dyadic rational ``numerator / 2**exponent``.  Radii of
formal balls are arbitrary non-negative ``Fraction`` values.  ``IntervalOpen``
is a finite union of disjoint intervals with rational endpoints, closed only
at -1 and 1.
"""

from __future__ import annotations

import numbers
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .words import MINUS, PLUS

Number = Union[int, Fraction, "Dyadic"]


class DomainError(ValueError):
    """A value lies outside the domain of an operation."""


class Dyadic:
    """Exact dyadic rational, stored normalized (odd numerator or exponent 0)."""

    __slots__ = ("_num", "_exp")

    def __init__(self, numerator: int = 0, exponent: int = 0):
        if exponent < 0:
            numerator, exponent = numerator << -exponent, 0
        if numerator == 0:
            exponent = 0
        else:
            shift = min((numerator & -numerator).bit_length() - 1, exponent)
            numerator >>= shift
            exponent -= shift
        self._num = numerator
        self._exp = exponent

    @classmethod
    def from_rational(cls, x) -> "Dyadic":
        if isinstance(x, Dyadic):
            return x
        q = Fraction(x)
        den = q.denominator
        if den & (den - 1):
            raise DomainError(f"{q} is not a dyadic rational")
        return cls(q.numerator, den.bit_length() - 1)

    @property
    def numerator(self) -> int:
        return self._num

    @property
    def exponent(self) -> int:
        return self._exp

    @property
    def denominator(self) -> int:
        return 1 << self._exp

    def __repr__(self) -> str:
        return f"Dyadic({self._num}, {self._exp})"

    def __str__(self) -> str:
        return str(self._num) if self._exp == 0 else f"{self._num}/2^{self._exp}"

    def __hash__(self) -> int:
        return hash(Fraction(self._num, 1 << self._exp))

    def _coerce(self, other) -> Optional["Dyadic"]:
        if isinstance(other, Dyadic):
            return other
        if isinstance(other, int):
            return Dyadic(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return Fraction(self) + other if isinstance(other, Fraction) else NotImplemented
        e = max(self._exp, o._exp)
        return Dyadic((self._num << (e - self._exp)) + (o._num << (e - o._exp)), e)

    __radd__ = __add__

    def __neg__(self) -> "Dyadic":
        return Dyadic(-self._num, self._exp)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return Fraction(self) - other if isinstance(other, Fraction) else NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return Fraction(self) * other if isinstance(other, Fraction) else NotImplemented
        return Dyadic(self._num * o._num, self._exp + o._exp)

    __rmul__ = __mul__

    def __abs__(self) -> "Dyadic":
        return Dyadic(abs(self._num), self._exp)

    def half(self) -> "Dyadic":
        return Dyadic(self._num, self._exp + 1)

    def __float__(self) -> float:
        return float(Fraction(self))

    def __eq__(self, other) -> bool:
        if isinstance(other, Dyadic):
            return self._num == other._num and self._exp == other._exp
        if isinstance(other, (int, Fraction)):
            return Fraction(self._num, 1 << self._exp) == other
        return NotImplemented

    def _cmp_value(self, other):
        if isinstance(other, (Dyadic, int, Fraction)):
            return Fraction(self._num, 1 << self._exp), Fraction(other)
        return None

    def __lt__(self, other):
        pair = self._cmp_value(other)
        return NotImplemented if pair is None else pair[0] < pair[1]

    def __le__(self, other):
        pair = self._cmp_value(other)
        return NotImplemented if pair is None else pair[0] <= pair[1]

    def __gt__(self, other):
        pair = self._cmp_value(other)
        return NotImplemented if pair is None else pair[0] > pair[1]

    def __ge__(self, other):
        pair = self._cmp_value(other)
        return NotImplemented if pair is None else pair[0] >= pair[1]


numbers.Rational.register(Dyadic)


_DYADIC_RE = re.compile(r"^(-?\d+)(?:/(?:2\^(\d+)|(\d+)))?$")


def parse_rational(text: str) -> Fraction:
    """Read ``a``, ``a/b`` or ``a/2^k``."""
    m = _DYADIC_RE.match(text.strip())
    if not m:
        raise ValueError(f"invalid number {text!r}")
    num = int(m.group(1))
    if m.group(2) is not None:
        return Fraction(num, 1 << int(m.group(2)))
    if m.group(3) is not None:
        den = int(m.group(3))
        if den == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(num, den)
    return Fraction(num)


def parse_dyadic(text: str) -> Dyadic:
    return Dyadic.from_rational(parse_rational(text))


def format_rational(x) -> str:
    q = Fraction(x)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def cprime(s: str) -> Dyadic:
    """The dyadic ``sum s_i 2**-i`` of a finite sign word (0 for the empty word)."""
    num = 0
    for d in s:
        num = 2 * num + (1 if d == PLUS else -1)
    return Dyadic(num, len(s))


def cprime_inv(d) -> str:
    """The unique sign word whose :func:`cprime` is ``d``, for ``-1 < d < 1`` dyadic."""
    x = Dyadic.from_rational(d)
    if not -1 < x < 1:
        raise DomainError(f"{x} is outside (-1, 1)")
    digits = []
    while x != 0:
        if x > 0:
            digits.append(PLUS)
            x = x * 2 - 1
        else:
            digits.append(MINUS)
            x = x * 2 + 1
    return "".join(digits)


@dataclass(frozen=True)
class FormalBall:
    """Formal ball with dyadic centre.  A zero radius denotes the exact point."""

    center: Dyadic
    radius: Fraction

    def __post_init__(self):
        object.__setattr__(self, "center", Dyadic.from_rational(self.center))
        object.__setattr__(self, "radius", Fraction(self.radius))
        if self.radius < 0:
            raise DomainError(f"negative radius {self.radius}")

    @classmethod
    def point(cls, x) -> "FormalBall":
        return cls(Dyadic.from_rational(x), Fraction(0))

    @property
    def lower(self) -> Fraction:
        return Fraction(self.center) - self.radius

    @property
    def upper(self) -> Fraction:
        return Fraction(self.center) + self.radius

    def __str__(self) -> str:
        return f"{self.center} ± {format_rational(self.radius)}"


def refines(a: FormalBall, b: FormalBall) -> bool:
    """Strict refinement ``a ⊂ b``: ``|b.center - a.center| + a.radius < b.radius``."""
    return abs(Fraction(b.center) - Fraction(a.center)) + a.radius < b.radius


def within(a: FormalBall, b: FormalBall) -> bool:
    """Non-strict form of :func:`refines` (closed-ball inclusion)."""
    return abs(Fraction(b.center) - Fraction(a.center)) + a.radius <= b.radius


# -- opens of [-1, 1] -------------------------------------------------------

@dataclass(frozen=True, order=True)
class Segment:
    """Nonempty interval ``lo..hi``; closed ends allowed only at -1 and 1."""

    lo: Fraction
    hi: Fraction
    lo_closed: bool = False
    hi_closed: bool = False

    def __str__(self) -> str:
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{format_rational(self.lo)},{format_rational(self.hi)}{right}"

    def contains(self, x) -> bool:
        x = Fraction(x)
        above = x > self.lo or (self.lo_closed and x == self.lo)
        below = x < self.hi or (self.hi_closed and x == self.hi)
        return above and below


def _segment(lo, hi, lo_closed=False, hi_closed=False) -> Optional[Segment]:
    lo, hi = Fraction(lo), Fraction(hi)
    if lo < -1:
        lo, lo_closed = Fraction(-1), True
    if hi > 1:
        hi, hi_closed = Fraction(1), True
    lo_closed = lo_closed and lo == -1
    hi_closed = hi_closed and hi == 1
    if lo < hi:
        return Segment(lo, hi, lo_closed, hi_closed)
    return None


class IntervalOpen:
    """Open subset of [-1, 1] given as a canonical union of disjoint segments.

    Segments touching at an excluded point stay separate, e.g.
    ``[-1,0) u (0,1]`` is not the whole space.
    """

    __slots__ = ("segments",)

    def __init__(self, segments: Iterable[Optional[Segment]] = ()):
        self.segments = _merge(s for s in segments if s is not None)

    @classmethod
    def whole(cls) -> "IntervalOpen":
        return cls([Segment(Fraction(-1), Fraction(1), True, True)])

    @classmethod
    def empty(cls) -> "IntervalOpen":
        return cls()

    @classmethod
    def above(cls, x) -> "IntervalOpen":
        """``(x, 1]``, clipped to [-1, 1]."""
        return cls([_segment(x, 2)])

    @classmethod
    def below(cls, x) -> "IntervalOpen":
        """``[-1, x)``, clipped to [-1, 1]."""
        return cls([_segment(-2, x)])

    @classmethod
    def between(cls, lo, hi) -> "IntervalOpen":
        """The open interval ``(lo, hi)``, clipped to [-1, 1]."""
        return cls([_segment(lo, hi)])

    @classmethod
    def from_ball(cls, b: FormalBall) -> "IntervalOpen":
        return cls.between(b.lower, b.upper)

    def is_whole(self) -> bool:
        return self == IntervalOpen.whole()

    def is_empty(self) -> bool:
        return not self.segments

    def __or__(self, other: "IntervalOpen") -> "IntervalOpen":
        return IntervalOpen(self.segments + other.segments)

    def __and__(self, other: "IntervalOpen") -> "IntervalOpen":
        out = []
        for a in self.segments:
            for b in other.segments:
                lo_closed = a.lo_closed if a.lo > b.lo else b.lo_closed if b.lo > a.lo else a.lo_closed and b.lo_closed
                hi_closed = a.hi_closed if a.hi < b.hi else b.hi_closed if b.hi < a.hi else a.hi_closed and b.hi_closed
                out.append(_segment(max(a.lo, b.lo), min(a.hi, b.hi), lo_closed, hi_closed))
        return IntervalOpen(out)

    join = __or__
    meet = __and__

    def __le__(self, other: "IntervalOpen") -> bool:
        return (self & other) == self

    def __ge__(self, other: "IntervalOpen") -> bool:
        return other <= self

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntervalOpen):
            return NotImplemented
        return self.segments == other.segments

    def __hash__(self) -> int:
        return hash(tuple(self.segments))

    def contains(self, x) -> bool:
        return any(seg.contains(x) for seg in self.segments)

    def reflect(self) -> "IntervalOpen":
        """Image under ``x -> -x``."""
        return IntervalOpen(
            Segment(-s.hi, -s.lo, s.hi_closed, s.lo_closed) for s in self.segments
        )

    def __str__(self) -> str:
        return " u ".join(map(str, self.segments)) if self.segments else "{}"

    def __repr__(self) -> str:
        return f"IntervalOpen({str(self)!r})"


def _merge(segments) -> tuple[Segment, ...]:
    ordered = sorted(segments, key=lambda s: (s.lo, not s.lo_closed))
    merged: list[Segment] = []
    for seg in ordered:
        if merged and seg.lo < merged[-1].hi:
            last = merged[-1]
            if seg.hi > last.hi or (seg.hi == last.hi and seg.hi_closed):
                merged[-1] = Segment(last.lo, seg.hi, last.lo_closed, seg.hi_closed)
        else:
            merged.append(seg)
    return tuple(merged)


_SEGMENT_RE = re.compile(r"^([\[(])\s*([^,]+?)\s*,\s*([^,]+?)\s*([\])])$")


def parse_interval_open(text: str) -> IntervalOpen:
    """Read the ``"[-1,-1/4) u (1/4,1]"`` format; ``{}`` is empty."""
    text = text.strip()
    if text == "{}":
        return IntervalOpen.empty()
    segments = []
    for part in text.split(" u "):
        m = _SEGMENT_RE.match(part.strip())
        if not m:
            raise ValueError(f"invalid interval segment {part!r}")
        lo, hi = parse_rational(m.group(2)), parse_rational(m.group(3))
        lo_closed, hi_closed = m.group(1) == "[", m.group(4) == "]"
        if (lo_closed and lo != -1) or (hi_closed and hi != 1):
            raise ValueError(f"closed ends are only allowed at -1 and 1: {part!r}")
        if lo < -1 or hi > 1 or not lo < hi:
            raise ValueError(f"segment {part!r} is empty or leaves [-1,1]")
        segments.append(Segment(lo, hi, lo_closed, hi_closed))
    return IntervalOpen(segments)
