"""Digit streams over {-, +} and {-, 0, +}.

A stream is either eventually periodic, carrying a closed form
``prefix(period)``, or backed by a producer ``n -> digit`` (``n >= 1``) whose
answers are memoized.  Closed forms are kept canonical (primitive period,
shortest prefix), so equal closed-form streams compare equal.
"""

from __future__ import annotations

import math
import re
import threading
from fractions import Fraction
from typing import Callable, Optional, Union

from .dyadic import Dyadic, FormalBall, cprime
from .words import MINUS, PLUS, flip

ZERO = "0"

_VALUE = {MINUS: -1, ZERO: 0, PLUS: 1}


class StreamSyntaxError(ValueError):
    """Raised when text cannot be read as a stream."""


class NoClosedForm(ValueError):
    """The operation needs an eventually periodic stream."""


def _primitive(period: str) -> str:
    n = len(period)
    for d in range(1, n + 1):
        if n % d == 0 and period[:d] * (n // d) == period:
            return period[:d]
    return period


def _canonical(prefix: str, period: str) -> tuple[str, str]:
    period = _primitive(period)
    while prefix and prefix[-1] == period[-1]:
        prefix = prefix[:-1]
        period = period[-1] + period[:-1]
    return prefix, period


class _DigitStream:
    DIGITS = ""

    __slots__ = ("_closed", "_producer", "_memo", "_lock")

    def __init__(self, prefix: str = "", period: Optional[str] = None,
                 producer: Optional[Callable[[int], str]] = None):
        if (period is None) == (producer is None):
            raise ValueError("give exactly one of a period or a producer")
        if period is not None:
            self._check(prefix + period)
            if not period:
                raise StreamSyntaxError("period must be nonempty")
            self._closed = _canonical(prefix, period)
            self._producer = None
        else:
            if prefix:
                raise ValueError("a producer-backed stream takes no prefix")
            self._closed = None
            self._producer = producer
        self._memo: list[str] = []
        self._lock = threading.Lock()

    @classmethod
    def _check(cls, digits: str) -> None:
        bad = set(digits) - set(cls.DIGITS)
        if bad:
            raise StreamSyntaxError(f"invalid digits {''.join(sorted(bad))!r} for {cls.__name__}")

    @classmethod
    def periodic(cls, prefix: str, period: str):
        return cls(prefix, period)

    @classmethod
    def constant(cls, digit: str):
        return cls("", digit)

    @classmethod
    def from_function(cls, producer: Callable[[int], str]):
        """Stream whose ``n``-th digit (``n >= 1``) is ``producer(n)``."""
        return cls(producer=producer)

    @property
    def closed_form(self) -> Optional[tuple[str, str]]:
        return self._closed

    def digit(self, n: int) -> str:
        """The ``n``-th digit, counting from 1."""
        if n < 1:
            raise IndexError("stream digits are numbered from 1")
        if self._closed is not None:
            prefix, period = self._closed
            if n <= len(prefix):
                return prefix[n - 1]
            return period[(n - len(prefix) - 1) % len(period)]
        with self._lock:
            while len(self._memo) < n:
                d = self._producer(len(self._memo) + 1)
                if d not in self.DIGITS or len(d) != 1:
                    raise ValueError(f"producer returned invalid digit {d!r}")
                self._memo.append(d)
            return self._memo[n - 1]

    def take(self, n: int) -> str:
        """The first ``n`` digits as a string."""
        return "".join(self.digit(i) for i in range(1, n + 1))

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        if self._closed is None or other._closed is None:
            return self is other
        return self._closed == other._closed

    def __hash__(self):
        return hash((type(self).__name__, self._closed)) if self._closed else id(self)

    def __str__(self) -> str:
        if self._closed is None:
            return self.take(16) + "..."
        prefix, period = self._closed
        return f"{prefix}({period})"

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"


class SignStream(_DigitStream):
    """A point of Cantor space: an infinite stream of signs."""

    DIGITS = MINUS + PLUS
    __slots__ = ()


class TritStream(_DigitStream):
    """An infinite stream over ``-``, ``0``, ``+``."""

    DIGITS = MINUS + ZERO + PLUS
    __slots__ = ()


AnyStream = Union[SignStream, TritStream]

_STREAM_RE = re.compile(r"^([^()]*)\(([^()]+)\)$")


def parse_stream(text: str, trits: bool = False) -> AnyStream:
    """Read ``prefix(period)``, e.g. ``+-(-+)``; ``(p)`` is purely periodic."""
    text = text.strip()
    m = _STREAM_RE.match(text)
    if not m:
        raise StreamSyntaxError(f"invalid stream {text!r}; expected prefix(period)")
    cls = TritStream if trits or ZERO in text else SignStream
    return cls(m.group(1), m.group(2))


def _with_closed(cls, stream: AnyStream, fn: Callable[[str, str], tuple[str, str]],
                 producer: Callable[[int], str]):
    if stream.closed_form is not None:
        return cls(*fn(*stream.closed_form))
    return cls.from_function(producer)


def cons(d: str, s: AnyStream) -> AnyStream:
    cls = type(s)
    cls._check(d)
    return _with_closed(cls, s, lambda p, q: (d + p, q),
                        lambda n: d if n == 1 else s.digit(n - 1))


def tail(s: AnyStream) -> AnyStream:
    def drop(p: str, q: str) -> tuple[str, str]:
        return (p[1:], q) if p else ("", q[1:] + q[0])

    return _with_closed(type(s), s, drop, lambda n: s.digit(n + 1))


def half(s: SignStream) -> SignStream:
    """``half(±s) = ±∓s``: the image has value half that of ``s``."""
    head = s.digit(1)
    return cons(head, cons(flip(head), tail(s)))


def u_minus(s: str) -> SignStream:
    """``s`` followed by ``+-^ω``."""
    return SignStream(s + PLUS, MINUS)


def u_plus(s: str) -> SignStream:
    """``s`` followed by ``-+^ω``."""
    return SignStream(s + MINUS, PLUS)


def embed(s: SignStream) -> TritStream:
    if s.closed_form is not None:
        return TritStream(*s.closed_form)
    return TritStream.from_function(s.digit)


def _mid_digit(a: str, b: str) -> str:
    return a if a == b else ZERO


def m_s(s1: SignStream, s2: SignStream) -> TritStream:
    """Sequence midpoint: agree -> that sign, disagree -> ``0``, digit by digit."""
    if s1.closed_form is not None and s2.closed_form is not None:
        (p1, q1), (p2, q2) = s1.closed_form, s2.closed_form
        start = max(len(p1), len(p2))
        period = len(q1) * len(q2) // math.gcd(len(q1), len(q2))
        digits = "".join(_mid_digit(s1.digit(n), s2.digit(n))
                         for n in range(1, start + period + 1))
        return TritStream(digits[:start], digits[start:])
    return TritStream.from_function(lambda n: _mid_digit(s1.digit(n), s2.digit(n)))


def _partial_sum(digits: str) -> Dyadic:
    num = 0
    for d in digits:
        num = 2 * num + _VALUE[d]
    return Dyadic(num, len(digits))


def approximant(s: AnyStream, n: int) -> FormalBall:
    """Ball ``(sum_{i<=n} s_i 2**-i, 2**-n)`` containing the value of ``s``."""
    if n < 0:
        raise ValueError("precision must be non-negative")
    if isinstance(s, SignStream):
        center = cprime(s.take(n))
    else:
        center = _partial_sum(s.take(n))
    return FormalBall(center, Fraction(1, 1 << n))


trit_approximant = approximant


def exact_value(s: AnyStream) -> Fraction:
    """Exact value ``sum s_i 2**-i`` of an eventually periodic stream."""
    if s.closed_form is None:
        raise NoClosedForm("exact_value needs an eventually periodic stream")
    prefix, period = s.closed_form
    head = Fraction(_partial_sum(prefix))
    cycle = Fraction(_partial_sum(period)) / (1 - Fraction(1, 1 << len(period)))
    return head + cycle / (1 << len(prefix))
