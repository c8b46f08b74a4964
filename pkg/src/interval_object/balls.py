"""Iteration in the ball domain.

The unique map ``M`` with ``M(x) = m(h(x), M(t(x)))`` is approximated by the
iterates ``M_0 = ⊥`` and ``M_{n+1}(x) = m'(h(x), M_n(t(x)))``, where ``⊥`` is
represented by the ball ``(0, 1)`` and ``m'`` takes midpoints of centres and
of radii.  Head values are exact points, i.e. balls of radius zero, so the
n-th iterate has radius exactly ``2**-n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence, TypeVar

from .dyadic import Dyadic, FormalBall, refines, within
from .streams import ZERO, AnyStream, exact_value, tail
from .words import MINUS, PLUS

X = TypeVar("X")

BOTTOM = FormalBall(Dyadic(0), Fraction(1))


def m_prime(x_ball: FormalBall, f_ball: FormalBall) -> FormalBall:
    """Midpoint of a point approximation and a ball-domain approximation."""
    return FormalBall((x_ball.center + f_ball.center).half(), (x_ball.radius + f_ball.radius) / 2)


def iterate(head: Callable[[X], FormalBall], tail_map: Callable[[X], X], x: X, n: int) -> FormalBall:
    """The ``n``-th iterate ``M_n(x)`` for an arbitrary head/tail coalgebra."""
    heads = []
    for _ in range(n):
        heads.append(head(x))
        x = tail_map(x)
    ball = BOTTOM
    for h in reversed(heads):
        ball = m_prime(h, ball)
    return ball


def _endpoint_head(endpoints) -> Callable[[AnyStream], FormalBall]:
    a_minus, a_plus = (Dyadic.from_rational(a) for a in endpoints)
    for a in (a_minus, a_plus):
        if not -1 <= a <= 1:
            raise ValueError(f"endpoint {a} outside [-1, 1]")
    points = {
        MINUS: FormalBall.point(a_minus),
        PLUS: FormalBall.point(a_plus),
        ZERO: FormalBall.point((a_minus + a_plus).half()),
    }
    return lambda s: points[s.digit(1)]


def iterate_M(stream: AnyStream, n: int, endpoints: Sequence = (-1, 1)) -> FormalBall:
    """``M_n`` for ``M(±s) = m(a_±, M(s))``; a ``0`` digit uses ``a_0 = m(a_-, a_+)``."""
    if n < 0:
        raise ValueError("iteration count must be non-negative")
    return iterate(_endpoint_head(endpoints), tail, stream, n)


def ball_chain(stream: AnyStream, n: int, endpoints: Sequence = (-1, 1)) -> list[FormalBall]:
    """The iterates ``M_0 .. M_n``, each contained in the previous one."""
    return [iterate_M(stream, k, endpoints) for k in range(n + 1)]


def is_chain(balls: Sequence[FormalBall]) -> bool:
    return all(within(b, a) for a, b in zip(balls, balls[1:]))


def M0_star(ball: FormalBall) -> bool:
    """Inverse image of a ball under the constant ``⊥`` map: true iff the ball strictly contains ``(0, 1)``."""
    return refines(BOTTOM, ball)


def affine_limit(stream: AnyStream, endpoints: Sequence = (-1, 1)) -> Fraction:
    """Closed form of ``M`` on an eventually periodic stream: ``(a_- + a_+)/2 + c(s) (a_+ - a_-)/2``."""
    a_minus, a_plus = (Fraction(a) for a in endpoints)
    return (a_minus + a_plus) / 2 + exact_value(stream) * (a_plus - a_minus) / 2


@dataclass(frozen=True)
class MidpointAlgebra:
    """A carrier with a midpoint operation and two named points."""

    name: str
    midpoint: Callable
    a_minus: object
    a_plus: object

    @property
    def a_zero(self):
        return self.midpoint(self.a_minus, self.a_plus)

    def a_half(self, sign: str):
        """``m(a_0, a_±)``."""
        return self.midpoint(self.a_zero, self.a_plus if sign == PLUS else self.a_minus)

    def point(self, digit: str):
        return {MINUS: self.a_minus, PLUS: self.a_plus, ZERO: self.a_zero}[digit]

    def unfold(self, digits: str, seed):
        """``m(a_{d1}, m(a_{d2}, ... m(a_{dn}, seed)))``."""
        x = seed
        for d in reversed(digits):
            x = self.midpoint(self.point(d), x)
        return x

    def law_violations(self, samples: Sequence) -> list[str]:
        """Idempotency, commutativity and transposition over all sample tuples."""
        m = self.midpoint
        out = []
        for x in samples:
            if m(x, x) != x:
                out.append(f"m(x,x) != x for x={x}")
            for y in samples:
                if m(x, y) != m(y, x):
                    out.append(f"m(x,y) != m(y,x) for {x}, {y}")
                for z in samples:
                    for w in samples:
                        if m(m(x, y), m(z, w)) != m(m(x, z), m(y, w)):
                            out.append(f"transposition fails at {x}, {y}, {z}, {w}")
        return out


def rational_interval(a_minus=-1, a_plus=1) -> MidpointAlgebra:
    """Exact rationals with ``m(x, y) = (x + y)/2`` and chosen endpoints."""
    return MidpointAlgebra("rational interval", lambda x, y: (Fraction(x) + Fraction(y)) / 2,
                           Fraction(a_minus), Fraction(a_plus))
