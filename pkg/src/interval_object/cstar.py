"""Inverse images of opens of [-1, 1] along the evaluation map of sign streams.

The inverse image of a half-open interval is a directed join of hook opens;
``ApproxOpen`` represents such a join by its depth-indexed terms.  Two routes
compute the terms: closed forms in terms of hooks (``cstar_upper`` and
friends) and the unfolding recurrence ``tstar_iterate``.  Membership of a
cylinder is decided exactly by the relations ``lmid`` / ``midl``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .dyadic import IntervalOpen, Segment, cprime, cprime_inv
from .opens import GeneratedOpen, lhook, rhook
from .words import MINUS, PLUS, lmid, midl


class ApproxOpen:
    """Directed join ``⋁_k at_depth(k)`` of generated opens, monotone in ``k``."""

    __slots__ = ("_rule", "label")

    def __init__(self, rule: Callable[[int], GeneratedOpen], label: str = ""):
        self._rule = rule
        self.label = label

    def at_depth(self, k: int) -> GeneratedOpen:
        if k < 0:
            raise ValueError("depth must be non-negative")
        return self._rule(k)

    def __or__(self, other: "ApproxOpen") -> "ApproxOpen":
        return ApproxOpen(lambda k: self.at_depth(k) | other.at_depth(k), f"{self.label} | {other.label}")

    def __and__(self, other: "ApproxOpen") -> "ApproxOpen":
        return ApproxOpen(lambda k: self.at_depth(k) & other.at_depth(k), f"{self.label} & {other.label}")

    def swap(self) -> "ApproxOpen":
        return ApproxOpen(lambda k: self.at_depth(k).swap(), f"swap({self.label})")

    def covers(self, t: str, max_depth: int) -> bool:
        """Whether the cylinder of ``t`` lies in some term of depth at most ``max_depth``."""
        return any(t in self.at_depth(k) for k in range(max_depth + 1))

    def __repr__(self) -> str:
        return f"ApproxOpen({self.label})"


def constant(U: GeneratedOpen, label: str = "") -> ApproxOpen:
    return ApproxOpen(lambda k: U, label or str(U))


def cstar_upper(s: str) -> ApproxOpen:
    """``c*((c'(s), 1])`` with terms ``↱(s + -^k +)``."""
    return ApproxOpen(lambda k: rhook(s + PLUS + MINUS * k + PLUS), f"c*(c'({s or '_'}),1]")


def cstar_lower(s: str) -> ApproxOpen:
    """``c*([-1, c'(s)))`` with terms ``↰(s - +^k -)``."""
    return ApproxOpen(lambda k: lhook(s + MINUS + PLUS * k + MINUS), f"c*[-1,c'({s or '_'}))")


def _above_minus_one(k: int) -> GeneratedOpen:
    return GeneratedOpen(MINUS * i + PLUS for i in range(k + 1))


def cstar_above(q) -> ApproxOpen:
    """``c*((q, 1])`` for dyadic ``q``, clipped to [-1, 1]."""
    q = Fraction(q)
    if q >= 1:
        return constant(GeneratedOpen.bottom())
    if q < -1:
        return constant(GeneratedOpen.top())
    if q == -1:
        return ApproxOpen(_above_minus_one, "c*(-1,1]")
    return cstar_upper(cprime_inv(q))


def cstar_below(q) -> ApproxOpen:
    """``c*([-1, q))`` for dyadic ``q``, clipped to [-1, 1]."""
    return cstar_above(-Fraction(q)).swap()


def _segment_cstar(seg: Segment) -> ApproxOpen:
    lower = constant(GeneratedOpen.top()) if seg.lo_closed else cstar_above(seg.lo)
    upper = constant(GeneratedOpen.top()) if seg.hi_closed else cstar_below(seg.hi)
    return lower & upper


def cstar_interval(V: IntervalOpen) -> ApproxOpen:
    """``c*(V)`` for an interval open with dyadic endpoints."""
    out = constant(GeneratedOpen.bottom(), "{}")
    for seg in V.segments:
        out = out | _segment_cstar(seg)
    out.label = f"c*({V})"
    return out


def cstar_member(t: str, side: str, s: str) -> bool:
    """Whether the cylinder of ``t`` lies in ``c*((c'(s),1])`` (``upper``) or ``c*([-1,c'(s)))`` (``lower``)."""
    if side == "upper":
        return lmid(s, t)
    if side == "lower":
        return midl(t, s)
    raise ValueError(f"side must be 'upper' or 'lower', not {side!r}")


def _above_member(t: str, lo: Fraction, closed: bool) -> bool:
    if closed or lo < -1:
        return True
    if lo >= 1:
        return False
    if lo == -1:
        return PLUS in t
    return lmid(cprime_inv(lo), t)


def _below_member(t: str, hi: Fraction, closed: bool) -> bool:
    if closed or hi > 1:
        return True
    if hi <= -1:
        return False
    if hi == 1:
        return MINUS in t
    return midl(t, cprime_inv(hi))


def interval_member(t: str, V: IntervalOpen) -> bool:
    """Whether the cylinder of ``t`` lies in ``c*(V)``.

    The image of a cylinder is an interval, hence connected, so it lies in the
    union of the disjoint segments only if it lies in one of them.
    """
    return any(_above_member(t, seg.lo, seg.lo_closed) and _below_member(t, seg.hi, seg.hi_closed)
               for seg in V.segments)


def cylinder_image(t: str) -> tuple[Fraction, Fraction]:
    """Closed interval of values taken by streams extending ``t``."""
    center, r = Fraction(cprime(t)), Fraction(1, 1 << len(t))
    return center - r, center + r


# -- the unfolding recurrence --------------------------------------------------

HalfOpenStar = Callable[[Fraction], GeneratedOpen]


def base_star(q) -> GeneratedOpen:
    """``M_0*((q, 1])``: top iff the interval contains the ball ``(0, 1)`` strictly."""
    return GeneratedOpen.top() if Fraction(q) < -1 else GeneratedOpen.bottom()


def T_star_step(f_star: HalfOpenStar, p) -> GeneratedOpen:
    """``T(f)*(p,1] = ↑+ ∧ t* f*(2p-1,1]  ∨  ↑- ∧ t* f*(2p+1,1]``."""
    p = Fraction(p)
    return f_star(2 * p - 1).prepend(PLUS) | f_star(2 * p + 1).prepend(MINUS)


@lru_cache(maxsize=None)
def _iterate(q: Fraction, n: int) -> GeneratedOpen:
    if q < -1:
        return GeneratedOpen.top()
    if q >= 1 or n == 0:
        return base_star(q)
    return T_star_step(lambda r: _iterate(r, n - 1), q)


def tstar_iterate(q, n: int) -> GeneratedOpen:
    """``M_n*((q, 1])`` for the evaluation map, obtained by ``n`` unfoldings from ``M_0``."""
    if n < 0:
        raise ValueError("iteration count must be non-negative")
    return _iterate(Fraction(q), n)


def tstar_iterate_lower(q, n: int) -> GeneratedOpen:
    """``M_n*([-1, q))``, by the sign-swap symmetry of the recurrence."""
    return tstar_iterate(-Fraction(q), n).swap()


def above_minus_one_closed_form(k: int) -> GeneratedOpen:
    """``⋁_{i<=k} ↑(-^i +)``."""
    return _above_minus_one(k)


def above_zero_closed_form(k: int) -> GeneratedOpen:
    """``⋁_{i<=k} ↑(+ -^i +)``."""
    return GeneratedOpen(PLUS + MINUS * i + PLUS for i in range(k + 1))


def minus_power_closed_form(k: int, depth: int) -> GeneratedOpen:
    """``c*((c'(-^k), 1])`` truncated: ``⋁_{i<k} ↑(-^i +) ∨ (↑-^k ∧ (t*)^k c*((0,1]))``."""
    head = GeneratedOpen(MINUS * i + PLUS for i in range(k))
    return head | above_zero_closed_form(depth).prepend(MINUS * k)
