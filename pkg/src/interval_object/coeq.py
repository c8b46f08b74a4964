"""Opens of Cantor space that do not separate ``s+-^ω`` from ``s-+^ω``.

These are the opens of the coequalizer of ``u_plus`` and ``u_minus``.  No
nontrivial finitely generated open has the property, so factorization works
on oracles: up-closed membership rules on words, typically the inverse image
of a known interval open.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .cstar import cstar_interval, interval_member
from .dyadic import IntervalOpen, cprime
from .opens import GeneratedOpen, Report
from .words import MINUS, PLUS, words


@dataclass(frozen=True)
class OpenOracle:
    """An up-closed set of words given by its membership rule."""

    member: Callable[[str], bool]
    probe_bound: int = 16
    label: str = ""

    def __contains__(self, t: str) -> bool:
        return self.member(t)


def oracle_of_open(U: GeneratedOpen) -> OpenOracle:
    return OpenOracle(U.member, U.depth + 1, str(U))


def cstar_oracle(V: IntervalOpen, probe_bound: int = 16) -> OpenOracle:
    """Membership in ``c*(V)``: whether a cylinder lies in the inverse image."""
    return OpenOracle(lambda t: interval_member(t, V), probe_bound, f"c*({V})")


class WitnessBoundExceeded(LookupError):
    """No witness was found within the search bound."""

    def __init__(self, word: str, family: str, bound: int):
        super().__init__(f"no witness {family} for {word or '_'} with exponent <= {bound}; "
                         "the open may fail the coequalizer condition or the bound is too small")
        self.word = word
        self.family = family
        self.bound = bound


def _exists(U: Callable[[str], bool], s: str, head: str, fill: str, bound: int) -> bool:
    return any(U(s + head + fill * m) for m in range(bound + 1))


def coequalizer_violations(member: Callable[[str], bool], max_len: int, bound: int) -> list[str]:
    """Words ``s`` (``|s| <= max_len``) where ``(∃m) s+-^m ∈ U`` and ``(∃n) s-+^n ∈ U`` disagree."""
    return [s for s in words(max_len)
            if _exists(member, s, PLUS, MINUS, bound) != _exists(member, s, MINUS, PLUS, bound)]


def in_omega_C(U: GeneratedOpen) -> bool:
    """Whether ``U`` satisfies ``(∃m) s+-^m ∈ U  ⟺  (∃n) s-+^n ∈ U`` for every word ``s``.

    Words longer than the longest generator behave like their membership, so
    checking ``|s| <= depth`` with exponents up to ``depth + 1`` decides it.
    """
    n = U.depth
    for s in words(n):
        if _exists(U.member, s, PLUS, MINUS, n + 1) != _exists(U.member, s, MINUS, PLUS, n + 1):
            return False
    return True


def omega_C_clopens(depth: int) -> list[GeneratedOpen]:
    """Every open generated by words of length ``depth`` that passes the condition.

    An open of that depth is a bitmask over the ``2**depth`` cylinders.  For
    ``|s| < depth`` the condition reduces to comparing the cylinders of
    ``s+-...-`` and ``s-+...+`` padded to length ``depth``; longer words decide
    it trivially.  All ``2**(2**depth)`` masks are checked at once, so keep
    ``depth <= 4``.
    """
    if depth > 4:
        raise ValueError("exhaustive mask search is limited to depth <= 4")
    n = 1 << depth
    masks = np.arange(1 << n, dtype=np.int64)
    ok = np.ones(masks.shape, dtype=bool)
    for s in words(depth - 1):
        pad = depth - len(s) - 1
        a = _index(s + PLUS + MINUS * pad)
        b = _index(s + MINUS + PLUS * pad)
        ok &= ((masks >> a) & 1) == ((masks >> b) & 1)
    all_words = list(words(depth, depth))
    return [GeneratedOpen(w for w in all_words if (int(m) >> _index(w)) & 1) for m in masks[ok]]


def _index(w: str) -> int:
    return int(w.replace(MINUS, "0").replace(PLUS, "1") or "0", 2)


def _search(U: OpenOracle, word: str, family: Callable[[int], str], label: str, bound: int) -> str:
    for m in range(bound + 1):
        candidate = family(m)
        if U.member(candidate):
            return candidate
    raise WitnessBoundExceeded(word, label, bound)


def factor_generator(u: str, U: OpenOracle, bound: Optional[int] = None) -> IntervalOpen:
    """An interval ``V`` with ``↑u <= c*(V) <= U``, for ``u ∈ U`` and ``U`` in the coequalizer.

    Witnesses are searched with exponents up to ``bound`` (default
    ``U.probe_bound``).
    """
    if bound is None:
        bound = U.probe_bound
    if not U.member(u):
        raise ValueError(f"{u or '_'} is not a member of the open")
    if not u:
        return IntervalOpen.whole()
    n = len(u)
    if u == PLUS * n:
        s = _search(U, u, lambda m: PLUS * (n - 1) + MINUS + PLUS * m, "+^(n-1)-+^m", bound)
        return IntervalOpen.above(cprime(s))
    if u == MINUS * n:
        s = _search(U, u, lambda m: MINUS * (n - 1) + PLUS + MINUS * m, "-^(n-1)+-^m", bound)
        return IntervalOpen.below(cprime(s))
    last = u[-1]
    other = PLUS if last == MINUS else MINUS
    body = u.rstrip(last)
    trail = len(u) - len(body)  # u = u' other last^trail, trail >= 1
    u1 = body[:-1]
    s0 = _search(U, u, lambda m: u1 + last + other * m, f"u'{last}{other}^m", bound)
    s1 = _search(U, u, lambda k: u1 + other + last * (trail - 1) + other + last * k,
                 f"u'{other}{last}^(n-1){other}{last}^k", bound)
    if last == MINUS:
        return IntervalOpen.between(cprime(s0), cprime(s1))
    return IntervalOpen.between(cprime(s1), cprime(s0))


def _default_bound(u: str, depth: int) -> int:
    return 2 * (len(u) + depth) + 2


def verify_factorization(U: OpenOracle, depth: int, bound: Optional[int] = None) -> Report:
    """Factor every member ``u`` with ``|u| <= depth`` and check both inclusions.

    For each produced interval ``V``: ``↑u`` lies in some depth-indexed term
    of ``c*(V)``, and every word of length ``<= depth`` covered by ``c*(V)``
    belongs to ``U``.  The maximal intervals of the covering family are
    listed in the report notes.
    """
    rep = Report(f"factorization of {U.label or 'oracle'} (depth {depth})")
    family: dict[str, IntervalOpen] = {}
    for u in words(depth):
        if not U.member(u):
            continue
        b = _default_bound(u, depth) if bound is None else bound
        V = factor_generator(u, U, b)
        family[u] = V
        image = cstar_interval(V)
        rep.check(image.covers(u, depth + b + len(u)), lambda: f"↑{u or '_'} not below c*({V})")
        for t in words(depth):
            if interval_member(t, V) or image.covers(t, depth):
                rep.check(U.member(t), lambda: f"{t or '_'} in c*({V}) but not in the open")
    rep.notes.extend(str(V) for V in maximal_intervals(family.values()))
    return rep


def maximal_intervals(intervals) -> list[IntervalOpen]:
    """The distinct intervals not contained in another one, in first-seen order."""
    distinct = list(dict.fromkeys(intervals))
    return [V for V in distinct if not any(V <= W and V != W for W in distinct)]


def factor_family(U: OpenOracle, depth: int, bound: Optional[int] = None) -> dict[str, IntervalOpen]:
    """The interval produced for each member of length ``<= depth``."""
    out = {}
    for u in words(depth):
        if U.member(u):
            out[u] = factor_generator(u, U, _default_bound(u, depth) if bound is None else bound)
    return out
