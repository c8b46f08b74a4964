"""The right adjoint ``∀_c`` of ``c*`` on preframe basics, and checks of its properties.

A preframe basic is a pair ``(s, t)`` of ``S_left x S_right`` standing for
``↰s ∨ ↱t``.  On these ``∀_c`` is ``theta``; the checkers verify the
counit, unit and Frobenius inequalities stage by stage with exact interval
arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key
from typing import Optional

import numpy as np

from .cstar import cstar_interval
from .dyadic import IntervalOpen, cprime
from .opens import Report, pair_open, rhook
from .streams import SignStream, exact_value
from .words import (
    MINUS,
    PLUS,
    SElement,
    format_selement,
    lexl,
    lexu,
    lt,
    overlap,
    s_elements,
    s_join,
    s_leq,
    words,
)


def theta_right(t: SElement) -> IntervalOpen:
    """``(c(t-^ω), 1]``, the whole interval if ``t`` has no ``+``, empty at bottom."""
    if t is None:
        return IntervalOpen.empty()
    if PLUS not in t:
        return IntervalOpen.whole()
    return IntervalOpen.above(exact_value(SignStream(t, MINUS)))


def theta_left(s: SElement) -> IntervalOpen:
    """``[-1, c(s+^ω))``, the whole interval if ``s`` has no ``-``, empty at bottom."""
    if s is None:
        return IntervalOpen.empty()
    if MINUS not in s:
        return IntervalOpen.whole()
    return IntervalOpen.below(exact_value(SignStream(s, PLUS)))


def theta(s: SElement, t: SElement) -> IntervalOpen:
    """``∀_c`` of the preframe basic ``(s, t)``."""
    if s is not None and t is not None and overlap(s, t):
        return IntervalOpen.whole()
    return theta_left(s) | theta_right(t)


def s_pair_leq(p: tuple[SElement, SElement], q: tuple[SElement, SElement]) -> bool:
    return s_leq(p[0], q[0], "left") and s_leq(p[1], q[1], "right")


def s_pair_join(p, q):
    return s_join(p[0], q[0], "left"), s_join(p[1], q[1], "right")


def basic_interval(s: Optional[str], t: Optional[str]) -> IntervalOpen:
    """``[-1, c'(s)) ∨ (c'(t), 1]``, a missing side contributing nothing."""
    out = IntervalOpen.empty()
    if s is not None:
        out = out | IntervalOpen.below(cprime(s))
    if t is not None:
        out = out | IntervalOpen.above(cprime(t))
    return out


def cstar_stage(s: Optional[str], t: Optional[str], k: int, l: int) -> tuple[SElement, SElement]:
    """The basic ``(s-+^k-, t+-^l+)`` of ``c*([-1,c'(s)) ∨ (c'(t),1])`` at stage ``(k, l)``."""
    left = None if s is None else s + MINUS + PLUS * k + MINUS
    right = None if t is None else t + PLUS + MINUS * l + PLUS
    return left, right


def finite_join_exceptions(max_len: int) -> list[tuple[str, str]]:
    """Pairs where ``theta(s,t)`` exceeds ``theta_left(s) ∨ theta_right(t)``.

    These are the equality cases ``c(s+^ω) = c(t-^ω)`` where the hooks still
    cover Cantor space, so ``∀_c`` does not preserve that finite join.
    """
    out = []
    for s in words(max_len):
        for t in words(max_len):
            if theta(s, t) != theta_left(s) | theta_right(t):
                out.append((s, t))
    return out


def check_adjunction(max_len: int, depth: int) -> Report:
    """Counit ``c*∀_c <= Id`` and unit ``∀_c c* = Id`` on basics, stagewise."""
    rep = Report(f"adjunction (len <= {max_len}, stages <= {depth})")
    S = list(s_elements(max_len))
    ws = list(words(max_len))

    # counit: every stage of c*(theta(s,t)) lies below the basic (s,t)
    for s in S:
        for t in S:
            target = pair_open(s, t)
            image = cstar_interval(theta(s, t))
            for k in range(depth + 1):
                rep.check(image.at_depth(k) <= target,
                          lambda: f"counit: c*(theta({format_selement(s)},{format_selement(t)})) "
                                  f"at depth {k} not below the basic")
    for t in ws:
        if PLUS not in t:
            continue
        for k in range(depth + 1):
            for l in range(depth + 1):
                w = t + MINUS * k + PLUS + MINUS * l + PLUS
                rep.check(rhook(w) <= rhook(t), lambda: f"counit: rhook({w!r}) !<= rhook({t!r})")

    # unit on [-1,c'(s)) ∨ (c'(t),1] and on the one-sided opens
    sides = [(s, t) for s in ws for t in ws] + [(s, None) for s in ws] + [(None, t) for t in ws]
    for s, t in sides:
        target = basic_interval(s, t)
        for k in range(depth + 1):
            for l in range(depth + 1):
                a, b = cstar_stage(s, t, k, l)
                stage = theta(a, b)
                lower = basic_interval(None if s is None else s + MINUS + PLUS * k,
                                       None if t is None else t + PLUS + MINUS * l)
                rep.check(lower <= stage <= target,
                          lambda: f"unit: stage ({k},{l}) for ({s},{t}) is {stage}")
                if s is None or t is None or cprime(s) <= cprime(t):
                    rep.check(stage == lower, lambda: f"unit: stage ({k},{l}) for ({s},{t}) overshoots")
        if s is not None and t is not None and cprime(t) < cprime(s):
            n = max(len(s), len(t)) + 1
            rep.check(theta(*cstar_stage(s, t, n, n)).is_whole(),
                      lambda: f"unit: ({s},{t}) never reaches the whole interval")

    # endpoint sequences converge: c'(s-+^k) = c'(s) - 2^(-|s|-k-1), c'(t+-^l) = c'(t) + 2^(-|t|-l-1)
    for s in ws:
        for k in range(depth + 1):
            gap = Fraction(cprime(s)) - Fraction(cprime(s + MINUS + PLUS * k))
            rep.check(gap == Fraction(1, 2 ** (len(s) + k + 1)), lambda: f"endpoint gap for {s!r} at {k}")
            gap = Fraction(cprime(s + PLUS + MINUS * k)) - Fraction(cprime(s))
            rep.check(gap == Fraction(1, 2 ** (len(s) + k + 1)), lambda: f"endpoint gap for {s!r} at {k}")

    # overlap exclusion when c'(s) <= c'(t)
    for s in ws:
        for t in ws:
            if cprime(s) <= cprime(t):
                for k in range(depth + 1):
                    for l in range(depth + 1):
                        a, b = cstar_stage(s, t, k, l)
                        rep.check(not overlap(a, b), lambda: f"overlap exclusion fails: {a!r} ≬ {b!r}")

    for s, t in finite_join_exceptions(max_len):
        rep.expected.append(f"theta({s},{t}) = [-1,1] but the hooks alone give "
                            f"{theta_left(s) | theta_right(t)}")
    return rep


def co_interval(V: IntervalOpen) -> tuple[Fraction, Fraction]:
    """Endpoints ``(x, y)`` of an open of the form ``[-1, x) ∪ (y, 1]``.

    Empty sides are ``x = -1`` and ``y = 1``; the whole interval is
    ``(inf, -inf)``.  Raises ``ValueError`` for opens of any other shape.
    """
    if V.is_whole():
        return INF, -INF
    x, y = Fraction(-1), Fraction(1)
    for seg in V.segments:
        if seg.lo_closed:
            x = seg.hi
        elif seg.hi_closed:
            y = seg.lo
        else:
            raise ValueError(f"{V} is not of the form [-1,x) u (y,1]")
    return x, y


INF = float("inf")


def co_leq(a: tuple, b: tuple) -> bool:
    """Inclusion of opens given by :func:`co_interval` endpoints."""
    if b[0] > b[1]:
        return True
    return a[0] <= b[0] and a[1] >= b[1]


def _rank(elements: list[SElement], lattice: str) -> dict:
    key = cmp_to_key(lambda a, b: 0 if a == b else (-1 if s_leq(a, b, lattice) else 1))
    return {e: i for i, e in enumerate(sorted(elements, key=key))}


def check_frobenius(max_len: int, depth: int) -> Report:
    """``∀_c(a ∨ c*b) <= ∀_c a ∨ b`` at every stage, for basics ``a`` and ``b``.

    ``a`` ranges over ``S`` and ``b`` over ``[-1,c'(s')) ∨ (c'(t'),1]`` with
    either side possibly absent.  The stage grid for each ``a`` is checked in
    one vectorized pass over exact scaled-integer endpoints.
    """
    rep = Report(f"frobenius (len <= {max_len}, stages <= {depth})")
    S = list(s_elements(max_len))
    ws = list(words(max_len))
    sigmas = [(None, None)] + [(s1, cstar_stage(s1, None, k, 0)[0]) for s1 in ws for k in range(depth + 1)]
    taus = [(None, None)] + [(t1, cstar_stage(None, t1, 0, l)[1]) for t1 in ws for l in range(depth + 1)]

    left = list(dict.fromkeys(S + [w for _, w in sigmas]))
    right = list(dict.fromkeys(S + [w for _, w in taus]))
    li = {w: i for i, w in enumerate(left)}
    ri = {w: i for i, w in enumerate(right)}
    rank_l, rank_r = _rank(left, "left"), _rank(right, "right")
    rank_left = np.array([rank_l[w] for w in left])
    rank_right = np.array([rank_r[w] for w in right])

    scale = 1 << (max_len + depth + 3)
    big = 4 * scale

    def scaled(v) -> int:
        if v in (INF, -INF):
            return big if v == INF else -big
        n = Fraction(v) * scale
        if n.denominator != 1:
            raise ValueError(f"endpoint {v} is finer than the 1/{scale} grid")
        return int(n)

    tx = np.empty((len(left), len(right)), dtype=np.int64)
    ty = np.empty_like(tx)
    for i, s in enumerate(left):
        for j, t in enumerate(right):
            x, y = co_interval(theta(s, t))
            tx[i, j], ty[i, j] = scaled(x), scaled(y)

    sig_idx = np.array([li[w] for _, w in sigmas])
    tau_idx = np.array([ri[w] for _, w in taus])
    bx = np.array([-scale if s1 is None else scaled(Fraction(cprime(s1))) for s1, _ in sigmas])
    by = np.array([scale if t1 is None else scaled(Fraction(cprime(t1))) for t1, _ in taus])

    for s in S:
        for t in S:
            ax, ay = tx[li[s], ri[t]], ty[li[s], ri[t]]
            s2 = np.where(rank_left[li[s]] >= rank_left[sig_idx], li[s], sig_idx)
            t2 = np.where(rank_right[ri[t]] >= rank_right[tau_idx], ri[t], tau_idx)
            lx = tx[s2[:, None], t2[None, :]]
            ly = ty[s2[:, None], t2[None, :]]
            ux = np.maximum(ax, bx)[:, None]
            uy = np.minimum(ay, by)[None, :]
            ok = (ux > uy) | ((lx <= ux) & (ly >= uy))
            rep.checked += ok.size
            for i, j in zip(*np.nonzero(~ok)):
                rep.violations.append(f"frobenius: a=({format_selement(s)},{format_selement(t)}) "
                                      f"stage ({format_selement(left[s2[i]])},{format_selement(right[t2[j]])})")

    # the overlap branch of the argument: s ⊴_u s'-+^k- ≬ t
    branch = 0
    for s1, sigma in sigmas[1:]:
        k = len(sigma) - len(s1) - 2
        for t in ws:
            if not overlap(sigma, t):
                continue
            branch += 1
            low = exact_value(SignStream(t, MINUS))
            mid = Fraction(cprime(s1 + MINUS + PLUS * k))
            rep.check(low <= mid < Fraction(cprime(s1)),
                      lambda: f"overlap branch endpoints at ({sigma},{t})")
            rep.check((IntervalOpen.below(cprime(s1)) | IntervalOpen.above(low)).is_whole(),
                      lambda: f"overlap branch is not whole at ({sigma},{t})")
    for t1, tau in taus[1:]:
        l = len(tau) - len(t1) - 2
        for s in ws:
            if not overlap(s, tau):
                continue
            branch += 1
            high = exact_value(SignStream(s, PLUS))
            mid = Fraction(cprime(t1 + PLUS + MINUS * l))
            rep.check(Fraction(cprime(t1)) < mid <= high,
                      lambda: f"dual overlap branch endpoints at ({s},{tau})")
            rep.check((IntervalOpen.below(high) | IntervalOpen.above(cprime(t1))).is_whole(),
                      lambda: f"dual overlap branch is not whole at ({s},{tau})")
    rep.notes.append(f"{branch} overlap-branch instances checked")
    return rep


def check_theta_monotone(max_len: int) -> Report:
    """``theta`` is monotone on ``S``, checked one coordinate at a time."""
    rep = Report(f"theta monotone (len <= {max_len})")
    S = list(s_elements(max_len))
    table = {(s, t): co_interval(theta(s, t)) for s in S for t in S}
    for t in S:
        for s in S:
            for s2 in S:
                if s_leq(s, s2, "left"):
                    rep.check(co_leq(table[s, t], table[s2, t]), lambda: f"theta not monotone in s: {s},{s2} at t={t}")
    for s in S:
        for t in S:
            for t2 in S:
                if s_leq(t, t2, "right"):
                    rep.check(co_leq(table[s, t], table[s, t2]), lambda: f"theta not monotone in t: {t},{t2} at s={s}")
    return rep


def check_theta_relations(max_len: int) -> Report:
    """``theta`` respects every relation of the pair presentation, as interval inequalities."""
    rep = Report(f"theta relations (len <= {max_len})")
    S = list(s_elements(max_len))
    ws = list(words(max_len))
    table = {(s, t): theta(s, t) for s in S for t in S}

    def th(s, t):
        if (s, t) not in table:
            table[s, t] = theta(s, t)
        return table[s, t]

    whole = IntervalOpen.whole()
    for s in S:
        for t in S:
            if t is not None:
                rep.check(th(s, t) <= th(s, t + MINUS), lambda: f"({s},{t}) <= ({s},{t}-)")
            if s is not None:
                rep.check(th(s, t) <= th(s + PLUS, t), lambda: f"({s},{t}) <= ({s}+,{t})")
        rep.check(th(s, "") == whole, lambda: f"top <= ({s},ε)")
        rep.check(th("", s) == whole, lambda: f"top <= (ε,{s})")
    for s in ws:
        for t in ws:
            if lexu(t, s) or lexl(t, s):
                rep.check(th(s, t) == whole, lambda: f"top <= ({s},{t})")
    for t in ws:
        for s in ws:
            if not lt(t, s):
                continue
            for u in S:
                if not s_leq(u, t, "left"):
                    continue
                for v in S:
                    if s_leq(v, s, "right"):
                        rep.check((th(u, s) & th(t, v)) <= th(u, v),
                                  lambda: f"({u},{s}) & ({t},{v}) <= ({u},{v})")
    for s in ws:
        bound = th(s + MINUS, s + PLUS)
        rep.check(bound == whole, lambda: f"({s}-,{s}+) is whole")
        for u in S:
            if not s_leq(u, s + MINUS, "left"):
                continue
            for v in S:
                if s_leq(v, s + PLUS, "right"):
                    rep.check((th(u, s) & th(s, v)) <= bound, lambda: f"({u},{s}) & ({s},{v}) <= ({s}-,{s}+)")
    for s in ws:
        for t in ws:
            if MINUS not in s or PLUS not in t:
                rep.check(th(s, t) == whole, lambda: f"theta({s},{t}) whole when a side has no sign")
    return rep
