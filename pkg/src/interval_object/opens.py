"""Finitely generated opens of Cantor space.

An open is stored as its canonical generating set: the words ``w`` minimal
under the prefix order with the cylinder of ``w`` contained in the open.  This
set is an antichain and never contains both ``s+`` and ``s-``.  ``{""}`` is
the whole space and the empty set is the empty open.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterable

from .words import (
    MINUS,
    PLUS,
    SElement,
    format_word,
    left_bristles,
    lexl,
    lexu,
    lt,
    parse_word,
    right_bristles,
    s_elements,
    s_leq,
    swap,
    words,
)


def _normalize(gens: Iterable[str]) -> frozenset[str]:
    current = set(gens)
    while True:
        # antichain: drop anything with a proper prefix in the set
        current = {g for g in current if not any(g[:i] in current for i in range(len(g)))}
        merged = {g[:-1] for g in current if g and g[-1] == PLUS and g[:-1] + MINUS in current}
        if not merged:
            return frozenset(current)
        current -= {m + PLUS for m in merged} | {m + MINUS for m in merged}
        current |= merged


class GeneratedOpen:
    """A finitely generated (hence clopen) open of Cantor space."""

    __slots__ = ("generators",)

    def __init__(self, generators: Iterable[str] = ()):
        self.generators: frozenset[str] = _normalize(generators)

    @classmethod
    def top(cls) -> "GeneratedOpen":
        return cls([""])

    @classmethod
    def bottom(cls) -> "GeneratedOpen":
        return cls()

    def __contains__(self, t: str) -> bool:
        """Whether the cylinder of ``t`` lies inside this open."""
        gens = self.generators
        return any(t[:i] in gens for i in range(len(t) + 1))

    member = __contains__

    def contains_stream(self, digit: Callable[[int], str]) -> bool:
        """Whether the stream with digits ``digit(1), digit(2), ...`` lies in the open."""
        for g in self.generators:
            if all(digit(i + 1) == d for i, d in enumerate(g)):
                return True
        return False

    def __or__(self, other: "GeneratedOpen") -> "GeneratedOpen":
        return GeneratedOpen(self.generators | other.generators)

    def __and__(self, other: "GeneratedOpen") -> "GeneratedOpen":
        out = []
        for s in self.generators:
            for t in other.generators:
                if t.startswith(s):
                    out.append(t)
                elif s.startswith(t):
                    out.append(s)
        return GeneratedOpen(out)

    join = __or__
    meet = __and__

    def __le__(self, other: "GeneratedOpen") -> bool:
        return all(g in other for g in self.generators)

    def __ge__(self, other: "GeneratedOpen") -> bool:
        return other <= self

    def __eq__(self, other) -> bool:
        if not isinstance(other, GeneratedOpen):
            return NotImplemented
        return self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    @property
    def depth(self) -> int:
        """Length of the longest generator (0 for the empty open)."""
        return max(map(len, self.generators), default=0)

    def is_top(self) -> bool:
        return self.generators == frozenset({""})

    def is_bottom(self) -> bool:
        return not self.generators

    def complement(self) -> "GeneratedOpen":
        n = self.depth
        return GeneratedOpen(w for w in words(n, n) if w not in self)

    def swap(self) -> "GeneratedOpen":
        return GeneratedOpen(swap(g) for g in self.generators)

    def prepend(self, s: str) -> "GeneratedOpen":
        """``↑s ∧ (t*)^|s| U``: prefix every generator with ``s``."""
        return GeneratedOpen(s + g for g in self.generators)

    def pullback_tail(self) -> "GeneratedOpen":
        """Inverse image under the tail map."""
        return self.prepend(PLUS) | self.prepend(MINUS)

    def mask(self, depth: int) -> int:
        """Bitmask over the ``2**depth`` cylinders of that length; needs ``depth >= self.depth``."""
        if depth < self.depth:
            raise ValueError("mask depth below generator length")
        bits = 0
        for g in self.generators:
            lo = _index(g) << (depth - len(g))
            bits |= ((1 << (1 << (depth - len(g)))) - 1) << lo
        return bits

    def sorted_generators(self) -> list[str]:
        return sorted(self.generators, key=lambda g: (len(g), g.replace(MINUS, "0").replace(PLUS, "1")))

    def __str__(self) -> str:
        return "{" + ",".join(format_word(g) for g in self.sorted_generators()) + "}"

    def __repr__(self) -> str:
        return f"GeneratedOpen({str(self)!r})"


def _index(w: str) -> int:
    return int(w.replace(MINUS, "0").replace(PLUS, "1") or "0", 2)


def parse_open(text: str) -> GeneratedOpen:
    """Read ``{w1,w2,...}``; ``_`` stands for the empty word."""
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ValueError(f"invalid open {text!r}; expected {{w1,w2,...}}")
    body = text[1:-1].strip()
    if not body:
        return GeneratedOpen()
    return GeneratedOpen(parse_word(part.strip()) for part in body.split(","))


def up(s: str) -> GeneratedOpen:
    return GeneratedOpen([s])


@lru_cache(maxsize=None)
def rhook(s: str) -> GeneratedOpen:
    """``↱s``: the streams ``u`` with ``s ⊴_l u``."""
    return GeneratedOpen([s, *right_bristles(s)])


@lru_cache(maxsize=None)
def lhook(s: str) -> GeneratedOpen:
    """``↰s``: the streams ``u`` with ``u ⊴_u s``."""
    return GeneratedOpen([s, *left_bristles(s)])


def pair_open(s: SElement, t: SElement) -> GeneratedOpen:
    """The preframe basic ``(s, t)``, i.e. ``↰s ∨ ↱t`` with ``None`` contributing nothing."""
    out = GeneratedOpen()
    if s is not None:
        out = out | lhook(s)
    if t is not None:
        out = out | rhook(t)
    return out


def coordinate_open(n: int, sign: str) -> GeneratedOpen:
    """The generator ``(n, sign)`` of the coordinate presentation: digit ``n`` equals ``sign``."""
    return GeneratedOpen(w + sign for w in words(n - 1, n - 1))


def u_star(side: str, U: GeneratedOpen) -> Callable[[str], bool]:
    """Membership test for the inverse image of ``U`` under ``u_plus`` or ``u_minus``.

    ``u_minus*(U) = {s | (∃m) s+-^m ∈ U}`` and ``u_plus*(U) = {s | (∃m) s-+^m ∈ U}``.
    Probing ``m`` up to the longest generator plus one is enough: past that
    length, membership of the probe no longer changes.
    """
    if side == "minus":
        head, fill = PLUS, MINUS
    elif side == "plus":
        head, fill = MINUS, PLUS
    else:
        raise ValueError(f"side must be 'plus' or 'minus', not {side!r}")
    bound = U.depth + 1

    def member(s: str) -> bool:
        return any((s + head + fill * m) in U for m in range(bound + 1))

    return member


# -- relation schemas --------------------------------------------------------

class Report:
    """Outcome of an exhaustive check: counts, violations, and expected exceptions."""

    def __init__(self, name: str):
        self.name = name
        self.checked = 0
        self.violations: list[str] = []
        self.expected: list[str] = []
        self.notes: list[str] = []

    def check(self, ok: bool, what) -> bool:
        self.checked += 1
        if not ok:
            self.violations.append(what() if callable(what) else str(what))
        return ok

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        status = "ok" if self.ok else "FAILED"
        line = f"{self.name}: {status} ({self.checked} checks, {len(self.violations)} violations"
        if self.expected:
            line += f", {len(self.expected)} expected exceptions"
        return line + ")"

    def __str__(self) -> str:
        lines = [self.summary()]
        lines += [f"  violation: {v}" for v in self.violations[:20]]
        lines += [f"  note: {n}" for n in self.notes]
        return "\n".join(lines)


def check_hook_identities(max_len: int) -> Report:
    """The six basic properties of the hook opens, over all words up to ``max_len``."""
    rep = Report(f"hook identities (len <= {max_len})")
    ws = list(words(max_len))
    top, bot = GeneratedOpen.top(), GeneratedOpen.bottom()
    for s in ws:
        rh, lh = rhook(s), lhook(s)
        rep.check(up(s) == rh & lh, lambda: f"(1) up({s!r}) != rhook & lhook")
        rep.check(rhook(s + MINUS) == rh, lambda: f"(3) rhook({s!r}-) != rhook({s!r})")
        rep.check(lhook(s + PLUS) == lh, lambda: f"(3) lhook({s!r}+) != lhook({s!r})")
        rep.check((rh | lh) == top, lambda: f"(4) rhook | lhook of {s!r} is not top")
        rep.check(up(s) <= rhook(s + PLUS) | lhook(s + MINUS), lambda: f"(6) fails at {s!r}")
    for s in ws:
        for t in ws:
            if lexl(s, t):
                rep.check(rhook(t) <= rhook(s), lambda: f"(2) rhook({t!r}) !<= rhook({s!r})")
            if lexu(s, t):
                rep.check(lhook(s) <= lhook(t), lambda: f"(2) lhook({s!r}) !<= lhook({t!r})")
            if lt(t, s):
                rep.check((rhook(s) & lhook(t)) == bot, lambda: f"(5) rhook({s!r}) & lhook({t!r}) nonempty")
    return rep


def check_presentation_relations(max_len: int) -> Report:
    """Instantiate the relations of the hook and pair presentations in the concrete model.

    Opens are compared as bitmasks over cylinders of length ``max_len + 1``,
    which is exact since every open involved is generated by words no longer
    than that.
    """
    rep = Report(f"presentation relations (len <= {max_len})")
    depth = max_len + 1
    full = (1 << (1 << depth)) - 1
    ws = list(words(max_len))
    R = {s: rhook(s).mask(depth) for s in words(depth)}
    L = {s: lhook(s).mask(depth) for s in words(depth)}

    # relations between the hooks
    rep.check(R[""] == full, "top <= rhook(ε)")
    rep.check(L[""] == full, "top <= lhook(ε)")
    for s in ws:
        rep.check(R[s] & ~R[s + MINUS] == 0, lambda: f"rhook({s!r}) <= rhook({s!r}-)")
        rep.check(L[s] & ~L[s + PLUS] == 0, lambda: f"lhook({s!r}) <= lhook({s!r}+)")
        rep.check(R[s] | L[s] == full, lambda: f"top <= rhook({s!r}) | lhook({s!r})")
        rep.check(R[s] & L[s] & ~(R[s + PLUS] | L[s + MINUS]) == 0,
                  lambda: f"rhook & lhook of {s!r} <= rhook(s+) | lhook(s-)")
        for t in ws:
            if lexl(s, t):
                rep.check(R[t] & ~R[s] == 0, lambda: f"rhook({t!r}) <= rhook({s!r})")
            if lexu(s, t):
                rep.check(L[s] & ~L[t] == 0, lambda: f"lhook({s!r}) <= lhook({t!r})")
            if lt(t, s):
                rep.check(R[s] & L[t] == 0, lambda: f"rhook({s!r}) & lhook({t!r}) <= bottom")

    # relations of the pair presentation over S = S_left x S_right
    def P(s: SElement, t: SElement) -> int:
        return (0 if s is None else L[s]) | (0 if t is None else R[t])

    S = list(s_elements(max_len))
    for s in S:
        for t in S:
            here = P(s, t)
            if t is not None:
                rep.check(here & ~P(s, t + MINUS) == 0, lambda: f"({s!r},{t!r}) <= ({s!r},{t!r}-)")
            if s is not None:
                rep.check(here & ~P(s + PLUS, t) == 0, lambda: f"({s!r},{t!r}) <= ({s!r}+,{t!r})")
        rep.check(P(s, "") == full, lambda: f"top <= ({s!r},ε)")
        rep.check(P("", s) == full, lambda: f"top <= (ε,{s!r})")
    for s in ws:
        for t in ws:
            if lexu(t, s) or lexl(t, s):
                rep.check(P(s, t) == full, lambda: f"top <= ({s!r},{t!r})")
    for t in ws:
        for s in ws:
            if not lt(t, s):
                continue
            for u in S:
                if not s_leq(u, t, "left"):
                    continue
                for v in S:
                    if s_leq(v, s, "right"):
                        rep.check(P(u, s) & P(t, v) & ~P(u, v) == 0,
                                  lambda: f"({u!r},{s!r}) & ({t!r},{v!r}) <= ({u!r},{v!r})")
    for s in ws:
        bound = P(s + MINUS, s + PLUS)
        for u in S:
            if not s_leq(u, s + MINUS, "left"):
                continue
            for v in S:
                if s_leq(v, s + PLUS, "right"):
                    rep.check(P(u, s) & P(s, v) & ~bound == 0,
                              lambda: f"({u!r},{s!r}) & ({s!r},{v!r}) <= ({s!r}-,{s!r}+)")
    return rep


def check_round_trips(max_len: int) -> Report:
    """Translations between the cylinder, hook and pair presentations compose to identities."""
    rep = Report(f"presentation round trips (len <= {max_len})")
    for s in words(max_len):
        both = rhook(s) & lhook(s)
        rep.check(both == up(s), lambda: f"up({s!r}) -> hooks -> back")
        split = (rhook(s + MINUS) & lhook(s + MINUS)) | (rhook(s + PLUS) & lhook(s + PLUS))
        rep.check(both == split, lambda: f"hook form of up({s!r}) = up({s!r}-) | up({s!r}+)")
        rb = GeneratedOpen()
        for t in right_bristles(s):
            rb = rb | (rhook(t) & lhook(t))
        rep.check((both | rb) == rhook(s), lambda: f"rhook({s!r}) -> cylinders -> back")
        lb = GeneratedOpen()
        for t in left_bristles(s):
            lb = lb | (rhook(t) & lhook(t))
        rep.check((both | lb) == lhook(s), lambda: f"lhook({s!r}) -> cylinders -> back")
        rep.check(pair_open(None, s) == rhook(s) and pair_open(s, None) == lhook(s),
                  lambda: f"hooks of {s!r} -> pairs -> back")
        coords = GeneratedOpen.top()
        for i, d in enumerate(s, start=1):
            coords = coords & coordinate_open(i, d)
        rep.check(coords == up(s), lambda: f"up({s!r}) -> coordinates -> back")
    for n in range(1, max_len + 1):
        p, m = coordinate_open(n, PLUS), coordinate_open(n, MINUS)
        rep.check((p & m).is_bottom() and (p | m).is_top(), lambda: f"coordinate relations at {n}")
    rep.check(pair_open(None, None).is_bottom(), "(bot,bot) -> empty")
    return rep
