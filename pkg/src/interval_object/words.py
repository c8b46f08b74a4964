"""Finite sign words and the decidable relations between them.

Words are plain ``str`` objects over the two characters ``'-'`` and ``'+'``.
The empty string is the empty word.  Positions are counted from 1 in the
docstrings (the first digit weighs 2**-1), but indexing in code is the usual
zero-based slicing.

Elements of the totally ordered lattices ``S_right`` and ``S_left`` are
either a word or ``None``, the adjoined bottom.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator, Optional

MINUS = "-"
PLUS = "+"
SIGNS = (MINUS, PLUS)

SElement = Optional[str]

_SWAP = str.maketrans("+-", "-+")


class WordSyntaxError(ValueError):
    """Raised when text cannot be read as a sign word."""


def parse_word(text: str) -> str:
    """Validate ``text`` as a sign word; ``'_'`` is accepted for the empty word."""
    text = text.strip()
    if text == "_":
        return ""
    bad = set(text) - {MINUS, PLUS}
    if bad:
        raise WordSyntaxError(f"invalid sign word {text!r}: unexpected {''.join(sorted(bad))!r}")
    return text


def format_word(s: str) -> str:
    return s if s else "_"


def flip(sign: str) -> str:
    return PLUS if sign == MINUS else MINUS


def swap(s: str) -> str:
    """Flip every digit of ``s``."""
    return s.translate(_SWAP)


def words(max_len: int, min_len: int = 0) -> Iterator[str]:
    """All sign words with ``min_len <= len <= max_len``, shortest first."""
    for n in range(min_len, max_len + 1):
        for digits in product(SIGNS, repeat=n):
            yield "".join(digits)


def is_prefix(s: str, t: str) -> bool:
    return t.startswith(s)


def comparable(s: str, t: str) -> bool:
    return s.startswith(t) or t.startswith(s)


def _first_difference(s: str, t: str) -> int:
    for i, (a, b) in enumerate(zip(s, t)):
        if a != b:
            return i
    return -1


def lt(s: str, t: str) -> bool:
    """``s < t``: at the first place they differ, ``s`` has ``-`` and ``t`` has ``+``."""
    i = _first_difference(s, t)
    return i >= 0 and s[i] == MINUS


def lexl(s: str, t: str) -> bool:
    """Lexicographic order with ``-`` below ``+`` and prefixes first."""
    return lt(s, t) or t.startswith(s)


def lexu(s: str, t: str) -> bool:
    """Dual lexicographic order: ``s < t`` or ``t`` is a prefix of ``s``."""
    return lt(s, t) or s.startswith(t)


def right_bristles(s: str) -> list[str]:
    """The words ``u+`` with ``u-`` a prefix of ``s``, shortest first."""
    return [s[:i] + PLUS for i, d in enumerate(s) if d == MINUS]


def left_bristles(s: str) -> list[str]:
    """The words ``u-`` with ``u+`` a prefix of ``s``, shortest first."""
    return [s[:i] + MINUS for i, d in enumerate(s) if d == PLUS]


def overlap(s: str, t: str) -> bool:
    """Decide ``s ≬ t``: the left hook of ``s`` and right hook of ``t`` cover Cantor space."""
    if lt(t, s) or comparable(s, t):
        return True
    # s = u-+^k and t = u+-^l
    body = s.rstrip(PLUS)
    if not body:
        return False
    u = body[:-1]
    rest = t[len(u):]
    return t.startswith(u) and rest[:1] == PLUS and rest[1:].strip(MINUS) == ""


def _hooked(s: str, t: str, first: str) -> bool:
    # s·first·(not first)^k·first is a prefix of t for some k
    if not t.startswith(s + first):
        return False
    rest = t[len(s) + 1:].lstrip(flip(first))
    return rest[:1] == first


def lmid(s: str, t: str) -> bool:
    """``s ⊲ t``: every stream extending ``t`` lies strictly above the dyadic of ``s``."""
    return lt(s, t) or _hooked(s, t, PLUS)


def midl(t: str, s: str) -> bool:
    """``t ⊳ s``: every stream extending ``t`` lies strictly below the dyadic of ``s``."""
    return lt(t, s) or _hooked(s, t, MINUS)


def s_leq(a: SElement, b: SElement, lattice: str) -> bool:
    """Order of ``S_right`` (reverse of :func:`lexl`) or ``S_left`` (:func:`lexu`)."""
    if a is None:
        return True
    if b is None:
        return False
    if lattice == "right":
        return lexl(b, a)
    if lattice == "left":
        return lexu(a, b)
    raise ValueError(f"unknown lattice {lattice!r}")


def s_meet(a: SElement, b: SElement, lattice: str) -> SElement:
    return a if s_leq(a, b, lattice) else b


def s_join(a: SElement, b: SElement, lattice: str) -> SElement:
    return b if s_leq(a, b, lattice) else a


def s_elements(max_len: int) -> Iterator[SElement]:
    """``None`` followed by every word up to ``max_len``."""
    yield None
    yield from words(max_len)


def format_selement(a: SElement) -> str:
    return "bot" if a is None else format_word(a)


def parse_selement(text: str) -> SElement:
    text = text.strip()
    return None if text == "bot" else parse_word(text)
