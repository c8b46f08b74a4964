from fractions import Fraction

import pytest
from hypothesis import given

from interval_object.dyadic import cprime
from interval_object.opens import lhook, pair_open, rhook
from interval_object.words import (
    WordSyntaxError,
    format_selement,
    format_word,
    is_prefix,
    left_bristles,
    lexl,
    lexu,
    lmid,
    lt,
    midl,
    overlap,
    parse_selement,
    parse_word,
    right_bristles,
    s_elements,
    s_join,
    s_leq,
    s_meet,
    swap,
    words,
)

from strategies import sign_words

WORDS5 = list(words(5))


def lt_oracle(s, t):
    # some u with u- a prefix of s and u+ a prefix of t
    return any(s.startswith(s[:i] + "-") and t.startswith(s[:i] + "+") for i in range(min(len(s), len(t))))


def lower_end(t):
    return Fraction(cprime(t)) - Fraction(1, 2 ** len(t))


def upper_end(t):
    return Fraction(cprime(t)) + Fraction(1, 2 ** len(t))


@pytest.mark.parametrize("s,t,expected", [("", "+-", True), ("-+", "-+-", True), ("+", "-+", False)])
def test_is_prefix_examples(s, t, expected):
    assert is_prefix(s, t) is expected


@pytest.mark.parametrize("s,t,expected", [("-+", "+", True), ("+-+", "++", True), ("-+", "-+-", False)])
def test_lt_examples(s, t, expected):
    assert lt(s, t) is expected


@pytest.mark.parametrize("s,t,expected", [("-+", "-+-", True), ("-+-", "+", True), ("+", "-", False)])
def test_lexl_examples(s, t, expected):
    assert lexl(s, t) is expected


@pytest.mark.parametrize("s,t,expected", [("-+-", "-+", True), ("--", "+", True), ("", "+", False)])
def test_lexu_examples(s, t, expected):
    assert lexu(s, t) is expected


def test_bristle_examples():
    assert right_bristles("-+-") == ["+", "-++"]
    assert right_bristles("") == []
    assert right_bristles("--") == ["+", "-+"]
    assert left_bristles("+") == ["-"]
    assert left_bristles("-+-") == ["--"]
    assert left_bristles("--") == []


@pytest.mark.parametrize("s,t,expected", [("-+", "+-", True), ("+", "++", True), ("--", "+", False)])
def test_overlap_examples(s, t, expected):
    assert overlap(s, t) is expected


@pytest.mark.parametrize("s,t,expected", [("", "+-+", True), ("-+", "+", True), ("", "+-", False)])
def test_lmid_examples(s, t, expected):
    assert lmid(s, t) is expected


@pytest.mark.parametrize("t,s,expected", [("+--", "+", True), ("-+-", "-", False), ("-", "+", True)])
def test_midl_examples(t, s, expected):
    assert midl(t, s) is expected


def test_s_lattice_examples():
    assert s_meet(None, "+", "right") is None
    assert s_join("+-", "++", "right") == "+-"
    # - lies below + in the upper lexicographic order, so the join is +
    assert s_join("-", "+", "left") == "+"
    assert s_join("+", "-", "left") == "+"


def test_lt_matches_definition_exhaustively():
    for s in WORDS5:
        for t in WORDS5:
            assert lt(s, t) == lt_oracle(s, t)
            assert lexl(s, t) == (lt_oracle(s, t) or t.startswith(s))
            assert lexu(s, t) == (lt_oracle(s, t) or s.startswith(t))


def test_bristles_are_minimal_words_beside_s():
    for s in words(6):
        assert right_bristles(s) == sorted((t for t in words(len(s)) if lt(s, t) and not any(
            lt(s, t[:i]) for i in range(len(t)))), key=len)
        assert left_bristles(s) == sorted((t for t in words(len(s)) if lt(t, s) and not any(
            lt(t[:i], s) for i in range(len(t)))), key=len)


def test_overlap_iff_pair_open_is_whole():
    for s in WORDS5:
        for t in WORDS5:
            assert overlap(s, t) == pair_open(s, t).is_top(), (s, t)


def test_lmid_midl_match_cylinder_arithmetic():
    # s ⊲ t iff every stream extending t has value above c'(s)
    for s in WORDS5:
        for t in words(7):
            assert lmid(s, t) == (lower_end(t) > cprime(s)), (s, t)
            assert midl(t, s) == (upper_end(t) < cprime(s)), (t, s)


def test_s_lattice_laws():
    elems = list(s_elements(3))
    for lattice in ("right", "left"):
        for a in elems:
            assert s_leq(None, a, lattice)
            for b in elems:
                j, m = s_join(a, b, lattice), s_meet(a, b, lattice)
                assert s_leq(a, j, lattice) and s_leq(b, j, lattice)
                assert s_leq(m, a, lattice) and s_leq(m, b, lattice)
                assert s_join(a, b, lattice) == s_join(b, a, lattice)
                if s_leq(a, b, lattice) and s_leq(b, a, lattice):
                    assert a == b


def test_s_orders_imply_hook_inclusion():
    # only one direction: distinct words such as _ and - share a hook
    for s in WORDS5:
        for t in WORDS5:
            if s_leq(s, t, "right"):
                assert rhook(s) <= rhook(t)
            if s_leq(s, t, "left"):
                assert lhook(s) <= lhook(t)
    assert rhook("") == rhook("-") and not s_leq("", "-", "right")


def test_parse_and_format():
    assert parse_word("_") == "" and format_word("") == "_"
    assert parse_word(" -+ ") == "-+"
    assert parse_selement("bot") is None and format_selement(None) == "bot"
    with pytest.raises(WordSyntaxError):
        parse_word("+x")


@given(sign_words)
def test_word_round_trip(s):
    assert parse_word(format_word(s)) == s
    assert parse_selement(format_selement(s)) == s


@given(sign_words, sign_words)
def test_swap_reverses_order(s, t):
    assert lt(s, t) == lt(swap(t), swap(s))
    assert lexl(s, t) == lexu(swap(t), swap(s))
    assert lmid(s, t) == midl(swap(t), swap(s))
    assert overlap(s, t) == overlap(swap(t), swap(s))
