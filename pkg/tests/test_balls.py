from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from interval_object.balls import (
    BOTTOM,
    M0_star,
    affine_limit,
    ball_chain,
    is_chain,
    iterate,
    iterate_M,
    m_prime,
    rational_interval,
)
from interval_object.dyadic import FormalBall
from interval_object.streams import approximant, parse_stream, tail

from strategies import sign_streams, trit_streams

endpoint = st.integers(-16, 16).map(lambda n: F(n, 16))


def ball(c, r):
    return FormalBall(F(c), F(r))


def test_m_prime_examples():
    assert m_prime(ball(F(1, 2), F(1, 4)), ball(0, 1)) == ball(F(1, 4), F(5, 8))
    assert m_prime(BOTTOM, BOTTOM) == BOTTOM


def test_iterate_examples():
    assert iterate_M(parse_stream("(+)"), 3) == ball(F(7, 8), F(1, 8))
    for ends in [(-1, 1), (0, F(1, 2)), (F(-3, 4), F(1, 4))]:
        assert iterate_M(parse_stream("+-(+)"), 0, ends) == BOTTOM
    b = iterate_M(parse_stream("(+)"), 12, (0, F(1, 2)))
    assert b.lower <= F(1, 2) <= b.upper
    assert affine_limit(parse_stream("(+)"), (0, F(1, 2))) == F(1, 2)


@pytest.mark.parametrize("b,expected", [(ball(0, 2), True), (ball(F(1, 2), 1), False), (ball(0, F(9, 8)), True)])
def test_M0_star_examples(b, expected):
    assert M0_star(b) is expected


def test_endpoint_validation():
    with pytest.raises(ValueError):
        iterate_M(parse_stream("(+)"), 2, (-2, 1))
    with pytest.raises(ValueError):
        iterate_M(parse_stream("(+)"), -1)


@given(st.one_of(sign_streams(), trit_streams()), st.integers(0, 20))
def test_iteration_reproduces_the_approximant(s, n):
    assert iterate_M(s, n) == approximant(s, n)


@given(sign_streams(), endpoint, endpoint, st.integers(0, 24))
def test_affine_oracle(s, a, b, n):
    x = iterate_M(s, n, (a, b))
    assert x.radius == F(1, 2 ** n)
    limit = affine_limit(s, (a, b))
    assert abs(F(x.center) - limit) <= F(1, 2 ** n)
    if n:
        prev = iterate_M(s, n - 1, (a, b))
        assert x.radius == prev.radius / 2


@given(trit_streams(), endpoint, endpoint)
def test_chains_shrink(s, a, b):
    chain = ball_chain(s, 12, (a, b))
    assert is_chain(chain)
    assert [c.radius for c in chain] == [F(1, 2 ** k) for k in range(13)]


@given(sign_streams(), st.integers(1, 12))
def test_unfolding_equation(s, n):
    # M_{n}(x) = m'(h(x), M_{n-1}(t(x)))
    head = FormalBall.point(1 if s.digit(1) == "+" else -1)
    assert iterate_M(s, n) == m_prime(head, iterate_M(tail(s), n - 1))


def test_generic_iterate_on_a_custom_coalgebra():
    # binary expansion of 2/3 by doubling: heads are -1 or 1 depending on x >= 0
    def head(x):
        return FormalBall.point(1 if x >= 0 else -1)

    def step(x):
        return 2 * x - (1 if x >= 0 else -1)

    b = iterate(head, step, F(2, 3), 30)
    assert abs(F(b.center) - F(2, 3)) <= b.radius


def test_rational_interval_is_a_midpoint_algebra():
    A = rational_interval(-1, 1)
    samples = [F(-1), F(-1, 3), F(0), F(1, 2), F(1)]
    assert A.law_violations(samples) == []
    assert A.a_zero == 0 and A.a_half("+") == F(1, 2) and A.a_half("-") == F(-1, 2)
    assert A.unfold("+-+", F(0)) == F(3, 8)


def test_law_checker_flags_a_non_midpoint():
    from interval_object.balls import MidpointAlgebra

    skew = MidpointAlgebra("skew", lambda x, y: (2 * x + y) / 3, F(-1), F(1))
    assert skew.law_violations([F(0), F(1)])
