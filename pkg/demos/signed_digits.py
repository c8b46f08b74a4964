"""Signed-digit streams, midpoints and the ball-domain iteration.

A stream of signs s1 s2 ... denotes sum s_i 2**-i in [-1, 1].  Two streams
can denote the same number, which is what makes the digitwise midpoint work.
"""
from fractions import Fraction

from interval_object.balls import ball_chain, iterate_M
from interval_object.streams import approximant, exact_value, half, m_s, parse_stream, u_minus, u_plus

# Eventually periodic streams have exact rational values.
third = parse_stream("(+-)")
print("value of", third, "=", exact_value(third))

# Zero has two names: +-^ω and -+^ω.  Every dyadic has exactly two.
print(u_minus(""), "and", u_plus(""), "both evaluate to", exact_value(u_minus("")))

# The digitwise midpoint lands in trits; agreement keeps the sign, a clash gives 0.
x, y = parse_stream("+(-+)"), parse_stream("-(+)")
mid = m_s(x, y)
print("m_s:", mid, " value", exact_value(mid), "== average", (exact_value(x) + exact_value(y)) / 2)

# half(±s) = ±∓s.
print("half", third, "->", half(third), "value", exact_value(half(third)))

# The iterates M_n are balls of radius exactly 2**-n, nested, and with the
# endpoints -1, 1 they are the partial-sum approximants.
for k, ball in enumerate(ball_chain(third, 6)):
    print(f"M_{k}: {ball}")
assert iterate_M(third, 12) == approximant(third, 12)

# Other endpoints give an affine copy of the interval.
b = iterate_M(third, 24, (Fraction(0), Fraction(1, 2)))
print("with endpoints 0, 1/2:", b, "~", float(b.center), "(limit 1/4 + 1/3 * 1/4 =", float(Fraction(1, 3)), ")")
