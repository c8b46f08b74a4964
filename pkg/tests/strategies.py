"""Shared hypothesis strategies."""

from fractions import Fraction

from hypothesis import strategies as st

from interval_object.streams import SignStream, TritStream

sign_words = st.text(alphabet="-+", max_size=8)
short_words = st.text(alphabet="-+", max_size=5)
trit_words = st.text(alphabet="-0+", max_size=6)


@st.composite
def sign_streams(draw, max_prefix=6, max_period=6):
    prefix = draw(st.text(alphabet="-+", max_size=max_prefix))
    period = draw(st.text(alphabet="-+", min_size=1, max_size=max_period))
    return SignStream(prefix, period)


@st.composite
def trit_streams(draw, max_prefix=6, max_period=6):
    prefix = draw(st.text(alphabet="-0+", max_size=max_prefix))
    period = draw(st.text(alphabet="-0+", min_size=1, max_size=max_period))
    return TritStream(prefix, period)


@st.composite
def dyadics_in_open_unit(draw, max_exp=8):
    k = draw(st.integers(0, max_exp))
    n = draw(st.integers(-(1 << k) + 1, (1 << k) - 1))
    return Fraction(n, 1 << k)
