"""Shared hypothesis strategies."""
import random

from hypothesis import strategies as st

from kklab.polynomials import IntPolynomial, LaurentPolynomial, NCPolynomial

small = st.integers(-4, 4)


@st.composite
def int_polys(draw, variables=("x", "y"), max_deg=3, max_terms=4):
    out = IntPolynomial(0)
    for _ in range(draw(st.integers(0, max_terms))):
        term = IntPolynomial(draw(small))
        for v in variables:
            term = term * IntPolynomial.var(v) ** draw(st.integers(0, max_deg))
        out = out + term
    return out


@st.composite
def laurents(draw):
    return LaurentPolynomial(draw(st.dictionaries(st.integers(-4, 4), small, max_size=4)))


@st.composite
def nc_polys(draw, gens=("a", "b")):
    words = st.lists(st.sampled_from(gens), max_size=3).map(tuple)
    return NCPolynomial(draw(st.dictionaries(words, small, max_size=4)))


seeds = st.integers(0, 2 ** 32 - 1).map(random.Random)
