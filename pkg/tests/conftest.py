"""Shared hypothesis strategies for the exact-arithmetic property tests."""

from hypothesis import strategies as st

from braidrep.laurent import LaurentPoly


def term_tuples(max_coeff=9, span=3):
    return st.tuples(
        st.integers(min_value=-max_coeff, max_value=max_coeff),
        st.integers(min_value=-span, max_value=span),
        st.integers(min_value=-span, max_value=span),
    )


@st.composite
def laurent_polys(draw, max_terms=4, span=3):
    p = LaurentPoly()
    for c, et, eq in draw(st.lists(term_tuples(span=span), max_size=max_terms)):
        p = p + LaurentPoly.monomial(c, et, eq)
    return p


@st.composite
def nonzero_polys(draw, max_terms=3):
    p = draw(laurent_polys(max_terms=max_terms))
    if p.is_zero():
        c = draw(st.integers(min_value=1, max_value=5))
        et = draw(st.integers(min_value=-2, max_value=2))
        p = p + LaurentPoly.monomial(c, et)
    return p


@st.composite
def unit_monomials(draw):
    sign = 1 if draw(st.booleans()) else -1
    et = draw(st.integers(min_value=-3, max_value=3))
    eq = draw(st.integers(min_value=-3, max_value=3))
    return LaurentPoly.monomial(sign, et, eq)
