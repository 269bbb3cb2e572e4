from fractions import Fraction

from hypothesis import strategies as st

from mcurves.exactpoly import HForm, monomial_basis

small_ints = st.integers(min_value=-5, max_value=5)


@st.composite
def forms(draw, min_degree=0, max_degree=8, coeff=small_ints):
    deg = draw(st.integers(min_value=min_degree, max_value=max_degree))
    basis = monomial_basis(deg)
    chosen = draw(st.lists(st.sampled_from(basis), max_size=6))
    return HForm(deg, {e: draw(coeff) for e in chosen})


@st.composite
def forms_of_degree(draw, deg):
    basis = monomial_basis(deg)
    return HForm(deg, {e: draw(small_ints) for e in basis})


points = st.tuples(*[st.fractions(min_value=-4, max_value=4, max_denominator=5)] * 3)


def F(x):
    return Fraction(x)
