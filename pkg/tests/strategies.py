"""Hypothesis strategies for polynomials and vector fields."""

from gmpy2 import mpq
from hypothesis import strategies as st

from cyclograd import Polynomial, VectorField, gauss

rationals = st.builds(lambda a, b: mpq(a, b), st.integers(-3, 3), st.integers(1, 2))
gaussians = st.builds(gauss, rationals, rationals)


def word_st(n, max_len):
    return st.lists(st.integers(1, n), max_size=max_len).map(tuple)


def poly_st(n, max_len=3, complex_=False, max_terms=6):
    coeffs = gaussians if complex_ else rationals
    return st.dictionaries(word_st(n, max_len), coeffs, max_size=max_terms).map(
        lambda t: Polynomial(n, t))


def field_st(n, max_len=3, complex_=False):
    return st.lists(poly_st(n, max_len, complex_), min_size=n, max_size=n).map(VectorField)
