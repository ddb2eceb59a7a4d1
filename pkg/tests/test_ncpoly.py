import pytest
from hypothesis import given, settings

from cyclograd import I, Polynomial, TensorPoly, commutator, cyclic_symmetrize, gens, substitute
from cyclograd.ncpoly import (
    GeneratorMismatch, cyclic_period, cyclic_rotate, homogeneous_component, necklaces,
)
from cyclograd.text import parse_polynomial as P

from oracles import d_add, d_mul, orbit_count, to_dict
from strategies import poly_st

X1, X2 = gens(2)


def test_concatenation():
    assert X1 * X2 == Polynomial(2, {(1, 2): 1})


def test_expand_product():
    assert (X1 + X2) * (X1 - X2) == P("x1.x1 - x1.x2 + x2.x1 - x2.x2")


@given(poly_st(2), poly_st(2))
def test_product_matches_dict_oracle(p, q):
    assert to_dict(p * q) == d_mul(to_dict(p), to_dict(q))
    assert to_dict(p + q) == d_add(to_dict(p), to_dict(q))


@given(poly_st(2))
def test_unit_law(p):
    one = Polynomial.one(2)
    assert one * p == p == p * one


@given(poly_st(2), poly_st(2), poly_st(2))
@settings(max_examples=50)
def test_associative_and_distributive(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


def test_involution_examples():
    assert (Polynomial(2, {(1, 2): I})).star() == Polynomial(2, {(2, 1): -I})
    assert X1.star() == X1


@given(poly_st(2, complex_=True), poly_st(2, complex_=True))
def test_involution_antimultiplicative(p, q):
    assert (p * q).star() == q.star() * p.star()
    assert p.star().star() == p


def test_commutator_examples():
    assert commutator(X1, X2) == X1 * X2 - X2 * X1
    assert commutator(X1, X2 * X1) == P("x1.x2.x1 - x2.x1.x1")


@given(poly_st(2))
def test_commutator_antisymmetric(p):
    assert commutator(p, p).is_zero()


def test_cyclic_symmetrize_examples():
    assert cyclic_symmetrize(X1 * X2) == X1 * X2 + X2 * X1
    assert cyclic_symmetrize(Polynomial.one(2)).is_zero()
    assert cyclic_symmetrize(X1 * X1) == (X1 * X1).scale(2)


@given(poly_st(2), poly_st(2))
def test_commutators_die_under_symmetrization(p, q):
    assert cyclic_symmetrize(commutator(p, q)).is_zero()


def test_substitute_examples():
    assert substitute(X1 * X2, [X2, X1]) == X2 * X1
    assert substitute(X1 * X1, [X1 + X2, X2]) == P("x1.x1 + x1.x2 + x2.x1 + x2.x2")


@given(poly_st(2))
def test_identity_substitution(p):
    assert substitute(p, gens(2)) == p


def test_tensor_examples():
    t = TensorPoly.one(2)
    assert X1 * t * X2 == TensorPoly.simple(X1, X2)
    assert TensorPoly.simple(X1, X2).flip() == TensorPoly.simple(X2, X1)
    s = TensorPoly.simple(Polynomial(2, {(1, 2): I}), X1).star()
    assert s == TensorPoly.simple(Polynomial(2, {(2, 1): -I}), X1)


def test_words():
    assert cyclic_period((1, 2, 1, 2)) == 2
    assert cyclic_period((1, 1, 2)) == 3
    assert cyclic_rotate((1, 2, 3), 1) == (2, 3, 1)
    assert cyclic_rotate((1, 2, 3), -1) == (3, 1, 2)
    assert homogeneous_component(X1 + X1 * X2, 2) == X1 * X2


@pytest.mark.parametrize("n,length", [(1, 4), (2, 1), (2, 4), (2, 6), (3, 3)])
def test_necklace_count(n, length):
    assert len(necklaces(n, length)) == orbit_count(n, length)


def test_generator_validation():
    with pytest.raises(ValueError):
        Polynomial(2, {(3,): 1})
    with pytest.raises(ValueError):
        Polynomial(2, {(0,): 1})
    with pytest.raises(GeneratorMismatch):
        Polynomial.gen(1, 1) + Polynomial.gen(1, 2)


def test_constants_compare():
    assert Polynomial.constant(3, 2) == 3
    assert Polynomial.zero(2) == 0
