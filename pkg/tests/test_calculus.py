import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from cyclograd import Polynomial, TensorPoly, VectorField, gens
from cyclograd import calculus as calc
from cyclograd.calculus import (
    cyclic_derivative, cyclic_gradient, derivation_DK, free_difference_quotient, is_cyclic_gradient,
    iterated_derivation, m_a, mu_tilde, theta,
)
from cyclograd.semicircular import semicircular_trace

import oracles
from strategies import field_st, poly_st

X1, X2 = gens(2)
ONE2 = Polynomial.one(2)


def T(a, b):
    return TensorPoly.simple(a, b)


def test_free_difference_quotient_examples():
    x = Polynomial.gen(1, 1)
    assert free_difference_quotient(x * x, 1) == T(Polynomial.one(1), x) + T(x, Polynomial.one(1))
    assert free_difference_quotient(X2, 1).is_zero()
    assert free_difference_quotient(X1 * X2 * X1, 1) == T(ONE2, X2 * X1) + T(X1 * X2, ONE2)


@given(poly_st(2, 4))
def test_free_difference_quotient_oracle(p):
    for j in (1, 2):
        expect = {}
        for w, c in oracles.to_dict(p).items():
            for key, m in oracles.ffd(w, j).items():
                expect[key] = expect.get(key, 0) + c * m
        expect = {k: v for k, v in expect.items() if v}
        got = {k: oracles.frac(c) for k, c in free_difference_quotient(p, j).terms.items()}
        assert got == expect


def test_cyclic_derivative_examples():
    assert cyclic_derivative(X1 * X2 * X1, 1) == X2 * X1 + X1 * X2
    assert cyclic_derivative(X1 * X2 * X1, 2) == X1 * X1
    x = Polynomial.gen(1, 1)
    for p in range(1, 6):
        assert cyclic_derivative(x ** p, 1) == (x ** (p - 1)).scale(p)


@given(poly_st(2, 4))
def test_cyclic_derivative_oracle_and_mu_route(p):
    for j in (1, 2):
        assert oracles.to_dict(cyclic_derivative(p, j)) == oracles.cyclic_derivative(oracles.to_dict(p), j)
        assert cyclic_derivative(p, j) == mu_tilde(free_difference_quotient(p, j))


def test_gradient_examples():
    assert cyclic_gradient(X1 * X2) == VectorField([X2, X1])
    assert cyclic_gradient(ONE2).is_zero()


@given(poly_st(2, 4, complex_=True))
def test_gradient_commutes_with_involution(p):
    assert cyclic_gradient(p.star()) == cyclic_gradient(p).star()


def test_theta_examples():
    assert theta(VectorField([X2, X1])).is_zero()
    assert theta(VectorField([X2, Polynomial.zero(2)])) == X1 * X2 - X2 * X1


@given(poly_st(2, 5))
def test_theta_kills_gradients(p):
    assert theta(cyclic_gradient(p)).is_zero()


def test_m_a_examples():
    assert m_a(TensorPoly.one(2), X2) == X2
    assert m_a(T(X1, X2), X1) == X1 * X1 * X2
    rng = random.Random(3)
    from cyclograd.randomgen import random_polynomial
    for _ in range(20):
        a = random_polynomial(rng, 2, 3)
        assert m_a(free_difference_quotient(X1 * X1, 1), a) == a * X1 + X1 * a


def test_derivation_examples():
    assert derivation_DK(VectorField([X2, Polynomial.zero(2)]), X1 * X1) == X2 * X1 + X1 * X2
    assert derivation_DK(VectorField([X1, X2]), ONE2).is_zero()


@given(poly_st(2, 4), field_st(2, 3))
def test_derivation_oracle(p, k):
    expect = oracles.derivation([oracles.to_dict(c) for c in k], oracles.to_dict(p))
    assert oracles.to_dict(derivation_DK(k, p)) == expect


@given(poly_st(2, 4))
def test_euler_field_scales_homogeneous_parts(p):
    euler = VectorField.identity(2)
    for d in range(5):
        h = p.homogeneous_component(d)
        assert derivation_DK(euler, h) == h.scale(d)


def test_iterated_derivation_examples():
    x = Polynomial.gen(1, 1)
    assert iterated_derivation(VectorField([x]), x, 0) == x
    assert iterated_derivation(VectorField([x]), x, 2) == x
    assert iterated_derivation(VectorField([x * x]), x, 2) == (x ** 3).scale(2)


def test_gradient_test_examples():
    dec = is_cyclic_gradient(VectorField([X2, X1]))
    assert dec.is_gradient and cyclic_gradient(dec.witness) == VectorField([X2, X1])
    dec = is_cyclic_gradient(VectorField([X2, Polynomial.zero(2)]))
    assert not dec.is_gradient and dec.failed_degree == 1
    dec = is_cyclic_gradient(VectorField.zero(2))
    assert dec.is_gradient and dec.witness.is_zero()


@given(field_st(2, 3))
@settings(max_examples=60)
def test_gradient_test_agrees_with_theta(v):
    dec = is_cyclic_gradient(v)
    assert dec.is_gradient == theta(v).is_zero()
    if dec.is_gradient:
        assert cyclic_gradient(dec.witness) == v


def test_first_variation_examples():
    sc = semicircular_trace(2)
    assert calc.first_variation(sc, X1 * X1, VectorField([X1, Polynomial.zero(2)])) == (2, 2)
    assert calc.first_variation(sc, X1 * X1, VectorField([X2, Polynomial.zero(2)])) == (0, 0)
    assert calc.first_variation(sc, ONE2, VectorField([X2, X1])) == (0, 0)


def test_first_variation_against_matrices():
    """``tr`` of random rational matrices is a trace; the variation must match."""
    rng = random.Random("matrices")
    from cyclograd.randomgen import random_field, random_polynomial
    for _ in range(15):
        p, k = random_polynomial(rng, 2, 3), random_field(rng, 2, 2)
        mats = [[[Fraction(rng.randint(-2, 2)) for _ in range(3)] for _ in range(3)] for _ in range(2)]
        dual = oracles.first_variation_by_matrices(oracles.to_dict(p), [oracles.to_dict(c) for c in k], mats)
        grad = cyclic_gradient(p)
        pairing = {}
        for gj, kj in zip(grad, k):
            pairing = oracles.d_add(pairing, oracles.d_mul(oracles.to_dict(gj), oracles.to_dict(kj)))
        size = 3

        def mat_of(w):
            m = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
            for letter in w:
                a = mats[letter - 1]
                m = [[sum(m[i][t] * a[t][j] for t in range(size)) for j in range(size)] for i in range(size)]
            return m
        rhs = sum((c * sum(mat_of(w)[i][i] for i in range(size)) for w, c in pairing.items()), Fraction(0))
        assert dual == rhs


def test_trace_preserving_examples():
    sc = semicircular_trace(2)
    assert calc.is_trace_preserving(VectorField([X2, -X1]), sc, 6)
    assert not calc.is_trace_preserving(VectorField([X1, Polynomial.zero(2)]), sc, 2)
    assert calc.is_trace_preserving(VectorField.zero(2), sc, 4)


def test_orthogonal_complement_examples():
    sc = semicircular_trace(2)
    basis = calc.orthogonal_complement_of_gradients(sc, 1, 2)
    assert len(basis) == 1
    v = basis[0]
    assert v == VectorField([X2, -X1]).scale(v[0].coefficient((2,)))
    assert calc.orthogonal_complement_of_gradients(sc, 0, 2) == []
    for d in range(5):
        assert calc.orthogonal_complement_of_gradients(semicircular_trace(1), d, 1) == []


@pytest.mark.parametrize("n,d", [(1, 6), (2, 5), (3, 4)])
def test_exactness_small(n, d):
    e = calc.exactness_dimensions(n, d)
    assert e.exact
    assert e.ker_theta == e.image_delta


def test_exactness_counts_degree_two():
    # degree 2, n = 2: commutators span [x1,x2]; C kills only that direction
    e = calc.exactness_dimensions(2, 2)
    assert e.ker_C == e.ker_delta == e.constants_plus_commutators == 1
    # image of delta in degree-1 fields: gradients of x1x1, x1x2, x2x2
    assert e.image_delta == 3


def test_bad_generator_index():
    with pytest.raises(IndexError):
        free_difference_quotient(X1, 3)
