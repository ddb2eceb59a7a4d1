import itertools

import pytest

from cyclograd import Polynomial, TensorPoly, VectorField, gens
from cyclograd.calculus import free_difference_quotient, orthogonal_complement_of_gradients
from cyclograd.semicircular import fock, moments, structure
from cyclograd.semicircular.fock import FockVector

import oracles

X1, X2 = gens(2)
t = Polynomial.gen(1, 1)


def e(word, n=2, d=4):
    return FockVector.basis(word, n, d)


# -- moments -------------------------------------------------------------------

def test_catalan_moments():
    assert [moments.semicircular_moment((1,) * (2 * k)) for k in range(7)] == [1, 1, 2, 5, 14, 42, 132]
    assert moments.semicircular_moment((1, 2, 1, 2)) == 0
    assert moments.semicircular_moment(()) == 1


@pytest.mark.parametrize("length", range(0, 9))
def test_moments_match_brute_force(length):
    for w in itertools.product((1, 2), repeat=length):
        assert moments.semicircular_moment(w) == oracles.brute_moment(w)


def test_three_generator_moments():
    for w in itertools.product((1, 2, 3), repeat=6):
        assert moments.semicircular_moment(w) == oracles.brute_moment(w)


def test_fock_vacuum_expectation():
    for w in itertools.product((1, 2), repeat=6):
        v = fock.poly_to_fock(Polynomial(2, {w: 1}), 6)
        assert v.terms.get((), 0) == oracles.brute_moment(w)


# -- Chebyshev -------------------------------------------------------------------

def test_chebyshev_examples():
    assert moments.chebyshev_P(0) == 1
    assert moments.chebyshev_P(2) == t * t - 1
    P = moments.chebyshev_P
    one = Polynomial.one(1)
    expect = TensorPoly.simple(one, P(2)) + TensorPoly.simple(P(1), P(1)) + TensorPoly.simple(P(2), one)
    assert free_difference_quotient(P(3), 1) == expect


def test_chebyshev_generating_function():
    assert moments.chebyshev_generating_check(10)


def test_chebyshev_orthonormal():
    tau = moments.semicircular_trace(1)
    for j in range(7):
        for k in range(7):
            assert tau(moments.chebyshev_P(j) * moments.chebyshev_P(k)) == (1 if j == k else 0)


# -- Fock operators ----------------------------------------------------------------

def test_fock_examples():
    vac = FockVector.vacuum(1, 3)
    assert fock.apply_s(1, vac) == FockVector.basis((1,), 1, 3)
    assert fock.apply_s(1, FockVector.basis((1,), 1, 3)) == FockVector(1, 3, {(1, 1): 1, (): 1})
    assert fock.apply_rotation(e((1, 2))) == e((2, 1))
    assert fock.apply_annihilation(2, e((1, 2))).is_zero()


def test_overflow_flag():
    v = fock.apply_creation(1, e((1, 1, 1, 1)))
    assert v.is_zero() and v.overflow
    with pytest.raises(fock.TruncationError):
        fock.poly_to_fock(X1 * X1 * X1, 2)


def test_fock_round_trip():
    p = X1 * X2 * X1 - X2.scale(3) + 1
    assert fock.fock_to_poly(fock.poly_to_fock(p, 4)) == p


def test_reverse_is_antiunitary():
    from cyclograd import I
    v = FockVector(2, 3, {(1, 2): I, (2,): 1})
    assert v.reverse() == FockVector(2, 3, {(2, 1): -I, (2,): 1})


@pytest.mark.parametrize("n,d", [(1, 5), (2, 5), (3, 5), (2, 4), (1, 3)])
def test_rotation_identity(n, d):
    assert structure.lemma77_check(n, d)


def test_rotation_identity_by_hand_grade_two():
    # n = 2, e_12: sum_j T_j T_j* e_12 = 2 e_12 - e_21 - e_21
    v = e((1, 2), 2, 2)
    out = FockVector.zero(2, 2)
    for j in (1, 2):
        out = out + fock.apply_T(j, fock.apply_T_adjoint(j, v))
    assert out == FockVector(2, 2, {(1, 2): 2, (2, 1): -2})


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_kernel_identities(g):
    assert structure.theta_star_kernel_check(2, g)
    assert structure.remark78_check(2, g)


# -- gradients of Chebyshev products ------------------------------------------------

def test_partial_variant_examples():
    assert structure.prop72_check((3,), (1,), 1, "partial")
    assert structure.prop72_check((1, 1), (1, 2), 2, "partial")
    assert structure.prop72_check((1,), (1,), 1, "cyclic")


def test_cyclic_variant_single_letter_degree_three():
    lhs, rhs = structure.prop72_sides((3,), (1,), 1, 1, "cyclic")
    # P_3 = t^3 - 2t, so delta_1 P_3(s_1) 1 = (3 s_1^2 - 2) 1 = 3 e_11 + 1
    assert lhs == {(1, 1): 3, (): 1}
    assert rhs == {(1, 1): 3}
    assert not structure.prop72_check((3,), (1,), 1, "cyclic")


def test_cyclic_variant_requires_distinct_ends():
    with pytest.raises(ValueError):
        structure.prop72_check((1, 1, 1), (1, 2, 1), 2, "cyclic")


@pytest.mark.parametrize("total", [1, 2, 3, 4])
def test_cyclic_variant_with_distinct_ends(total):
    for ks, idx in structure.alternating_index_data(2, total, cyclic=True):
        if len(idx) > 1:
            assert structure.prop72_check(ks, idx, 2, "cyclic")


@pytest.mark.parametrize("n,d", [(1, 3), (2, 4), (3, 3)])
def test_span_and_gradient_images(n, d):
    assert structure.lemma73_check(n, d)
    assert structure.thm74_check(n, d)


# -- X_k --------------------------------------------------------------------------

@pytest.mark.parametrize("k", range(0, 5))
def test_dimension_equals_orbit_formula(k):
    rep = structure.thm75_check(k, 2)
    assert rep.ok
    assert rep.dim_X == 2 ** (k + 1) - oracles.orbit_count(2, k + 1)


def test_F_examples():
    a, b = structure.F_fock((1, 2), 2)
    assert a == FockVector.basis((2,), 2, 2) and b == FockVector.basis((1,), 2, 2).scale(-1)
    assert structure.F_polynomial((1, 2), 2) == VectorField([X2, -X1])
    assert all(v.is_zero() for v in structure.F_fock((1, 1), 2))


@pytest.mark.parametrize("length", [1, 2, 3, 4, 5])
def test_F_routes(length):
    for I in itertools.product((1, 2), repeat=length):
        assert structure.F_routes_agree(I, 2)
        assert structure.cyclic_sum_in_kernel(I, 2)
        assert structure.F_star_identity(I, 2)


def test_omega_sets():
    assert structure.printed_omega_set(1, 2) == [(1, 2)]
    assert structure.omega_set(1, 2) == [(2, 1)]


@pytest.mark.parametrize("n,k", [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2)])
def test_bases(n, k):
    assert structure.omega_report(k, n).is_basis
    assert structure.root_report(k, n).is_basis
    assert structure.real_report(k, n).is_basis


@pytest.mark.parametrize("k", [2, 3, 4])
def test_single_rotation_index_set_too_small(k):
    r = structure.omega_report(k, 2, printed=True)
    assert not r.spans and r.rank < r.target_rank


@pytest.mark.parametrize("n,k,spans", [(2, 2, True), (2, 3, False), (2, 4, True), (2, 5, False), (3, 3, False)])
def test_strict_minimal_roots(n, k, spans):
    assert structure.root_report(k, n, printed=True).spans is spans


def test_real_grade_one_is_rotation():
    ((I, kind, vec),) = structure.real_basis(1, 2)
    assert structure.is_selfadjoint_tuple(vec)


def test_cyclotomic_polynomials():
    assert structure.cyclotomic_polynomial(1) == (-1, 1)
    assert structure.cyclotomic_polynomial(4) == (1, 0, 1)
    assert structure.cyclotomic_polynomial(6) == (1, -1, 1)


# -- density at bounded degree -------------------------------------------------------

def test_density_n2():
    rep = structure.thm712_density_check(4, 2)
    assert rep.ok
    assert [g["dim_fock"] for g in rep.grades] == [0, 1, 5, 15, 39]


def test_density_n1():
    rep = structure.thm712_density_check(4, 1)
    assert rep.ok and all(g["dim_fock"] == 0 for g in rep.grades)


def test_grade_zero_both_zero():
    assert orthogonal_complement_of_gradients(moments.semicircular_trace(2), 0, 2) == []
    assert structure.thm75_check(0, 2).dim_X == 0
