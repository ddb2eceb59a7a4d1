"""Acceptance criteria, one test each, at the stated sizes and tolerances
(all comparisons are exact)."""

import itertools
import time

from cyclograd import suites
from cyclograd import calculus as calc
from cyclograd import lie
from cyclograd.semicircular import moments, structure

import oracles

SEED = 0


def test_criterion_01_exact_sequence_ranks():
    start = time.perf_counter()
    for n in (1, 2, 3):
        for d in range(7):
            e = calc.exactness_dimensions(n, d)
            assert e.ker_delta == e.ker_C == e.constants_plus_commutators, (n, d)
            assert e.ker_theta == e.image_delta, (n, d)
    assert time.perf_counter() - start < 30


def test_criterion_02_iterated_derivation_bound():
    ok, detail = suites.chk_thm27(seed=SEED, count=200, m=4, R=1, Rp=2, degree=3)
    assert ok, detail
    for m in range(4):
        assert suites.sn.lambda_power_identity_check(m, 2, 2 * m + 6)


def test_criterion_03_majorization_and_bracket_bound():
    ok, detail = suites.chk_lemma26(n=2, degree=3, seed=SEED, count=200)
    assert ok, detail
    ok, detail = suites.chk_bracket_bound(n=2, degree=3, seed=SEED, count=200, R=1)
    assert ok, detail


def test_criterion_04_semicircular_moments():
    catalan = [oracles.catalan(k) for k in range(7)]
    assert catalan == [1, 1, 2, 5, 14, 42, 132]
    pairing = [moments.semicircular_moment((1,) * (2 * k)) for k in range(7)]
    vacuum = [suites.fock_moment((1,) * (2 * k), 1) for k in range(7)]
    assert pairing == vacuum == catalan
    for length in range(9):
        for w in itertools.product((1, 2), repeat=length):
            assert moments.semicircular_moment(w) == suites.fock_moment(w, 2), w


def test_criterion_05_rotation_identity():
    for n in (1, 2, 3):
        assert structure.lemma77_check(n, 5), n


def test_criterion_06_dimensions_and_spanning_family():
    for k in range(5):
        rep = structure.thm75_check(k, 2)
        assert rep.orthogonal
        assert rep.dim_X == 2 ** (k + 1) - oracles.orbit_count(2, k + 1)
        if k >= 1:
            assert structure.omega_report(k, 2).spans
    assert structure.thm75_check(1, 2).dim_X == 1
    assert len(structure.real_basis(1, 2)) == 1


def test_criterion_07_density_at_bounded_degree():
    rep = structure.thm712_density_check(4, 2)
    assert rep.ok, rep.grades


def test_criterion_08_trace_preservation_tests_agree():
    ok, detail = suites.chk_prop34(n=2, degree=3, seed=SEED, count=100, cap=6)
    assert ok, detail
    assert 0 < detail["trace_preserving"] < 100


def test_criterion_09_first_variation():
    ok, detail = suites.chk_first_variation(n=2, degree=4, seed=SEED, count=200)
    assert ok, detail


def test_criterion_10_lie_suite():
    for check, params in [
        (suites.chk_jacobi, {"n": 3, "degree": 3, "seed": SEED, "count": 100}),
        (suites.chk_grading, {"n": 2, "seed": SEED, "count": 100}),
        (suites.chk_inner, {"n": 2, "degree": 3, "seed": SEED, "count": 50}),
        (suites.chk_prop64, {"seed": SEED, "count": 40, "m": 3, "R": 1, "Rp": 2, "n": 2, "degree": 2}),
    ]:
        ok, detail = check(**params)
        assert ok, (check.__name__, detail)
    for n in (1, 2, 3):
        assert lie.check_gl_relations(n, "derived")
