"""
Verification suites.

A suite is a list of :class:`Check` objects; each check is a module-level
function returning ``(passed, detail)``.  Checks are independent and seeded
by ``(seed, name)``, so running them in parallel gives the same report.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

from gmpy2 import mpq

from . import calculus as calc
from . import lie
from . import seminorms as sn
from .calculus import VectorField
from .ncpoly import (
    I as IMAG, ONE, Polynomial, ZERO, commutator, cyclic_symmetrize, gens, substitute, words,
    words_upto,
)
from .randomgen import random_field, random_homogeneous_field, random_polynomial, rng_for
from .semicircular import fock, moments, structure

SUITES = ("exactness", "seminorms", "thm27", "lie", "prop64", "semicircular")


@dataclass(frozen=True)
class Config:
    n: int | None = None
    degree: int | None = None
    seed: int = 0
    R: mpq = mpq(1)
    Rp: mpq = mpq(2)
    m: int | None = None
    samples: int | None = None

    def cap(self, d):
        env = os.environ.get("CYCLOGRAD_MAX_DEGREE")
        if env:
            d = min(d, int(env))
        return d

    def deg(self, default):
        return self.cap(default if self.degree is None else self.degree)

    def nmax(self, default):
        return default if self.n is None else self.n

    def count(self, default):
        return default if self.samples is None else self.samples


@dataclass
class Check:
    name: str
    anchor: str
    func: object
    params: dict = field(default_factory=dict)


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    return str(x)


def run_check(check: Check) -> dict:
    try:
        ok, detail = check.func(**check.params)
    except Exception as exc:  # a crashing check is a failing check
        ok, detail = False, {"error": f"{type(exc).__name__}: {exc}"}
    return {"name": check.name, "anchor": check.anchor, "params": _jsonable(check.params),
            "pass": bool(ok), "detail": _jsonable(detail)}


def run_checks(checks, jobs=1):
    if jobs and jobs > 1 and len(checks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(run_check, checks))
    return [run_check(c) for c in checks]


def run_suite(name: str, cfg: Config = Config(), jobs=1) -> dict:
    if name == "all":
        checks = [c for s in SUITES for c in build(s, cfg)]
    else:
        checks = build(name, cfg)
    return {"suite": name, "checks": run_checks(checks, jobs)}


def build(name, cfg):
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES + ('all',))}")
    return builder(cfg)


def all_passed(report) -> bool:
    return all(c["pass"] for c in report["checks"])


# ---------------------------------------------------------------------------
# exact sequence and calculus identities
# ---------------------------------------------------------------------------

def chk_exactness(n, degree):
    rows = []
    for d in range(degree + 1):
        e = calc.exactness_dimensions(n, d)
        rows.append({"degree": d, "ker_delta": e.ker_delta, "ker_C": e.ker_C,
                     "constants_plus_commutators": e.constants_plus_commutators,
                     "ker_theta": e.ker_theta, "image_delta": e.image_delta, "exact": e.exact})
    return all(r["exact"] for r in rows), {"degrees": rows}


def chk_ring_axioms(n, degree, seed, count):
    rng = rng_for(seed, "ring")
    for _ in range(count):
        p, q, r = (random_polynomial(rng, n, degree) for _ in range(3))
        one = Polynomial.one(n)
        if (p * q) * r != p * (q * r) or p * (q + r) != p * q + p * r or one * p != p or p * one != p:
            return False, {"p": str(p), "q": str(q), "r": str(r)}
        if (p * q).star() != q.star() * p.star() or p.star().star() != p:
            return False, {"involution": str(p)}
    return True, {"samples": count}


def chk_leibniz(n, degree, seed, count):
    rng = rng_for(seed, "leibniz")
    one = Polynomial.one(n)
    from .ncpoly import TensorPoly
    for _ in range(count):
        p, q = random_polynomial(rng, n, degree), random_polynomial(rng, n, degree)
        k = random_field(rng, n, 2)
        for j in range(1, n + 1):
            lhs = calc.free_difference_quotient(p * q, j)
            rhs = calc.free_difference_quotient(p, j) * q + p * calc.free_difference_quotient(q, j)
            if lhs != rhs:
                return False, {"p": str(p), "q": str(q), "j": j}
        if calc.derivation_DK(k, p * q) != calc.derivation_DK(k, p) * q + p * calc.derivation_DK(k, q):
            return False, {"p": str(p), "q": str(q), "K": str(k)}
    del one, TensorPoly
    return True, {"samples": count}


def chk_delta_factorization(n, degree, seed, count):
    rng = rng_for(seed, "mu")
    for _ in range(count):
        p = random_polynomial(rng, n, degree, complex_=True)
        for j in range(1, n + 1):
            dq = calc.free_difference_quotient(p, j)
            if calc.cyclic_derivative(p, j) != calc.mu_tilde(dq):
                return False, {"p": str(p), "j": j}
            if calc.free_difference_quotient(p.star(), j) != dq.star().flip():
                return False, {"involution": str(p), "j": j}
            if calc.cyclic_derivative(p.star(), j) != calc.cyclic_derivative(p, j).star():
                return False, {"gradient involution": str(p), "j": j}
    return True, {"samples": count}


def chk_theta_delta(n, degree, seed, count):
    rng = rng_for(seed, "theta")
    for _ in range(count):
        p = random_polynomial(rng, n, degree)
        if not calc.theta(calc.cyclic_gradient(p)).is_zero():
            return False, {"p": str(p)}
        v = random_field(rng, n, degree - 1)
        dec = calc.is_cyclic_gradient(v)
        if dec.is_gradient != calc.theta(v).is_zero():
            return False, {"field": str(v)}
        if dec.is_gradient and calc.cyclic_gradient(dec.witness) != v:
            return False, {"bad witness": str(dec.witness)}
        g = calc.cyclic_gradient(p)
        dec = calc.is_cyclic_gradient(g)
        if not dec.is_gradient or calc.cyclic_gradient(dec.witness) != g:
            return False, {"gradient not recognised": str(p)}
    return True, {"samples": count}


def chk_symmetrization(n, degree, seed, count):
    rng = rng_for(seed, "csym")
    for _ in range(count):
        k = rng.randint(1, degree)
        p = random_polynomial(rng, n, k, min_degree=k)
        c = cyclic_symmetrize(p)
        if cyclic_symmetrize(c) != c.scale(k):
            return False, {"p": str(p)}
    return cyclic_symmetrize(Polynomial.one(n)).is_zero(), {"samples": count}


def chk_substitute(n, degree, seed, count):
    rng = rng_for(seed, "subst")
    for _ in range(count):
        m = rng.randint(1, 3)
        args = [random_polynomial(rng, m, 2) for _ in range(n)]
        p, q = random_polynomial(rng, n, degree), random_polynomial(rng, n, degree)
        if substitute(p * q, args) != substitute(p, args) * substitute(q, args):
            return False, {"p": str(p), "q": str(q)}
        if substitute(p, gens(n)) != p:
            return False, {"identity": str(p)}
    return True, {"samples": count}


def chk_first_variation(n, degree, seed, count):
    rng = rng_for(seed, "variation")
    traces = [moments.semicircular_trace(n), calc.vacuum_trace(n)]
    for i in range(count):
        p, k = random_polynomial(rng, n, degree), random_field(rng, n, degree)
        tau = traces[i % 2]
        lhs, rhs = calc.first_variation(tau, p, k)
        if lhs != rhs or calc.first_order_variation(p, k) != calc.derivation_DK(k, p):
            return False, {"p": str(p), "K": str(k), "trace": tau.name, "lhs": lhs, "rhs": rhs}
    return True, {"samples": count}


def chk_prop34(n, degree, seed, count, cap):
    rng = rng_for(seed, "prop34")
    tau = moments.semicircular_trace(n)
    pool = []
    for k in range(-1, 2):
        pool.extend(lie.trace_preserving_basis(tau, k, n))
    n_true = 0
    for i in range(count):
        if i % 2 and pool:
            v = VectorField.zero(n)
            for b in pool:
                v = v + b.scale(mpq(rng.randint(-3, 3), rng.randint(1, 2)))
            # a random element of the trace-preserving span of degree <= 2
        else:
            v = random_field(rng, n, degree)
        a = calc.is_trace_preserving(v, tau, cap, "derivation")
        b = calc.is_trace_preserving(v, tau, cap, "gradient")
        n_true += a
        if a != b:
            return False, {"field": str(v)}
    return True, {"samples": count, "trace_preserving": n_true}


def chk_orthogonal_examples(n, degree):
    tau = moments.semicircular_trace(n)
    dims = [len(calc.orthogonal_complement_of_gradients(tau, k, n)) for k in range(degree + 1)]
    ok = dims[0] == 0 and (n != 1 or not any(dims))
    return ok, {"dims_by_degree": dims}


def exactness_checks(cfg):
    d = cfg.deg(6)
    nn = cfg.nmax(3)
    k = cfg.count(200)
    checks = [Check(f"exact sequence ranks, n={n}", "exact sequence for cyclic gradients",
                    chk_exactness, {"n": n, "degree": d}) for n in range(1, nn + 1)]
    n2 = min(nn, 2)
    base = {"n": n2, "degree": min(d, 4), "seed": cfg.seed}
    checks += [
        Check("ring axioms and involution", "free algebra", chk_ring_axioms, {**base, "count": k // 2}),
        Check("Leibniz rules", "free difference quotients", chk_leibniz, {**base, "count": k // 2}),
        Check("cyclic derivative factorization", "cyclic derivatives", chk_delta_factorization,
              {**base, "count": k // 2}),
        Check("theta kills gradients; gradient test agrees with theta", "exact sequence for cyclic gradients",
              chk_theta_delta, {**base, "count": k // 2}),
        Check("cyclic symmetrization", "cyclic symmetrization", chk_symmetrization, {**base, "count": k // 2}),
        Check("substitution is a homomorphism", "evaluation", chk_substitute, {**base, "count": k // 4}),
        Check("first variation", "gradient of the trace of a polynomial", chk_first_variation,
              {**base, "count": k}),
        Check("trace preservation: derivation vs gradient pairing", "trace-preserving conditions",
              chk_prop34, {"n": n2, "degree": min(d, 3), "seed": cfg.seed, "count": k // 2,
                           "cap": min(d, 6)}),
        Check("orthogonal complement of gradients", "orthogonality to cyclic gradients",
              chk_orthogonal_examples, {"n": n2, "degree": min(d, 3)}),
    ]
    return checks


# ---------------------------------------------------------------------------
# seminorms
# ---------------------------------------------------------------------------

def chk_lemma26(n, degree, seed, count):
    rng = rng_for(seed, "lemma26")
    failures = {}
    for _ in range(count):
        K, P = random_field(rng, n, degree), random_polynomial(rng, n, degree)
        Kp = sn.majorant(K) + sn.majorant(random_field(rng, n, degree))
        Pp = sn.majorant(P) + sn.majorant(random_polynomial(rng, n, degree))
        for claim, ok in sn.lemma26_claims(K, Kp, P, Pp).items():
            if not ok:
                failures[claim] = failures.get(claim, 0) + 1
    return not failures, {"samples": count, "failures": failures}


def chk_bracket_bound(n, degree, seed, count, R):
    rng = rng_for(seed, "bracket62")
    for _ in range(count):
        P, Q = random_field(rng, n, degree), random_field(rng, n, degree)
        lhs = sn.seminorm(lie.vect_bracket(P, Q), R)
        rhs = sn.seminorm(P, R) * sn.seminorm(Q, R, 1) + sn.seminorm(P, R, 1) * sn.seminorm(Q, R)
        if lhs > rhs:
            return False, {"P": str(P), "Q": str(Q), "lhs": lhs, "rhs": rhs}
    return True, {"samples": count}


def chk_derivation_bound(n, degree, seed, count, R):
    rng = rng_for(seed, "dkbound")
    for _ in range(count):
        K, P = random_field(rng, n, degree), random_polynomial(rng, n, degree)
        if sn.seminorm(calc.derivation_DK(K, P), R) > sn.seminorm(K, R) * sn.seminorm(P, R, 1):
            return False, {"K": str(K), "P": str(P)}
    return True, {"samples": count}


def chk_phi_psi(n, degree, seed, count, R):
    rng = rng_for(seed, "phipsi")
    for _ in range(count):
        P, K = random_polynomial(rng, n, degree), random_field(rng, n, degree)
        for k in range(degree + 2):
            if sn.seminorm(sn.phi_n(P), R, k) != sn.seminorm(P, R, k):
                return False, {"P": str(P), "k": k}
            if not sn.psi_seminorm_relation(K, R, k):
                return False, {"K": str(K), "k": k}
    return True, {"samples": count}


def chk_psi_equality_counterexample(R):
    """At ``k = 0`` the Psi bound can be strict."""
    K = VectorField([Polynomial(2, {(1,): ONE}), Polynomial(2, {(2, 2): ONE})])
    lhs = sn.seminorm(K, R)
    rhs = sn.evaluate_one_var(sn.psi_n(K), R)
    return lhs < rhs, {"K": str(K), "|K|_R": lhs, "Psi(K)(R)": rhs}


def chk_lemma63(n, degree, seed, count):
    rng = rng_for(seed, "lemma63")
    for _ in range(count):
        H, K = random_field(rng, n, degree), random_field(rng, n, degree)
        e, f = rng.randint(1, 3), rng.randint(1, 3)
        alpha = mpq(rng.randint(1, 6), rng.randint(1, 3))
        res = sn.lemma63_check(H, K, alpha, e, f, lie.vect_bracket)
        if not res.corrected:
            return False, {"H": str(H), "K": str(K), "alpha": alpha, "e": e, "f": f}
    return True, {"samples": count}


def chk_lemma63_uncorrected():
    """The bound without the factor alpha fails for alpha = 4."""
    H = VectorField([Polynomial.one(1)])
    K = VectorField([Polynomial(1, {(1, 1): ONE})])
    res = sn.lemma63_check(H, K, 4, 1, 1, lie.vect_bracket)
    return res.corrected and not res.uncorrected, {
        "H": "1", "K": "x1.x1", "alpha": 4, "e": 1, "f": 1, "C1": res.C1, "C2": res.C2,
        "bracket": str(lie.vect_bracket(H, K)),
        "with_alpha_factor_holds": res.corrected, "without_alpha_factor_holds": res.uncorrected}


def chk_seminorm_examples():
    x1x2 = Polynomial(2, {(1, 2): ONE})
    R = mpq(3)
    ok = (sn.seminorm(x1x2, R, 0) == R * R and sn.seminorm(x1x2, R, 1) == 2 * R
          and sn.seminorm(x1x2, R, 2) == 2)
    p = Polynomial(2, {(1,): mpq(3), (2, 1): -ONE})
    ok = ok and sn.seminorm(p, R) == 3 * R + R * R
    c = Polynomial(1, {(1,): 1 + IMAG})
    v = sn.seminorm_value(c, 1)
    ok = ok and not v.exact and v.value == 2
    return ok, {"|x1.x2|_(3,0..2)": [sn.seminorm(x1x2, R, k) for k in range(3)],
                "(1+i)x1 upper bound": v.value}


def seminorm_checks(cfg):
    k = cfg.count(200)
    d = min(cfg.deg(4), 4)
    n = min(cfg.nmax(2), 3)
    base = {"n": n, "degree": d, "seed": cfg.seed}
    return [
        Check("seminorm examples", "seminorms", chk_seminorm_examples, {}),
        Check("majorization lemma", "majorants", chk_lemma26, {**base, "count": k}),
        Check("bracket seminorm bound", "bracket estimate", chk_bracket_bound, {**base, "count": k, "R": cfg.R}),
        Check("derivation seminorm bound", "seminorms", chk_derivation_bound, {**base, "count": k, "R": cfg.R}),
        Check("Phi isometry and Psi relation", "majorants", chk_phi_psi, {**base, "count": k // 4, "R": cfg.R}),
        Check("Psi bound can be strict at k = 0", "majorants", chk_psi_equality_counterexample,
              {"R": cfg.R}),
        Check("bracket majorant with alpha factor", "bracket majorant lemma", chk_lemma63,
              {"n": n, "degree": min(d, 3), "seed": cfg.seed, "count": k // 2}),
        Check("bracket majorant without alpha factor fails", "bracket majorant lemma",
              chk_lemma63_uncorrected, {}),
    ]


# ---------------------------------------------------------------------------
# analytic-vector estimate
# ---------------------------------------------------------------------------

def chk_thm27(seed, count, m, R, Rp, degree):
    rng = rng_for(seed, "thm27")
    worst = ZERO
    for _ in range(count):
        n = rng.randint(1, 2)
        K, P = random_field(rng, n, degree), random_polynomial(rng, n, degree)
        for c in sn.thm27_checks(K, P, m, R, Rp):
            if not c.holds:
                return False, {"K": str(K), "P": str(P), "m": c.m, "lhs": c.lhs, "bound": c.bound}
            if c.bound:
                worst = max(worst, c.lhs / c.bound)
    return True, {"samples": count, "max_ratio": worst}


def chk_lambda_identity(max_m, Rp):
    res = {m: sn.lambda_power_identity_check(m, Rp, 2 * m + 6) for m in range(max_m + 1)}
    return all(res.values()), {"by_m": res}


def chk_thm27_examples():
    ok = (sn.thm27_bound(1, 1, 2, 1, 1) == 4 and sn.thm27_bound(2, 1, 2, 1, 1) == 24
          and sn.thm27_bound(0, 1, 2, 1, 1) == 2 and sn.analytic_radius(1, 2, 1) == mpq(1, 4)
          and sn.analytic_radius(1, 3, 2) == mpq(1, 3) and sn.analytic_radius(1, 2, 0) == sn.INFINITE)
    return ok, {}


def chk_analytic_ratio(R, Rp):
    """Below the radius, consecutive bound terms shrink geometrically."""
    N = mpq(1)
    r = sn.analytic_radius(R, Rp, N) / 2
    ratios = []
    for m in range(40):
        a = sn.thm27_bound(m, R, Rp, N, 1) * r ** m / math.factorial(m)
        b = sn.thm27_bound(m + 1, R, Rp, N, 1) * r ** (m + 1) / math.factorial(m + 1)
        ratios.append(b / a)
    return all(x < 1 for x in ratios[5:]) and ratios[-1] < mpq(2, 3), {"last_ratio": ratios[-1]}


def thm27_checks(cfg):
    m = cfg.m if cfg.m is not None else 4
    return [
        Check("bound examples", "analytic-vector estimate", chk_thm27_examples, {}),
        Check("iterated derivation estimate", "analytic-vector estimate", chk_thm27,
              {"seed": cfg.seed, "count": cfg.count(200), "m": m, "R": cfg.R, "Rp": cfg.Rp,
               "degree": min(cfg.deg(3), 3)}),
        Check("geometric-series identity", "analytic-vector estimate", chk_lambda_identity,
              {"max_m": min(m, 3) if cfg.m is None else m, "Rp": cfg.Rp}),
        Check("analytic radius ratio test", "analytic-vector estimate", chk_analytic_ratio,
              {"R": cfg.R, "Rp": cfg.Rp}),
    ]


# ---------------------------------------------------------------------------
# Lie algebra
# ---------------------------------------------------------------------------

def chk_jacobi(n, degree, seed, count):
    rng = rng_for(seed, "jacobi")
    br = lie.vect_bracket
    for _ in range(count):
        nn = rng.randint(1, n)
        a, b, c = (random_field(rng, nn, degree) for _ in range(3))
        if not (br(a, br(b, c)) + br(b, br(c, a)) + br(c, br(a, b))).is_zero():
            return False, {"a": str(a), "b": str(b), "c": str(c)}
        if br(a, b) != -br(b, a):
            return False, {"antisymmetry": str(a)}
    return True, {"samples": count}


def chk_bracket_is_commutator(n, degree, seed, count):
    rng = rng_for(seed, "dcomm")
    for _ in range(count):
        P, Q = random_field(rng, n, 2), random_field(rng, n, 2)
        B = lie.vect_bracket(P, Q)
        for w in words_upto(n, degree):
            x = Polynomial(n, {w: ONE})
            lhs = calc.derivation_DK(B, x)
            rhs = calc.derivation_DK(P, calc.derivation_DK(Q, x)) - calc.derivation_DK(Q, calc.derivation_DK(P, x))
            if lhs != rhs:
                return False, {"P": str(P), "Q": str(Q), "word": w}
    return True, {"samples": count}


def chk_grading(n, seed, count):
    rng = rng_for(seed, "grading")
    for _ in range(count):
        k, l = rng.randint(-1, 2), rng.randint(-1, 2)
        a, b = random_homogeneous_field(rng, n, k), random_homogeneous_field(rng, n, l)
        c = lie.vect_bracket(a, b)
        g = lie.homogeneous_grade(c)
        if not c.is_zero() and g != k + l:
            return False, {"k": k, "l": l, "grade": g}
        if k == l == -1 and not c.is_zero():
            return False, {"V_-1 not abelian": str(c)}
        full = lie.grade(a + b)
        if full.reconstruct() != a + b:
            return False, {"reconstruct": str(a + b)}
    return True, {"samples": count}


def chk_gl(n):
    derived = lie.check_gl_relations(n, "derived")
    printed = lie.check_gl_relations(n, "printed")
    center = lie.center_of_V0(n)
    euler = lie.euler_field(n)
    center_ok = len(center) == 1 and lie.in_span(center, euler)
    units_sum = VectorField.zero(n)
    for j in range(1, n + 1):
        units_sum = units_sum + lie.gl_unit(j, j, n)
    ok = derived and center_ok and units_sum == euler
    # with n = 1 the two sign conventions coincide (both sides vanish)
    return ok, {"derived_relation_holds": derived, "printed_relation_holds": printed,
                "center_dim": len(center)}


def chk_gl_printed_sign(n):
    return not lie.check_gl_relations(n, "printed"), {
        "E12,E21": str(lie.vect_bracket(lie.gl_unit(1, 2, n), lie.gl_unit(2, 1, n)))}


def chk_inner(n, degree, seed, count):
    rng = rng_for(seed, "inner")
    traces = [moments.semicircular_trace(n), calc.vacuum_trace(n)]
    for _ in range(count):
        P, Q = random_polynomial(rng, n, degree), random_polynomial(rng, n, degree)
        v = random_field(rng, n, degree)
        F = lie.inner_field(P)
        if calc.derivation_DK(F, Q) != commutator(P, Q):
            return False, {"derivation": str(P)}
        w = lie.inner_ideal_witness(P, v)
        if lie.vect_bracket(F, v) != lie.inner_field(w):
            return False, {"ideal": str(P), "v": str(v)}
        for tau in traces:
            if tau(calc.derivation_DK(F, Q)):
                return False, {"trace": tau.name, "P": str(P), "Q": str(Q)}
    return True, {"samples": count}


def chk_involution(n, degree, seed, count):
    rng = rng_for(seed, "liestar")
    for _ in range(count):
        P, Q = random_field(rng, n, degree, complex_=True), random_field(rng, n, degree, complex_=True)
        if lie.vect_bracket(P, Q).star() != lie.vect_bracket(P.star(), Q.star()):
            return False, {"P": str(P), "Q": str(Q)}
        A, B = P + P.star(), Q + Q.star()
        if not lie.vect_bracket(A, B).is_selfadjoint():
            return False, {"selfadjoint": str(A)}
        S = random_polynomial(rng, n, degree)
        S = S + S.star()
        if not lie.selfadjoint_inner_field(S).is_selfadjoint():
            return False, {"inner selfadjoint": str(S)}
    return True, {"samples": count}


def chk_filtration(n, seed, count):
    """``V_{>=p}`` is an ideal in ``V_{>=0}``."""
    rng = rng_for(seed, "filtration")
    for _ in range(count):
        p = rng.randint(1, 2)
        a = random_homogeneous_field(rng, n, rng.randint(0, 2))
        b = random_homogeneous_field(rng, n, rng.randint(p, p + 1))
        c = lie.vect_bracket(a, b)
        if not c.is_zero() and min(lie.grade(c).grades()) < p:
            return False, {"p": p}
    return True, {"samples": count}


def chk_trace_preserving_algebra(n, max_k):
    tau = moments.semicircular_trace(n)
    bases = {k: lie.trace_preserving_basis(tau, k, n) for k in range(-1, max_k + 1)}
    dims = {k: len(b) for k, b in bases.items()}
    closed = True
    for k in range(-1, max_k + 1):
        for l in range(-1, max_k + 1):
            if k + l > max_k or k + l < -1:
                continue
            for a in bases[k]:
                for b in bases[l]:
                    c = lie.vect_bracket(a, b)
                    if not c.is_zero() and not lie.in_span(bases[k + l], c):
                        closed = False
    robust = all(len(lie.trace_preserving_basis(tau, k, n, test_degree=k + 4)) == dims[k]
                 for k in range(-1, min(max_k, 1) + 1))
    so_dim = n * (n - 1) // 2
    sa = {k: len(lie.selfadjoint_part(b)) for k, b in bases.items()}
    ok = closed and robust and dims[-1] == 0 and dims[0] == so_dim and sa[0] == so_dim
    return ok, {"dims": dims, "selfadjoint_real_dims": sa, "bracket_closed": closed,
                "higher_test_degree_agrees": robust}


def chk_pure_trace_constants(n):
    b = lie.trace_preserving_basis(calc.vacuum_trace(n), -1, n)
    return len(b) == 0, {"dim": len(b)}


def lie_checks(cfg):
    n = min(cfg.nmax(3), 3)
    k = cfg.count(100)
    d = min(cfg.deg(3), 3)
    checks = [
        Check("Jacobi identity", "bracket of vector fields", chk_jacobi,
              {"n": n, "degree": d, "seed": cfg.seed, "count": k}),
        Check("bracket is the commutator of derivations", "bracket of vector fields",
              chk_bracket_is_commutator, {"n": min(n, 2), "degree": min(cfg.deg(4), 4),
                                          "seed": cfg.seed, "count": max(k // 10, 1)}),
        Check("grading", "grading", chk_grading, {"n": min(n, 2), "seed": cfg.seed, "count": k}),
        Check("filtration ideals", "grading", chk_filtration, {"n": min(n, 2), "seed": cfg.seed, "count": k // 2}),
        Check("inner derivations", "inner derivations", chk_inner,
              {"n": min(n, 2), "degree": d, "seed": cfg.seed, "count": k // 2}),
        Check("involution and real form", "selfadjoint real form", chk_involution,
              {"n": min(n, 2), "degree": d, "seed": cfg.seed, "count": k // 2}),
        Check("pure trace kills constant fields", "trace-preserving fields", chk_pure_trace_constants,
              {"n": min(n, 2)}),
    ]
    for nn in range(1, n + 1):
        checks.append(Check(f"gl(n) structure constants, n={nn}", "linear vector fields", chk_gl, {"n": nn}))
    if n >= 2:
        checks.append(Check("opposite-sign gl relation fails", "linear vector fields",
                            chk_gl_printed_sign, {"n": 2}))
    for nn in range(1, min(n, 3) + 1):
        checks.append(Check(f"semicircular trace-preserving subalgebra, n={nn}",
                            "trace-preserving fields", chk_trace_preserving_algebra,
                            {"n": nn, "max_k": 2 if nn <= 2 else 1}))
    return checks


# ---------------------------------------------------------------------------
# bracket chains
# ---------------------------------------------------------------------------

def chk_prop64(seed, count, m, R, Rp, n, degree):
    rng = rng_for(seed, "prop64")
    worst = ZERO
    for mm in range(m + 1):
        for _ in range(count):
            ks = [random_field(rng, n, degree) for _ in range(mm + 1)]
            M = max(sn.seminorm(k, Rp) for k in ks)
            lhs = sn.seminorm(lie.adjoint_chain(ks), R)
            bound = sn.prop64_bound(mm, M, R, Rp)
            if lhs > bound:
                return False, {"m": mm, "lhs": lhs, "bound": bound}
            if bound:
                worst = max(worst, lhs / bound)
    return True, {"samples_per_m": count, "max_ratio": worst}


def chk_prop64_examples():
    ok = (sn.prop64_bound(0, 1, 1, 2) == 2 and sn.prop64_bound(1, 1, 1, 2) == 16
          and sn.prop64_bound(3, 0, 1, 2) == 0)
    return ok, {}


def prop64_checks(cfg):
    m = cfg.m if cfg.m is not None else 3
    return [
        Check("bound examples", "bracket chain estimate", chk_prop64_examples, {}),
        Check("bracket chain estimate", "bracket chain estimate", chk_prop64,
              {"seed": cfg.seed, "count": cfg.count(40), "m": m, "R": cfg.R, "Rp": cfg.Rp,
               "n": min(cfg.nmax(2), 2), "degree": min(cfg.deg(2), 2)}),
    ]


# ---------------------------------------------------------------------------
# semicircular
# ---------------------------------------------------------------------------

def fock_moment(word, n):
    v = fock.poly_to_fock(Polynomial(n, {tuple(word): ONE}), max(len(word), 0))
    return v.terms.get((), ZERO)


def chk_catalan(max_k):
    a = [moments.semicircular_moment((1,) * (2 * k)) for k in range(max_k + 1)]
    b = [fock_moment((1,) * (2 * k), 1) for k in range(max_k + 1)]
    cat = [math.comb(2 * k, k) // (k + 1) for k in range(max_k + 1)]
    return a == b == cat, {"pairings": a, "fock": b}


def chk_mixed_moments(n, length):
    bad = [w for w in words_upto(n, length) if moments.semicircular_moment(w) != fock_moment(w, n)]
    return not bad, {"words": sum(n ** k for k in range(length + 1)), "mismatches": bad[:5]}


def chk_moment_trace_property(n, length):
    for w in words_upto(n, length):
        m = moments.semicircular_moment(w)
        for r in range(1, len(w)):
            if moments.semicircular_moment(w[r:] + w[:r]) != m:
                return False, {"word": w}
    return True, {}


def chk_freeness(n):
    """Alternating products of centred Chebyshev polynomials have trace zero."""
    tau = moments.semicircular_trace(n)
    count = 0
    for p in range(1, 5):
        for idx in words(n, p):
            if any(a == b for a, b in zip(idx, idx[1:])):
                continue
            for ks in words(3, p):
                val = tau(moments.chebyshev_product(ks, idx, n))
                count += 1
                if val:
                    return False, {"ks": ks, "idx": idx}
    return True, {"products": count}


def chk_orthonormal(n, total):
    """``<P_k(s)1, P_k'(s)1> = [k = k']`` on alternating Chebyshev products."""
    tau = moments.semicircular_trace(n)
    data = []
    for t in range(total + 1):
        data.extend(structure.alternating_index_data(n, t, cyclic=False) if t else [((), ())])
    polys = [moments.chebyshev_product(ks, idx, n) for ks, idx in data]
    for a, p in enumerate(polys):
        for b, q in enumerate(polys):
            if tau(q.star() * p) != (ONE if a == b else ZERO):
                return False, {"a": data[a], "b": data[b]}
    return True, {"elements": len(polys)}


def chk_chebyshev(d):
    ok = moments.chebyshev_generating_check(d)
    tau = moments.semicircular_trace(1)
    for j in range(d + 1):
        for k in range(d + 1):
            if tau(moments.chebyshev_P(j) * moments.chebyshev_P(k)) != (ONE if j == k else ZERO):
                ok = False
    for k in range(1, d + 1):
        if calc.free_difference_quotient(moments.chebyshev_P(k), 1) != moments.chebyshev_difference_quotient(k):
            ok = False
    for k in range(d + 1):
        v = fock.poly_to_fock(moments.chebyshev_P(k), k)
        if v != fock.FockVector.basis((1,) * k, 1, k):
            ok = False
    return ok, {"degree": d}


def chk_adjointness(n, d):
    for a in words_upto(n, d - 1):
        for b in words_upto(n, d - 1):
            x, y = fock.FockVector.basis(a, n, d), fock.FockVector.basis(b, n, d)
            for j in range(1, n + 1):
                if fock.apply_creation(j, x).inner(y) != x.inner(fock.apply_annihilation(j, y)):
                    return False, {"l": j, "a": a, "b": b}
                if fock.apply_right_creation(j, x).inner(y) != x.inner(fock.apply_right_annihilation(j, y)):
                    return False, {"r": j, "a": a, "b": b}
            if fock.apply_rotation(x).inner(y) != x.inner(fock.apply_rotation_adjoint(y)):
                return False, {"R": (a, b)}
    # the overflow flag records truncation
    top = fock.FockVector.basis((1,) * d, n, d)
    flagged = fock.apply_creation(1, top).overflow
    return flagged, {"overflow_flagged": flagged}


def chk_lemma77(n, d):
    return structure.lemma77_check(n, d), {}


def chk_kernels(n, d):
    res = {g: (structure.theta_star_kernel_check(n, g), structure.remark78_check(n, g))
           for g in range(1, d + 1)}
    return all(a and b for a, b in res.values()), {"by_grade": res}


def chk_prop72(n, total):
    partial, cyclic, tested = True, True, 0
    for t in range(1, total + 1):
        for ks, idx in structure.alternating_index_data(n, t, cyclic=False):
            tested += 1
            partial &= structure.prop72_check(ks, idx, n, "partial")
            valid = len(idx) > 1 and idx[0] != idx[-1] or len(idx) == 1 and ks[0] <= 2
            if valid:
                cyclic &= structure.prop72_check(ks, idx, n, "cyclic")
    return partial and cyclic, {"cases": tested, "partial": partial, "cyclic_where_valid": cyclic}


def chk_prop72_single_letter():
    """With one letter of degree >= 3 the cyclic variant fails."""
    lhs, rhs = structure.prop72_sides((3,), (1,), 1, 1, "cyclic")
    fails = [k for k in range(1, 7) if not structure.prop72_check((k,), (1,), 1, "cyclic")]
    return fails == [3, 4, 5, 6], {"k=3 s-route": lhs, "k=3 l-route": rhs, "failing_k": fails}


def chk_lemma73_thm74(n, d):
    a, b = structure.lemma73_check(n, d), structure.thm74_check(n, d)
    return a and b, {"span_plus_kernel": a, "gradient_images_agree": b}


def chk_thm75(n, max_k):
    reps = [structure.thm75_check(k, n) for k in range(max_k + 1)]
    orbit = [structure.orbit_count_dimension(k, n) for k in range(max_k + 1)]
    ok = all(r.ok for r in reps) and [r.dim_X for r in reps] == orbit and reps[0].dim_X == 0
    return ok, {"dim_X": [r.dim_X for r in reps], "orbit_formula": orbit}


def chk_F_routes(n, max_len):
    bad = [I for L in range(1, max_len + 1) for I in words(n, L) if not structure.F_routes_agree(I, n)]
    star = all(structure.F_star_identity(I, n) for L in range(1, max_len + 1) for I in words(n, L))
    cyc = all(structure.cyclic_sum_in_kernel(I, n) for L in range(1, max_len + 1) for I in words(n, L))
    return not bad and star and cyc, {"mismatches": bad[:5], "star_identity": star, "cyclic_sums_vanish": cyc}


def chk_bases(n, max_k):
    out, ok = {}, True
    for k in range(1, max_k + 1):
        om = structure.omega_report(k, n)
        ro = structure.root_report(k, n)
        re = structure.real_report(k, n)
        ok &= om.is_basis and ro.is_basis and re.is_basis
        out[k] = {"omega": om.size, "roots": ro.size, "real": re.size, "dim": om.target_rank}
    return ok, out


def chk_printed_omega(n, max_k):
    """The index set compared against one rotation only spans for k = 1."""
    out = {}
    for k in range(1, max_k + 1):
        r = structure.omega_report(k, n, printed=True)
        out[k] = {"size": r.size, "rank": r.rank, "dim": r.target_rank, "spans": r.spans}
    ok = out[1]["spans"] and all(not out[k]["spans"] for k in range(2, max_k + 1))
    return ok, out


def chk_printed_roots(n, max_k):
    """Strict minimality keeps only aperiodic words; the family falls short
    exactly when a non-constant periodic necklace exists (constant words
    give ``F_I = 0``)."""
    out = {}
    for k in range(1, max_k + 1):
        r = structure.root_report(k, n, printed=True)
        periodic = any(m < k + 1 and len(set(I)) > 1 for I, m in structure.root_set(k, n))
        out[k] = {"size": r.size, "dim": r.target_rank, "spans": r.spans,
                  "nonconstant_periodic_necklaces": periodic}
    ok = all(v["spans"] != v["nonconstant_periodic_necklaces"] for v in out.values())
    return ok, out


def chk_density(n, d):
    rep = structure.thm712_density_check(d, n)
    return rep.ok, {"grades": rep.grades}


def semicircular_checks(cfg):
    n = min(cfg.nmax(2), 3)
    d = cfg.deg(4)
    checks = [
        Check("Catalan moments by two routes", "semicircular moments", chk_catalan, {"max_k": 6}),
        Check("mixed moments by two routes", "semicircular moments", chk_mixed_moments,
              {"n": n, "length": min(cfg.deg(8), 8)}),
        Check("moments are tracial", "semicircular moments", chk_moment_trace_property,
              {"n": n, "length": min(cfg.deg(8), 8)}),
        Check("freeness of alternating centred products", "semicircular moments", chk_freeness, {"n": n}),
        Check("Chebyshev polynomials", "Chebyshev polynomials", chk_chebyshev, {"d": min(cfg.deg(6), 8)}),
        Check("orthonormal Chebyshev products", "Fock space basis", chk_orthonormal,
              {"n": n, "total": min(d, 4)}),
        Check("creation/annihilation adjointness", "Fock space", chk_adjointness, {"n": n, "d": min(d, 4)}),
        Check("free difference quotients of Chebyshev products", "s- and l-gradients", chk_prop72,
              {"n": n, "total": min(d, 5)}),
        Check("cyclic variant fails for one letter of degree >= 3", "s- and l-gradients",
              chk_prop72_single_letter, {}),
        Check("gradient images agree", "s- and l-gradients", chk_lemma73_thm74, {"n": n, "d": min(d, 4)}),
        Check("orthogonal complement dimensions", "orthogonal complement in Fock space", chk_thm75,
              {"n": n, "max_k": d}),
        Check("F_I by two routes", "Chebyshev form of F_I", chk_F_routes, {"n": n, "max_len": min(d + 1, 5)}),
        Check("bases by rotations, roots of unity and real parts", "bases of trace-preserving fields",
              chk_bases, {"n": n, "max_k": max(min(d, 4), 1)}),
        Check("single-rotation index set spans only at k = 1", "bases of trace-preserving fields",
              chk_printed_omega, {"n": max(n, 2), "max_k": max(min(d, 4), 2)}),
        Check("strictly minimal representatives miss periodic necklaces", "bases of trace-preserving fields",
              chk_printed_roots, {"n": n, "max_k": max(min(d, 4), 1)}),
        Check("density at bounded degree", "density of trace-preserving fields", chk_density,
              {"n": n, "d": d}),
    ]
    for nn in range(1, 4):
        checks.append(Check(f"rotation identity for T_j, n={nn}", "rotation identity", chk_lemma77,
                            {"n": nn, "d": min(cfg.deg(5), 5)}))
    checks.append(Check("kernel identities", "rotation identity", chk_kernels, {"n": n, "d": min(d, 5)}))
    return checks


_BUILDERS = {
    "exactness": exactness_checks,
    "seminorms": seminorm_checks,
    "thm27": thm27_checks,
    "lie": lie_checks,
    "prop64": prop64_checks,
    "semicircular": semicircular_checks,
}


def with_overrides(cfg: Config, **kw) -> Config:
    return replace(cfg, **{k: v for k, v in kw.items() if v is not None})
