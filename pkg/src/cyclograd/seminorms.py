"""
Weighted l1 seminorms on C<n>, coefficientwise majorants and the estimates
built on them.

All bounds are exact rationals.  Complex coefficients are allowed; when their
modulus is irrational the seminorm falls back to ``|re| + |im|`` and reports
that the result is only an upper bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from gmpy2 import mpq

from .calculus import VectorField, derivation_DK, iterated_derivation
from .ncpoly import ONE, Polynomial, ZERO, abs_value, coeff

INFINITE = math.inf


@dataclass(frozen=True)
class SeminormParams:
    R: mpq
    k: int = 0

    def __post_init__(self):
        object.__setattr__(self, "R", mpq(coeff(self.R)))
        if not self.R > 0:
            raise ValueError("R must be positive")
        if self.k < 0:
            raise ValueError("k must be nonnegative")


@dataclass(frozen=True)
class SeminormValue:
    value: mpq
    exact: bool


def _falling(p, k):
    out = 1
    for i in range(k):
        out *= p - i
    return out


def seminorm_value(p, R, k=0) -> SeminormValue:
    """``|p|_{R,k}``; for vector fields the max over components."""
    R = mpq(coeff(R))
    if R <= 0 or k < 0:
        raise ValueError("need R > 0 and k >= 0")
    if isinstance(p, VectorField):
        vals = [seminorm_value(c, R, k) for c in p]
        return SeminormValue(max(v.value for v in vals), all(v.exact for v in vals))
    total, exact = ZERO, True
    for w, c in p.terms.items():
        d = len(w)
        if d < k:
            continue
        a, ok = abs_value(c)
        exact = exact and ok
        total += a * R ** (d - k) * _falling(d, k)
    return SeminormValue(total, exact)


def seminorm(p, R, k=0, upper_bound=False) -> mpq:
    """Exact ``|p|_{R,k}``.

    Raises ``ValueError`` if a coefficient has irrational modulus, unless
    ``upper_bound`` is set, in which case ``|re| + |im|`` is used for it.
    """
    v = seminorm_value(p, R, k)
    if not v.exact and not upper_bound:
        raise ValueError("irrational coefficient modulus; pass upper_bound=True")
    return v.value


# ---------------------------------------------------------------------------
# majorants
# ---------------------------------------------------------------------------

def majorant(p):
    """Coefficientwise absolute values (``|re| + |im|`` when irrational)."""
    if isinstance(p, VectorField):
        return VectorField(majorant(c) for c in p)
    return Polynomial._raw(p.n, {w: abs_value(c)[0] for w, c in p.terms.items()})


def _nonneg(p):
    return all(not getattr(c, "im", 0) and c >= 0 for c in p.terms.values())


def coeff_leq(p, q, upto=None) -> bool:
    """``p <= q`` coefficientwise (both real); optionally only degrees <= ``upto``."""
    if isinstance(p, VectorField):
        return all(coeff_leq(a, b, upto) for a, b in zip(p, q))
    if p.n != q.n:
        raise ValueError("generator counts differ")
    keys = set(p.terms) | set(q.terms)
    for w in keys:
        if upto is not None and len(w) > upto:
            continue
        if p.terms.get(w, ZERO) > q.terms.get(w, ZERO):
            return False
    return True


def coeff_max(p, q):
    """Coefficientwise maximum of two majorants."""
    if not (_nonneg(p) and _nonneg(q)):
        raise ValueError("coeff_max expects majorants")
    out = dict(p.terms)
    for w, c in q.terms.items():
        if c > out.get(w, ZERO):
            out[w] = c
    return Polynomial._raw(p.n, out)


def phi_n(p: Polynomial) -> Polynomial:
    """Collapse onto ``X_1``: the mass of degree ``d`` goes to ``X_1^d``."""
    out = {}
    for w, c in p.terms.items():
        key = (1,) * len(w)
        out[key] = out.get(key, ZERO) + abs_value(c)[0]
    return Polynomial._clean(1, out)


def psi_n(k: VectorField) -> Polynomial:
    out = Polynomial.zero(1)
    for c in k:
        out = coeff_max(out, phi_n(c))
    return out


def one_var_derivative(p: Polynomial, order=1) -> Polynomial:
    """Ordinary ``d/dX`` on C<1>."""
    if p.n != 1:
        raise ValueError("one-variable polynomial expected")
    out = {}
    for w, c in p.terms.items():
        d = len(w)
        if d >= order:
            out[(1,) * (d - order)] = c * _falling(d, order)
    return Polynomial._clean(1, out)


def evaluate_one_var(p: Polynomial, x):
    x = mpq(coeff(x))
    return sum((c * x ** len(w) for w, c in p.terms.items()), ZERO)


def one_var_field(p: Polynomial) -> VectorField:
    return VectorField([p])


# ---------------------------------------------------------------------------
# analytic-vector estimate
# ---------------------------------------------------------------------------

def double_factorial_odd(m):
    """``1*3*5*...*(2m-1)``; the empty product for ``m = 0``."""
    out = 1
    for i in range(1, 2 * m, 2):
        out *= i
    return out


def _check_radii(R, Rp):
    R, Rp = mpq(coeff(R)), mpq(coeff(Rp))
    if not (0 < R < Rp):
        raise ValueError("need 0 < R < Rp")
    return R, Rp


def thm27_bound(m, R, Rp, normK, normP) -> mpq:
    R, Rp = _check_radii(R, Rp)
    return (double_factorial_odd(m) * Rp ** (m + 1) / (Rp - R) ** (2 * m + 1)
            * mpq(coeff(normK)) ** m * mpq(coeff(normP)))


def analytic_radius(R, Rp, normK):
    """``(Rp - R)^2 / (2 Rp |K|)``, or :data:`INFINITE` when ``|K| = 0``."""
    R, Rp = _check_radii(R, Rp)
    normK = mpq(coeff(normK))
    if normK < 0:
        raise ValueError("norm must be nonnegative")
    if normK == 0:
        return INFINITE
    return (Rp - R) ** 2 / (2 * Rp * normK)


@dataclass(frozen=True)
class Thm27Check:
    m: int
    lhs: mpq
    bound: mpq

    @property
    def holds(self):
        return self.lhs <= self.bound


def thm27_checks(K: VectorField, P: Polynomial, max_m, R=1, Rp=2):
    """``|D_K^m P|_{R,0}`` against the bound, for ``m = 0..max_m``."""
    N = seminorm(K, Rp, upper_bound=True)
    M = seminorm(P, Rp, upper_bound=True)
    out = []
    cur = P
    for m in range(max_m + 1):
        if m:
            cur = derivation_DK(K, cur)
        out.append(Thm27Check(m, seminorm(cur, R, upper_bound=True),
                              thm27_bound(m, R, Rp, N, M)))
    return out


def analytic_partial_sums(K, P, R, r, terms):
    """Partial sums of ``sum_m |D_K^m P|_{R,0} r^m / m!``."""
    r = mpq(coeff(r))
    sums, total, cur = [], ZERO, P
    for m in range(terms):
        if m:
            cur = derivation_DK(K, cur)
        total += seminorm(cur, R, upper_bound=True) * r ** m / math.factorial(m)
        sums.append(total)
    return sums


# ---------------------------------------------------------------------------
# one-variable truncated series
# ---------------------------------------------------------------------------

def series_mul(a, b, d):
    out = [ZERO] * (d + 1)
    for i, x in enumerate(a[: d + 1]):
        if x:
            for j, y in enumerate(b[: d + 1 - i]):
                out[i + j] += x * y
    return out


def series_derivative(a):
    return [a[p] * p for p in range(1, len(a))]


def series_pow(a, e, d):
    out = [ONE] + [ZERO] * d
    for _ in range(e):
        out = series_mul(out, a, d)
    return out


def geometric_series(alpha, e, d):
    """Coefficients of ``(1 - alpha X)^(-e)`` up to ``X^d``."""
    alpha = mpq(coeff(alpha))
    return [math.comb(e + p - 1, p) * alpha ** p for p in range(d + 1)]


def series_from_poly(p: Polynomial, d):
    out = [ZERO] * (d + 1)
    for w, c in p.terms.items():
        if len(w) <= d:
            out[len(w)] = c
    return out


def lambda_power_identity_check(m, Rp, d) -> bool:
    """Check ``D_L^m L = (2m-1)!! Rp^-m L^(2m+1)`` for ``L = (1 - X/Rp)^-1``.

    One-variable ``D_L f = L f'``; with ``L`` cut at degree ``d`` the iterate is
    correct through degree ``d - m``, which is where the comparison stops.
    """
    Rp = mpq(coeff(Rp))
    if m < 0 or d < m:
        raise ValueError("need 0 <= m <= d")
    lam = geometric_series(1 / Rp, 1, d)
    cur = list(lam)
    for _ in range(m):
        cur = series_mul(lam, series_derivative(cur) + [ZERO], d)
    rhs = [double_factorial_odd(m) * Rp ** (-m) * c for c in series_pow(lam, 2 * m + 1, d)]
    return cur[: d - m + 1] == rhs[: d - m + 1]


# ---------------------------------------------------------------------------
# bracket estimates
# ---------------------------------------------------------------------------

def prop64_bound(m, bigM, R, Rp) -> mpq:
    """``M^(m+1) 2^m m! (1 - R/Rp)^(-(2m+1))``."""
    R, Rp = _check_radii(R, Rp)
    return mpq(coeff(bigM)) ** (m + 1) * 2 ** m * math.factorial(m) / (1 - R / Rp) ** (2 * m + 1)


def best_constant(psi: Polynomial, alpha, e):
    """Least ``C`` with ``psi <= C (1 - alpha X)^(-e)`` coefficientwise."""
    d = max(psi.degree, 0)
    g = geometric_series(alpha, e, int(d))
    best = ZERO
    for w, c in psi.terms.items():
        best = max(best, c / g[len(w)])
    return best


@dataclass(frozen=True)
class Lemma63Check:
    C1: mpq
    C2: mpq
    corrected: bool
    uncorrected: bool


def lemma63_check(H: VectorField, K: VectorField, alpha, e, f, bracket) -> Lemma63Check:
    """Compare ``Psi([H,K])`` with the ``(1 - alpha X)^(-e-f-1)`` majorants.

    The constants ``C1, C2`` are the least admissible ones, so both
    hypotheses hold with equality somewhere.  ``corrected`` carries the
    chain-rule factor ``alpha``; ``uncorrected`` omits it.  Inputs are
    polynomials, so comparing through the degree of ``[H,K]`` is exhaustive.
    """
    alpha = mpq(coeff(alpha))
    C1 = best_constant(psi_n(H), alpha, e)
    C2 = best_constant(psi_n(K), alpha, f)
    lhs = psi_n(bracket(H, K))
    d = int(max(lhs.degree, 0))
    g = geometric_series(alpha, e + f + 1, d)
    s = series_from_poly(lhs, d)
    base = C1 * C2 * (e + f)
    corrected = all(s[p] <= base * alpha * g[p] for p in range(d + 1))
    uncorrected = all(s[p] <= base * g[p] for p in range(d + 1))
    return Lemma63Check(C1, C2, corrected, uncorrected)


def lemma26_claims(K: VectorField, Kp: VectorField, P: Polynomial, Pp: Polynomial):
    """The four majorization claims; ``Kp, Pp`` must dominate ``K, P``.

    Returns a dict of booleans.
    """
    aK, aKp, aP, aPp = majorant(K), majorant(Kp), majorant(P), majorant(Pp)
    if not (coeff_leq(aK, aKp) and coeff_leq(aP, aPp)):
        raise ValueError("Kp, Pp must dominate K, P")
    dom = derivation_DK(aK, aP)
    psi = one_var_field(psi_n(K))
    return {
        "D_K P <= D_|K| |P|": coeff_leq(majorant(derivation_DK(K, P)), dom),
        "monotone D": coeff_leq(dom, derivation_DK(aKp, aPp)),
        "monotone Phi, Psi": coeff_leq(phi_n(P), phi_n(Pp)) and coeff_leq(psi_n(K), psi_n(Kp)),
        "Phi(D_|K||P|) <= D_Psi(K) Phi(P)": coeff_leq(phi_n(dom), derivation_DK(psi, phi_n(P))),
    }


def psi_seminorm_relation(K: VectorField, R, k) -> bool:
    """``|K|_{R,k} <= (d/dX)^k Psi(K) (R)``.

    Equality at ``k = 0`` needs the components' degree profiles to be nested;
    ``K = (X1, X2^2)`` gives ``max(R, R^2) < R + R^2``.
    """
    lhs = seminorm(K, R, k, upper_bound=True)
    rhs = evaluate_one_var(one_var_derivative(psi_n(K), k), R)
    return lhs <= rhs


__all__ = [
    "SeminormParams", "SeminormValue", "seminorm", "seminorm_value", "majorant",
    "coeff_leq", "coeff_max", "phi_n", "psi_n", "iterated_derivation",
    "thm27_bound", "analytic_radius", "thm27_checks", "analytic_partial_sums",
    "lambda_power_identity_check", "prop64_bound", "lemma63_check", "lemma26_claims",
    "geometric_series", "best_constant", "psi_seminorm_relation", "INFINITE",
    "double_factorial_odd", "one_var_derivative", "evaluate_one_var",
]
