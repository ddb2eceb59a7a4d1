"""
Trace-preserving vector fields for the semicircular trace, in the Fock model.

The key objects are ``F_I = ((l_j* - r_j*) e_I)_j`` for index tuples ``I``
of length ``k + 1``; they span the grade-``k`` piece ``X_k`` of the fields
orthogonal to every cyclic gradient.  The functions here build the families,
compare them with independently computed subspaces and return plain data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from gmpy2 import mpq

from .. import linalg
from ..calculus import (
    cyclic_derivative, free_difference_quotient, orthogonal_complement_of_gradients,
)
from ..ncpoly import (
    I as IMAG, ONE, Polynomial, ZERO, cyclic_rotate, lex_compare, necklace, necklaces,
    rotation_period, words, words_upto,
)
from .fock import (
    FockVector, apply_T, apply_T_adjoint,
    apply_rotation, apply_rotation_adjoint, apply_vacuum_projection, field_to_fock,
    poly_to_fock, tuple_inner, tuple_reverse, tuple_vector, apply_number,
    apply_cyclic_symmetrization,
)
from .moments import chebyshev_P, chebyshev_product, semicircular_trace


def right_rotate(word):
    """``(i_0, ..., i_k) -> (i_k, i_0, ..., i_{k-1})``, matching ``R``."""
    return cyclic_rotate(word, -1)


def runs(word):
    """Maximal constant runs as ``(letter, length)`` pairs."""
    out = []
    for a in word:
        if out and out[-1][0] == a:
            out[-1] = (a, out[-1][1] + 1)
        else:
            out.append((a, 1))
    return out


# ---------------------------------------------------------------------------
# F_I
# ---------------------------------------------------------------------------

def F_fock(I, n, d=None):
    """``((l_j* - r_j*) e_I)_j`` as an n-tuple of Fock vectors."""
    I = tuple(I)
    if not I:
        raise ValueError("I must be nonempty")
    d = len(I) if d is None else d
    e = FockVector.basis(I, n, d)
    return tuple(apply_T_adjoint(j, e) for j in range(1, n + 1))


def F_polynomial(I, n):
    """The Chebyshev-product form of ``F_I`` as a vector field in ``C<n>``."""
    from ..calculus import VectorField

    rs = runs(tuple(I))
    letters = [a for a, _ in rs]
    ks = [k for _, k in rs]
    comps = []
    for j in range(1, n + 1):
        c = Polynomial.zero(n)
        if letters[0] == j:
            c = c + chebyshev_product([ks[0] - 1] + ks[1:], letters, n)
        if letters[-1] == j:
            c = c - chebyshev_product(ks[:-1] + [ks[-1] - 1], letters, n)
        comps.append(c)
    return VectorField(comps)


def F_routes_agree(I, n) -> bool:
    d = len(I)
    return F_fock(I, n, d) == field_to_fock(F_polynomial(I, n), d)


def trace_preserving_fock_basis(k, n):
    """The spanning family ``{F_I : |I| = k + 1}`` of ``X_k``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return [F_fock(I, n, k + 1) for I in words(n, k + 1)]


def gradient_image_grade(k, n):
    """``(delta^l w) 1`` for all words ``w`` of length ``k + 1`` (grade ``k``)."""
    out = []
    for w in words(n, k + 1):
        p = Polynomial(n, {w: ONE})
        out.append(tuple(FockVector(n, k + 1, dict(cyclic_derivative(p, j).terms))
                         for j in range(1, n + 1)))
    return out


def _vecs(family):
    return [tuple_vector(t) for t in family]


@dataclass(frozen=True)
class Thm75Report:
    k: int
    n: int
    dim_X: int
    dim_gradients: int
    total: int
    orthogonal: bool
    orbit_formula: int

    @property
    def ok(self):
        return (self.orthogonal and self.dim_X + self.dim_gradients == self.total
                and self.dim_X == self.orbit_formula)


def thm75_check(k, n) -> Thm75Report:
    fam = trace_preserving_fock_basis(k, n)
    grads = gradient_image_grade(k, n)
    orth = all(not tuple_inner(f, g) for f in fam for g in grads)
    return Thm75Report(
        k, n, linalg.rank(_vecs(fam)), linalg.rank(_vecs(grads)), n * n ** k, orth,
        n ** (k + 1) - len(necklaces(n, k + 1)),
    )


# ---------------------------------------------------------------------------
# operator identities
# ---------------------------------------------------------------------------

def lemma77_check(n, d) -> bool:
    """``sum_j T_j T_j* = 2I - 2P - (R + R*)`` on every grade ``<= d``."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    for w in words_upto(n, d):
        e = FockVector.basis(w, n, d)
        lhs = FockVector.zero(n, d)
        for j in range(1, n + 1):
            lhs = lhs + apply_T(j, apply_T_adjoint(j, e))
        rhs = e.scale(2) - apply_vacuum_projection(e).scale(2) - apply_rotation(e) - apply_rotation_adjoint(e)
        if lhs.overflow or lhs != rhs:
            return False
    return True


def _kernel_on_grade(fn, n, g):
    images = {}
    for w in words(n, g):
        out = fn(FockVector.basis(w, n, g + 1))
        images[w] = out if isinstance(out, dict) else dict(out.terms)
    return linalg.kernel(images)


def theta_star_kernel_check(n, g) -> bool:
    """``Ker (theta^l)* = Ker (I - P - R)`` on grade ``g``."""
    k1 = _kernel_on_grade(lambda e: tuple_vector(tuple(apply_T_adjoint(j, e) for j in range(1, n + 1))), n, g)
    k2 = _kernel_on_grade(lambda e: e - apply_vacuum_projection(e) - apply_rotation(e), n, g)
    return linalg.same_span(k1, k2)


def remark78_check(n, g) -> bool:
    """``Ker (I - R) = Ker (N - C)`` on grade ``g >= 1``."""
    if g < 1:
        raise ValueError("grade must be positive")
    k1 = _kernel_on_grade(lambda e: e - apply_rotation(e), n, g)
    k2 = _kernel_on_grade(lambda e: apply_number(e) - apply_cyclic_symmetrization(e), n, g)
    return linalg.same_span(k1, k2)


def cyclic_sum_in_kernel(I, n) -> bool:
    """``sum_r F_{R^r I} = 0``: cyclically invariant tensors die under ``(theta^l)*``."""
    I = tuple(I)
    total = [FockVector.zero(n, len(I)) for _ in range(n)]
    w = I
    for _ in range(len(I)):
        total = [a + b for a, b in zip(total, F_fock(w, n))]
        w = right_rotate(w)
    return all(t.is_zero() for t in total)


# ---------------------------------------------------------------------------
# gradients of Chebyshev products on the vacuum
# ---------------------------------------------------------------------------

def _check_alternating(ks, idx):
    if len(ks) != len(idx) or not ks:
        raise ValueError("need equally many degrees and indices")
    if any(k <= 0 for k in ks):
        raise ValueError("all degrees must be positive")
    if any(a == b for a, b in zip(idx, idx[1:])):
        raise ValueError("consecutive indices must differ")


def _ell_word(ks, idx):
    return tuple(i for k, i in zip(ks, idx) for _ in range(k))


def prop72_sides(ks, idx, n, j, variant="partial"):
    """Both sides for one ``j``; Fock tensors are dicts keyed by word pairs."""
    _check_alternating(ks, idx)
    P = chebyshev_product(ks, idx, n)
    lw = Polynomial(n, {_ell_word(ks, idx): ONE})
    d = sum(ks)
    if variant == "partial":
        lhs = {}
        for (u, v), c in free_difference_quotient(P, j).terms.items():
            a, b = poly_to_fock(Polynomial(n, {u: ONE}), d), poly_to_fock(Polynomial(n, {v: ONE}), d)
            for x, cx in a.terms.items():
                for y, cy in b.terms.items():
                    lhs[(x, y)] = lhs.get((x, y), ZERO) + c * cx * cy
        lhs = {k: v for k, v in lhs.items() if v}
        rhs = dict(free_difference_quotient(lw, j).terms)
        return lhs, rhs
    if variant == "cyclic":
        return dict(poly_to_fock(cyclic_derivative(P, j), d).terms), dict(cyclic_derivative(lw, j).terms)
    raise ValueError(f"unknown variant {variant!r}")


def prop72_check(ks, idx, n=None, variant="partial", enforce=True) -> bool:
    """Compare the ``s``- and ``l``-routes for every ``j``.

    ``variant="cyclic"`` additionally requires ``i_1 != i_p`` when ``p > 1``
    (raised unless ``enforce`` is false).
    """
    n = max(idx) if n is None else n
    if variant == "cyclic" and enforce and len(idx) > 1 and idx[0] == idx[-1]:
        raise ValueError("cyclic variant needs i_1 != i_p")
    return all(a == b for a, b in (prop72_sides(ks, idx, n, j, variant) for j in range(1, n + 1)))


def alternating_index_data(n, total, cyclic=True):
    """All ``(ks, idx)`` with positive ``ks`` summing to ``total`` and
    alternating indices (cyclically alternating when ``cyclic``)."""
    out = []

    def comps(t):
        if t == 0:
            yield []
            return
        for first in range(1, t + 1):
            for rest in comps(t - first):
                yield [first] + rest

    for ks in comps(total):
        p = len(ks)
        for idx in words(n, p):
            if any(a == b for a, b in zip(idx, idx[1:])):
                continue
            if cyclic and p > 1 and idx[0] == idx[-1]:
                continue
            out.append((tuple(ks), idx))
    return out


def lemma73_check(n, d) -> bool:
    """``span(F_{<=d}) + Ker delta_{<=d}`` is everything of degree ``<= d``."""
    vecs = [{(): ONE}]
    for m in range(1, d + 1):
        for ks, idx in alternating_index_data(n, m):
            vecs.append(dict(chebyshev_product(ks, idx, n).terms))
        images = {}
        for w in words(n, m):
            img = {}
            for j in range(1, n + 1):
                for u, c in cyclic_derivative(Polynomial(n, {w: ONE}), j).terms.items():
                    img[(j, u)] = c
            images[w] = img
        vecs.extend(linalg.kernel(images))
    return linalg.rank(vecs) == sum(n ** m for m in range(d + 1))


def thm74_check(n, d) -> bool:
    """Gradient images of ``C<s>`` and ``C<l>`` on the vacuum agree in ``(T_{<=d})^n``."""
    s_side, l_side = [], []
    for w in words_upto(n, d + 1):
        p = Polynomial(n, {w: ONE})
        grads = [cyclic_derivative(p, j) for j in range(1, n + 1)]
        s_side.append(tuple_vector(tuple(poly_to_fock(g, d) for g in grads)))
        l_side.append(tuple_vector(tuple(FockVector(n, d, dict(g.terms)) for g in grads)))
    return linalg.same_span(s_side, l_side)


# ---------------------------------------------------------------------------
# bases
# ---------------------------------------------------------------------------

def printed_omega_set(k, n):
    """Tuples of length ``k + 1`` strictly below their right rotation."""
    return [I for I in words(n, k + 1) if lex_compare(I, right_rotate(I)) < 0]


def omega_set(k, n):
    """Tuples of length ``k + 1`` that are not the least rotation in their orbit."""
    return [I for I in words(n, k + 1) if necklace(I) != I]


def _difference(I, n):
    a, b = F_fock(I, n), F_fock(right_rotate(I), n)
    return tuple(x - y for x, y in zip(a, b))


def omega_basis(k, n, printed=False):
    """``F_I - F_{R I}`` over :func:`omega_set` (or the single-rotation index set)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    idx = printed_omega_set(k, n) if printed else omega_set(k, n)
    return [(I, _difference(I, n)) for I in idx]


def orbit_count_dimension(k, n):
    """``n^(k+1)`` minus the number of cyclic orbits, by direct enumeration."""
    seen, orbits = set(), 0
    for w in words(n, k + 1):
        if w in seen:
            continue
        orbits += 1
        r = w
        for _ in range(len(w)):
            seen.add(r)
            r = cyclic_rotate(r)
    return n ** (k + 1) - orbits


@dataclass(frozen=True)
class BasisReport:
    k: int
    n: int
    size: int
    rank: int
    target_rank: int
    spans: bool

    @property
    def is_basis(self):
        return self.spans and self.size == self.rank == self.target_rank


def basis_report(family_vectors, k, n, target=None) -> BasisReport:
    target = _vecs(trace_preserving_fock_basis(k, n)) if target is None else target
    r = linalg.rank(family_vectors)
    tr = linalg.rank(target)
    spans = r == tr and linalg.rank(list(family_vectors) + list(target)) == tr
    return BasisReport(k, n, len(family_vectors), r, tr, spans)


def omega_report(k, n, printed=False) -> BasisReport:
    return basis_report([tuple_vector(v) for _, v in omega_basis(k, n, printed)], k, n)


# -- roots of unity -----------------------------------------------------------

@lru_cache(maxsize=None)
def cyclotomic_polynomial(L):
    """Integer coefficients (low to high) of the ``L``-th cyclotomic polynomial."""
    num = [-1] + [0] * (L - 1) + [1]
    for dv in range(1, L):
        if L % dv == 0:
            num = _poly_div(num, list(cyclotomic_polynomial(dv)))
    return tuple(num)


def _poly_div(a, b):
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1] // b[-1]
        q[i] = c
        for j, x in enumerate(b):
            a[i + j] -= c * x
    assert not any(a[: len(b) - 1]), "inexact cyclotomic division"
    return q


@lru_cache(maxsize=None)
def _zeta_powers(L):
    """Power-basis coordinates of ``zeta_L^e`` for ``e = 0..L-1``."""
    phi = cyclotomic_polynomial(L)
    deg = len(phi) - 1
    out, cur = [], [mpq(1)] + [mpq(0)] * (deg - 1)
    for _ in range(L):
        out.append(tuple(cur))
        top = cur[-1]
        cur = [mpq(0)] + cur[:-1]
        if top:
            cur = [c - top * p for c, p in zip(cur, phi[:-1])]
    return out


@dataclass(frozen=True)
class RootElement:
    """``F(I, zeta) = sum_{j < m} zeta^j F_{I rotated left j}`` with
    ``zeta = exp(2 pi i a / m)``, ``m = per(I)``."""
    I: tuple
    m: int
    a: int

    def terms(self, n):
        """``[(j, F_{rot^j I})]``; the coefficient of term ``j`` is ``zeta^j``."""
        return [(j, F_fock(cyclic_rotate(self.I, j), n)) for j in range(self.m)]

    def gaussian_coefficients(self):
        """Exact ``zeta^j`` as Gaussian rationals when ``4 % m == 0``."""
        if 4 % self.m:
            return None
        unit = {0: ONE, 1: IMAG, 2: -ONE, 3: -IMAG}
        step = 4 // self.m * self.a
        return [unit[(step * j) % 4] for j in range(self.m)]


def root_set(k, n):
    """Necklace representatives of length ``k + 1`` with their periods."""
    return [(I, rotation_period(I)) for I in necklaces(n, k + 1)]


def printed_root_set(k, n):
    """Representatives strictly below every nontrivial rotation (Lyndon words)."""
    out = []
    for I in words(n, k + 1):
        if all(lex_compare(I, cyclic_rotate(I, j)) < 0 for j in range(1, k + 1)):
            out.append((I, rotation_period(I)))
    return out


def root_basis(k, n, printed=False):
    if k < 1:
        raise ValueError("k must be at least 1")
    reps = printed_root_set(k, n) if printed else root_set(k, n)
    return [RootElement(I, m, a) for I, m in reps for a in range(1, m)]


def _embed(elements, rational, n, L):
    """Q-coordinates of the Q(zeta_L)-multiples of every family member."""
    zp = _zeta_powers(L)
    deg = len(zp[0])
    out = []
    for el in elements:
        acc = {}
        step = L // el.m * el.a
        for j, F in el.terms(n):
            coords = zp[(step * j) % L]
            for key, c in tuple_vector(F).items():
                for t, z in enumerate(coords):
                    if z:
                        acc[(key, t)] = acc.get((key, t), ZERO) + c * z
        out.append({k2: v for k2, v in acc.items() if v})
    for vec in rational:
        out.append({(key, 0): c for key, c in vec.items()})
    # close under multiplication by zeta to get the Q-span of the K-span
    closed = []
    phi = cyclotomic_polynomial(L)
    for vec in out:
        cur = vec
        for _ in range(deg):
            closed.append(cur)
            cur = _times_zeta(cur, phi, deg)
    return closed, deg


def _times_zeta(vec, phi, deg):
    out = {}
    for (key, t), c in vec.items():
        if t + 1 < deg:
            out[(key, t + 1)] = out.get((key, t + 1), ZERO) + c
        else:
            for s in range(deg):
                if phi[s]:
                    out[(key, s)] = out.get((key, s), ZERO) - c * phi[s]
    return {k: v for k, v in out.items() if v}


def root_report(k, n, printed=False) -> BasisReport:
    """Exact rank check of the root family over ``Q(zeta_L)``."""
    els = root_basis(k, n, printed)
    target = _vecs(trace_preserving_fock_basis(k, n))
    L = 1
    for el in els:
        L = math.lcm(L, el.m)
    fam, deg = _embed(els, [], n, L)
    both, _ = _embed(els, target, n, L)
    r = linalg.rank(fam) // deg
    rboth = linalg.rank(both) // deg
    tr = linalg.rank(target)
    return BasisReport(k, n, len(els), r, tr, r == tr and rboth == tr)


# -- real form ---------------------------------------------------------------

def real_basis(k, n):
    """An R-basis of the selfadjoint part of ``X_k``.

    Starting from the omega basis ``G``, candidates are the hermitian parts
    ``G + G*`` and ``i (G - G*)`` (``*`` is the reversal ``J`` on Fock
    tensors); an R-independent subfamily is kept greedily.
    """
    cands = []
    for I, G in omega_basis(k, n):
        Gs = tuple_reverse(G)
        cands.append((I, "herm", tuple(a + b for a, b in zip(G, Gs))))
        cands.append((I, "antiherm", tuple((a - b).scale(IMAG) for a, b in zip(G, Gs))))
    cands = [c for c in cands if any(not x.is_zero() for x in c[2])]
    keep = linalg.independent_subset([linalg.realify(tuple_vector(c[2])) for c in cands])
    return [cands[i] for i in keep]


def is_selfadjoint_tuple(t) -> bool:
    return tuple_reverse(t) == t


@dataclass(frozen=True)
class RealReport:
    k: int
    n: int
    size: int
    real_rank: int
    complex_dim: int
    all_selfadjoint: bool
    spans: bool

    @property
    def is_basis(self):
        return (self.all_selfadjoint and self.spans and self.size == self.real_rank
                == self.complex_dim)


def real_report(k, n) -> RealReport:
    fam = real_basis(k, n)
    vecs = [tuple_vector(t) for _, _, t in fam]
    target = _vecs(trace_preserving_fock_basis(k, n))
    cdim = linalg.rank(target)
    spans = linalg.rank(target + vecs) == cdim
    return RealReport(k, n, len(fam), linalg.rank([linalg.realify(v) for v in vecs]), cdim,
                      all(is_selfadjoint_tuple(t) for _, _, t in fam), spans)


def F_star_identity(I, n) -> bool:
    """``J F_I = -F_{rev I}``."""
    a = tuple_reverse(F_fock(I, n))
    b = F_fock(tuple(I)[::-1], n)
    return all(x == -y for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# density at bounded degree
# ---------------------------------------------------------------------------

@dataclass
class DensityReport:
    n: int
    max_degree: int
    grades: list = field(default_factory=list)

    @property
    def ok(self):
        return all(g["equal"] for g in self.grades)


def thm712_density_check(max_degree, n) -> DensityReport:
    """Compare, for each ``k <= max_degree``, the polynomial fields of degree
    ``<= k`` orthogonal to all cyclic gradients (mapped into Fock space) with
    the span of the omega bases of grades ``1..k``."""
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    tau = semicircular_trace(n)
    rep = DensityReport(n, max_degree)
    for k in range(max_degree + 1):
        comp = orthogonal_complement_of_gradients(tau, k, n, filtered=True)
        poly_side = [tuple_vector(field_to_fock(v, k)) for v in comp]
        fock_side = []
        for g in range(1, k + 1):
            for _, t in omega_basis(g, n):
                fock_side.append(tuple_vector(tuple(x.with_degree(k) for x in t)))
        homog = orthogonal_complement_of_gradients(tau, k, n, filtered=False, check_positive=False)
        rep.grades.append({
            "k": k,
            "dim_polynomial": linalg.rank(poly_side),
            "dim_fock": linalg.rank(fock_side),
            "equal": linalg.same_span(poly_side, fock_side),
            "dim_homogeneous_degree_k": len(homog),
        })
    return rep


__all__ = [
    "F_fock", "F_polynomial", "F_routes_agree", "trace_preserving_fock_basis",
    "gradient_image_grade", "thm75_check", "lemma77_check", "theta_star_kernel_check",
    "remark78_check", "cyclic_sum_in_kernel", "prop72_check", "prop72_sides",
    "alternating_index_data", "lemma73_check", "thm74_check", "printed_omega_set",
    "omega_set", "omega_basis", "orbit_count_dimension", "basis_report", "omega_report",
    "cyclotomic_polynomial", "RootElement", "root_set", "printed_root_set", "root_basis",
    "root_report", "real_basis", "real_report", "F_star_identity", "thm712_density_check",
    "right_rotate", "runs", "chebyshev_P",
]
