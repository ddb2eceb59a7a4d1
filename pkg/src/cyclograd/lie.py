"""
The Lie algebra of polynomial vector fields on C<n>.

``[P, Q] = (D_P Q_j - D_Q P_j)_j`` so that ``D_[P,Q] = [D_P, D_Q]``.  The
grading puts fields homogeneous of degree ``k + 1`` in ``V_k``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg
from .calculus import (
    TraceFunctional, VectorField, derivation_DK, field_vector, fields_from_kernel,
    pairing_images,
)
from .ncpoly import I, GeneratorMismatch, Polynomial, commutator, gens, words


def vect_bracket(p: VectorField, q: VectorField) -> VectorField:
    if p.n != q.n:
        raise GeneratorMismatch(f"generator counts differ: {p.n} vs {q.n}")
    return VectorField(derivation_DK(p, qj) - derivation_DK(q, pj) for pj, qj in zip(p, q))


def ad(k: VectorField):
    return lambda v: vect_bracket(k, v)


def adjoint_chain(ks) -> VectorField:
    """``ad K_m ... ad K_1 K_0`` for ``ks = [K_0, K_1, ..., K_m]``."""
    ks = list(ks)
    if not ks:
        raise ValueError("empty chain")
    acc = ks[0]
    for k in ks[1:]:
        acc = vect_bracket(k, acc)
    return acc


def gl_unit(i: int, k: int, n: int) -> VectorField:
    """``E_ik``: the field with ``X_i -> X_k`` and ``X_j -> 0`` otherwise."""
    if not (1 <= i <= n and 1 <= k <= n):
        raise IndexError(f"gl unit indices must lie in 1..{n}")
    return VectorField(Polynomial.gen(k, n) if j == i else Polynomial.zero(n)
                       for j in range(1, n + 1))


def euler_field(n):
    return VectorField(gens(n))


def _gl_coords(v: VectorField):
    """Coordinates of a V_0 field in the basis ``E_ik``."""
    out = {}
    for i, comp in enumerate(v.components, start=1):
        for w, c in comp.terms.items():
            if len(w) != 1:
                raise ValueError("field is not in V_0")
            out[(i, w[0])] = c
    return out


def gl_structure_constants(n):
    """``{(a,b,c,d): {(i,k): coeff}}`` from expanding ``[E_ab, E_cd]``."""
    units = {(a, b): gl_unit(a, b, n) for a in range(1, n + 1) for b in range(1, n + 1)}
    return {(a, b, c, d): _gl_coords(vect_bracket(units[a, b], units[c, d]))
            for (a, b) in units for (c, d) in units}


def gl_relation(a, b, c, d, n, convention="derived") -> VectorField:
    """Right-hand side of the commutation relation for ``[E_ab, E_cd]``.

    ``"derived"``: ``d_da E_cb - d_bc E_ad`` (what the bracket produces).
    ``"printed"``: ``d_bc E_ad - d_da E_cb`` (opposite sign).
    """
    out = VectorField.zero(n)
    if d == a:
        out = out + gl_unit(c, b, n)
    if b == c:
        out = out - gl_unit(a, d, n)
    if convention == "derived":
        return out
    if convention == "printed":
        return -out
    raise ValueError(f"unknown convention {convention!r}")


def check_gl_relations(n, convention="derived") -> bool:
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            for c in range(1, n + 1):
                for d in range(1, n + 1):
                    lhs = vect_bracket(gl_unit(a, b, n), gl_unit(c, d, n))
                    if lhs != gl_relation(a, b, c, d, n, convention):
                        return False
    return True


def center_of_V0(n):
    """Basis of ``{v in V_0 : [v, E_ik] = 0 for all i, k}``."""
    basis = [(i, k) for i in range(1, n + 1) for k in range(1, n + 1)]
    units = {t: gl_unit(*t, n) for t in basis}
    images = {}
    for t in basis:
        img = {}
        for s in basis:
            for key, c in _gl_coords(vect_bracket(units[t], units[s])).items():
                img[(s, key)] = c
        images[t] = img
    out = []
    for combo in linalg.kernel(images):
        v = VectorField.zero(n)
        for t, c in combo.items():
            v = v + units[t].scale(c)
        out.append(v)
    return out


# ---------------------------------------------------------------------------
# grading
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GradedVectorField:
    field: VectorField
    pieces: dict = field(default_factory=dict)

    def component(self, k):
        return self.pieces.get(k, VectorField.zero(self.field.n))

    def grades(self):
        return sorted(self.pieces)

    def reconstruct(self):
        out = VectorField.zero(self.field.n)
        for v in self.pieces.values():
            out = out + v
        return out


def grade(v: VectorField) -> GradedVectorField:
    degs = set()
    for c in v:
        degs.update(len(w) for w in c.terms)
    pieces = {d - 1: VectorField(c.homogeneous_component(d) for c in v) for d in sorted(degs)}
    return GradedVectorField(v, pieces)


def homogeneous_grade(v: VectorField):
    """The ``k`` with ``v in V_k``, or ``None`` if ``v`` is zero or mixed."""
    g = grade(v)
    return g.grades()[0] if len(g.pieces) == 1 else None


def is_selfadjoint(v: VectorField) -> bool:
    return v.is_selfadjoint()


# ---------------------------------------------------------------------------
# inner derivations
# ---------------------------------------------------------------------------

def inner_field(p: Polynomial) -> VectorField:
    """``([P, X_j])_j``; its derivation is ``Q -> [P, Q]``."""
    return VectorField(commutator(p, x) for x in gens(p.n))


def inner_ideal_witness(p: Polynomial, v: VectorField) -> Polynomial:
    """``P'`` with ``[inner_field(P), v] = inner_field(P')``, namely ``-D_v P``."""
    return -derivation_DK(v, p)


def selfadjoint_inner_field(p: Polynomial) -> VectorField:
    """``(i [P, X_j])_j``, selfadjoint when ``P`` is."""
    return inner_field(p).scale(I)


# ---------------------------------------------------------------------------
# trace preserving fields
# ---------------------------------------------------------------------------

def trace_preserving_basis(tau: TraceFunctional, k: int, n: int | None = None,
                           test_degree: int | None = None):
    """Basis of ``V_k`` intersected with the fields preserving ``tau``.

    Pairs against ``delta R`` for every word ``R`` of length at most
    ``test_degree`` (default ``k + 2``, the only degree that can pair
    nontrivially with ``V_k`` when ``tau`` is graded).
    """
    n = tau.n if n is None else n
    if k < -1:
        raise ValueError("grades start at -1")
    test_degree = k + 2 if test_degree is None else test_degree
    coords = [(j, u) for j in range(1, n + 1) for u in words(n, k + 1)]
    images = pairing_images(tau, coords, test_degree)
    return fields_from_kernel(n, linalg.kernel(images))


def in_span(fields, v: VectorField) -> bool:
    return linalg.contains_span([field_vector(f) for f in fields], [field_vector(v)])


def span_dimension(fields) -> int:
    return linalg.rank(field_vector(f) for f in fields)


def selfadjoint_part(fields):
    """A real basis of the selfadjoint fields in the complex span of ``fields``.

    Assumes the span is closed under the involution.  Candidates are
    ``f + f*`` and ``i (f - f*)``; an R-independent subfamily is kept.
    """
    cands = []
    for f in fields:
        s = f.star()
        cands.extend([f + s, (f - s).scale(I)])
    cands = [c for c in cands if not c.is_zero()]
    keep = linalg.independent_subset([linalg.realify(field_vector(c)) for c in cands])
    return [cands[i] for i in keep]


def is_star_closed(fields) -> bool:
    return all(in_span(fields, f.star()) for f in fields)


__all__ = [
    "vect_bracket", "ad", "adjoint_chain", "gl_unit", "euler_field",
    "gl_structure_constants", "gl_relation", "check_gl_relations", "center_of_V0",
    "GradedVectorField", "grade", "homogeneous_grade", "is_selfadjoint",
    "inner_field", "inner_ideal_witness", "selfadjoint_inner_field",
    "trace_preserving_basis", "in_span", "span_dimension", "selfadjoint_part",
    "is_star_closed",
]
