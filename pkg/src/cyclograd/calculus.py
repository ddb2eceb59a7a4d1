"""
Free difference quotients, cyclic derivatives and derivations on C<n>.

Also holds the trace-generic machinery: trace functionals, the first-order
variation of ``tau(P)``, trace preservation of a vector field, and the space of
vector fields orthogonal to all cyclic gradients.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


from . import linalg
from .ncpoly import (
    GeneratorMismatch, ONE, Polynomial, TensorPoly, ZERO, coeff, gens,
    words, words_upto,
)


class VectorField:
    """An n-tuple of polynomials, identified with the derivation X_j -> K_j."""

    __slots__ = ("n", "components", "_hash")

    def __init__(self, components):
        comps = tuple(components)
        if not comps:
            raise ValueError("empty vector field")
        n = len(comps)
        for c in comps:
            if not isinstance(c, Polynomial):
                raise TypeError("components must be polynomials")
            if c.n != n:
                raise GeneratorMismatch(f"component over {c.n} generators in a field over {n}")
        self.n = n
        self.components = comps
        self._hash = None

    @classmethod
    def zero(cls, n):
        return cls(Polynomial.zero(n) for _ in range(n))

    @classmethod
    def identity(cls, n):
        """The Euler field (X_1, ..., X_n)."""
        return cls(gens(n))

    def __getitem__(self, j):
        return self.components[j]

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return self.n

    def __eq__(self, other):
        if not isinstance(other, VectorField):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.components)
        return self._hash

    def _check(self, other):
        if not isinstance(other, VectorField):
            raise TypeError("expected a VectorField")
        if other.n != self.n:
            raise GeneratorMismatch(f"generator counts differ: {self.n} vs {other.n}")

    def __add__(self, other):
        self._check(other)
        return VectorField(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        self._check(other)
        return VectorField(a - b for a, b in zip(self, other))

    def __neg__(self):
        return VectorField(-a for a in self)

    def scale(self, c):
        return VectorField(a.scale(c) for a in self)

    def __rmul__(self, c):
        try:
            return self.scale(coeff(c))
        except TypeError:
            return NotImplemented

    def star(self):
        return VectorField(a.star() for a in self)

    def is_selfadjoint(self):
        return all(a == a.star() for a in self)

    def is_zero(self):
        return all(a.is_zero() for a in self)

    @property
    def degree(self):
        return max(a.degree for a in self)

    def is_real(self):
        return all(a.is_real() for a in self)

    def __repr__(self):
        from .text import print_vector_field
        return f"VectorField({print_vector_field(self)!r})"

    def __str__(self):
        from .text import print_vector_field
        return print_vector_field(self)


class TraceFunctional:
    """A linear functional on C<n> given by its values on words.

    ``moment`` must be pure; it is memoised.  The trace property
    ``moment(uv) == moment(vu)`` is the caller's responsibility and is checked
    by the test suite for every trace shipped with the package.
    """

    def __init__(self, n, moment, name="trace"):
        self.n = n
        self.name = name
        self._moment = lru_cache(maxsize=None)(moment)

    def moment(self, word):
        return self._moment(tuple(word))

    def __call__(self, p: Polynomial):
        if p.n != self.n:
            raise GeneratorMismatch(f"trace over {self.n} generators applied to n={p.n}")
        total = ZERO
        for w, c in p.terms.items():
            m = self._moment(w)
            if m:
                total = total + c * m
        return total

    def __repr__(self):
        return f"TraceFunctional({self.n}, {self.name!r})"


def vacuum_trace(n):
    """The trace ``tau(w) = [w is empty]`` (constant term)."""
    return TraceFunctional(n, lambda w: ONE if not w else ZERO, name="vacuum")


# ---------------------------------------------------------------------------
# derivatives
# ---------------------------------------------------------------------------

def _check_index(j, n):
    if not (isinstance(j, int) and 1 <= j <= n):
        raise IndexError(f"generator index {j} out of range 1..{n}")


def free_difference_quotient(p: Polynomial, j: int) -> TensorPoly:
    """The derivation into C<n> (x) C<n> with X_j -> 1 (x) 1, X_k -> 0."""
    _check_index(j, p.n)
    out = {}
    for w, c in p.terms.items():
        for k, letter in enumerate(w):
            if letter == j:
                key = (w[:k], w[k + 1:])
                out[key] = out.get(key, ZERO) + c
    return TensorPoly._raw(p.n, out)


def mu_tilde(t: TensorPoly) -> Polynomial:
    """``a (x) b -> ba``."""
    out = {}
    for (u, v), c in t.terms.items():
        w = v + u
        out[w] = out.get(w, ZERO) + c
    return Polynomial._clean(t.n, out)


def cyclic_derivative(p: Polynomial, j: int) -> Polynomial:
    _check_index(j, p.n)
    out = {}
    for w, c in p.terms.items():
        for k, letter in enumerate(w):
            if letter == j:
                r = w[k + 1:] + w[:k]
                out[r] = out.get(r, ZERO) + c
    return Polynomial._clean(p.n, out)


def cyclic_gradient(p: Polynomial) -> VectorField:
    return VectorField(cyclic_derivative(p, j) for j in range(1, p.n + 1))


def theta(v: VectorField) -> Polynomial:
    """``sum_j [X_j, v_j]``."""
    out = {}
    for j, comp in enumerate(v.components, start=1):
        for w, c in comp.terms.items():
            a, b = (j,) + w, w + (j,)
            out[a] = out.get(a, ZERO) + c
            out[b] = out.get(b, ZERO) - c
    return Polynomial._clean(v.n, out)


def m_a(t: TensorPoly, a: Polynomial) -> Polynomial:
    """``P1 (x) P2 -> P1 a P2``."""
    if t.n != a.n:
        raise GeneratorMismatch("tensor and polynomial over different generator counts")
    out = {}
    for (u, v), c in t.terms.items():
        for w, x in a.terms.items():
            key = u + w + v
            out[key] = out.get(key, ZERO) + c * x
    return Polynomial._clean(t.n, out)


def derivation_DK(k: VectorField, p: Polynomial) -> Polynomial:
    """The derivation with ``X_j -> k_j`` applied to ``p``."""
    if k.n != p.n:
        raise GeneratorMismatch(f"field over {k.n} generators, polynomial over {p.n}")
    comps = [c.terms for c in k.components]
    out = {}
    get = out.get
    for w, a in p.terms.items():
        for i, letter in enumerate(w):
            kt = comps[letter - 1]
            if not kt:
                continue
            pre, suf = w[:i], w[i + 1:]
            for u, b in kt.items():
                key = pre + u + suf
                out[key] = get(key, ZERO) + a * b
    return Polynomial._clean(p.n, out)


def iterated_derivation(k: VectorField, p: Polynomial, m: int) -> Polynomial:
    if m < 0:
        raise ValueError("m must be nonnegative")
    for _ in range(m):
        p = derivation_DK(k, p)
    return p


# ---------------------------------------------------------------------------
# the exact sequence
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GradientDecision:
    is_gradient: bool
    witness: Polynomial | None = None
    failed_degree: int | None = None


def _gradient_images(n, degree):
    # tag: word of the given degree; image: sparse vector keyed by (j, word)
    images = {}
    for w in words(n, degree):
        img = {}
        for k, letter in enumerate(w):
            key = (letter, w[k + 1:] + w[:k])
            img[key] = img.get(key, ZERO) + ONE
        images[w] = {key: c for key, c in img.items() if c}
    return images


def field_vector(v: VectorField, degree=None):
    """Sparse coordinates ``{(j, word): coeff}`` of ``v`` (optionally one degree)."""
    out = {}
    for j, comp in enumerate(v.components, start=1):
        for w, c in comp.terms.items():
            if degree is None or len(w) == degree:
                out[(j, w)] = c
    return out


def is_cyclic_gradient(v: VectorField) -> GradientDecision:
    """Decide whether ``v`` lies in the image of the cyclic gradient.

    Works degree by degree: the homogeneous part of ``v`` of degree ``d - 1``
    must be the gradient of a homogeneous polynomial of degree ``d``.
    """
    n = v.n
    if v.is_zero():
        return GradientDecision(True, Polynomial.zero(n))
    witness = {}
    for d in range(1, v.degree + 2):
        target = field_vector(v, d - 1)
        if not target:
            continue
        basis = linalg.EchelonBasis(track=True)
        for w, img in _gradient_images(n, d).items():
            basis.add(img, w)
        sol = basis.solve(target)
        if sol is None:
            return GradientDecision(False, None, d - 1)
        witness.update(sol)
    return GradientDecision(True, Polynomial(n, witness))


# ---------------------------------------------------------------------------
# traces
# ---------------------------------------------------------------------------

def _dual(a0, a1, b0, b1):
    return a0 * b0, a0 * b1 + a1 * b0


def first_order_variation(p: Polynomial, k: VectorField) -> Polynomial:
    """Coefficient of ``eps`` in ``p(X + eps K)``, computed in C<n>[eps]/(eps^2)."""
    if k.n != p.n:
        raise GeneratorMismatch("field and polynomial over different generator counts")
    n = p.n
    xs = gens(n)
    cache = {(): (Polynomial.one(n), Polynomial.zero(n))}

    def value(w):
        if w not in cache:
            a0, a1 = value(w[:-1])
            j = w[-1] - 1
            cache[w] = _dual(a0, a1, xs[j], k.components[j])
        return cache[w]

    out = Polynomial.zero(n)
    for w, c in p.terms.items():
        out = out + value(w)[1].scale(c)
    return out


def gradient_pairing(tau: TraceFunctional, p: Polynomial, k: VectorField):
    """``sum_j tau(delta_j(p) k_j)``."""
    total = ZERO
    for j in range(1, p.n + 1):
        total = total + tau(cyclic_derivative(p, j) * k.components[j - 1])
    return total


def first_variation(tau: TraceFunctional, p: Polynomial, k: VectorField):
    """Return ``(lhs, rhs)``: ``tau`` of the first-order variation of ``p``
    along ``k``, and the pairing of the cyclic gradient of ``p`` with ``k``."""
    return tau(first_order_variation(p, k)), gradient_pairing(tau, p, k)


def is_trace_preserving(k: VectorField, tau: TraceFunctional, max_degree: int,
                        condition="derivation") -> bool:
    """Bounded-degree test of ``tau(D_K w) == 0`` for all words ``w``.

    ``condition="gradient"`` tests the equivalent pairing condition
    ``sum_j tau(delta_j(w) K_j) == 0`` instead.  Passing at degree ``d`` is
    necessary, not sufficient, for trace preservation.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    for w in words_upto(k.n, max_degree):
        q = Polynomial._raw(k.n, {w: ONE})
        if condition == "derivation":
            val = tau(derivation_DK(k, q))
        elif condition == "gradient":
            val = gradient_pairing(tau, q, k)
        else:
            raise ValueError(f"unknown condition {condition!r}")
        if val:
            return False
    return True


class DegenerateTraceError(ValueError):
    pass


def gram_is_positive_definite(tau: TraceFunctional, degree: int) -> bool:
    """Exact LDL* test of ``(tau(v* u))_{u,v}`` over words of length <= degree."""
    ws = list(words_upto(tau.n, degree))
    G = [[tau.moment(v[::-1] + u) for v in ws] for u in ws]
    size = len(ws)
    for i in range(size):
        piv = G[i][i]
        if getattr(piv, "im", 0) or not piv > 0:
            return False
        inv = 1 / piv
        for r in range(i + 1, size):
            f = G[r][i] * inv
            if f:
                row_i = G[i]
                row_r = G[r]
                for c in range(i + 1, size):
                    row_r[c] = row_r[c] - f * row_i[c]
    return True


def pairing_images(tau: TraceFunctional, field_words, test_degree):
    """Images of basis fields ``(j, u)`` under ``R -> sum_j tau(delta_j(R) v_j)``.

    ``field_words`` lists the coordinates ``(j, u)``; rows are all words ``R``
    of length at most ``test_degree``.
    """
    n = tau.n
    test = list(words_upto(n, test_degree))
    derivs = {}
    for R in test:
        for k, letter in enumerate(R):
            key = (letter, R[k + 1:] + R[:k])
            derivs.setdefault(R, {})
            derivs[R][key] = derivs[R].get(key, ZERO) + ONE
    images = {}
    for (j, u) in field_words:
        img = {}
        for R, dR in derivs.items():
            val = ZERO
            for (jj, r), c in dR.items():
                if jj == j:
                    m = tau.moment(r + u)
                    if m:
                        val = val + c * m
            if val:
                img[R] = val
        images[(j, u)] = img
    return images


def fields_from_kernel(n, kernel):
    out = []
    for vec in kernel:
        comps = [dict() for _ in range(n)]
        for (j, u), c in vec.items():
            comps[j - 1][u] = c
        out.append(VectorField(Polynomial(n, t) for t in comps))
    return out


def orthogonal_complement_of_gradients(tau: TraceFunctional, degree: int, n: int | None = None,
                                       filtered=False, check_positive=True):
    """Basis of the fields orthogonal to all cyclic gradients, at one degree.

    Fields are homogeneous of the given degree (or of degree at most
    ``degree`` when ``filtered``).  Orthogonality uses the bilinear pairing
    ``sum_j tau(a_j b_j)`` against ``delta P`` for every ``P`` of degree at
    most ``degree + 1``.
    """
    n = tau.n if n is None else n
    if n != tau.n:
        raise GeneratorMismatch("trace and requested generator count differ")
    if check_positive and not gram_is_positive_definite(tau, degree):
        raise DegenerateTraceError(f"{tau.name} is not positive definite up to degree {degree}")
    degs = range(degree + 1) if filtered else [degree]
    coords = [(j, u) for j in range(1, n + 1) for d in degs for u in words(n, d)]
    images = pairing_images(tau, coords, degree + 1)
    return fields_from_kernel(n, linalg.kernel(images))


def sesquilinear_pairing(tau, a: VectorField, b: VectorField):
    """``sum_j tau(a_j b_j*)``."""
    return sum((tau(x * y.star()) for x, y in zip(a, b)), ZERO)


__all__ = [
    "VectorField", "TraceFunctional", "vacuum_trace", "free_difference_quotient",
    "mu_tilde", "cyclic_derivative", "cyclic_gradient", "theta", "m_a",
    "derivation_DK", "iterated_derivation", "GradientDecision", "is_cyclic_gradient",
    "first_order_variation", "gradient_pairing", "first_variation",
    "is_trace_preserving", "orthogonal_complement_of_gradients", "DegenerateTraceError",
    "gram_is_positive_definite", "pairing_images", "field_vector",
    "ExactnessDimensions", "exactness_dimensions",
]


# ---------------------------------------------------------------------------
# dimensions in the exact sequence, one homogeneous degree at a time
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExactnessDimensions:
    n: int
    degree: int
    ker_delta: int
    ker_C: int
    constants_plus_commutators: int
    ker_theta: int
    image_delta: int

    @property
    def exact(self):
        return (self.ker_delta == self.ker_C == self.constants_plus_commutators
                and self.ker_theta == self.image_delta)


def exactness_dimensions(n: int, degree: int) -> ExactnessDimensions:
    """Ranks in ``C<n>_d -> (C<n>_{d-1})^n -> C<n>_d`` and around ``C``.

    ``ker_theta`` is taken on fields homogeneous of degree ``d - 1``.
    """
    d = degree
    ws = list(words(n, d))
    grad = _gradient_images(n, d)
    ker_delta = len(ws) - linalg.rank(grad.values())
    image_delta = len(ws) - ker_delta
    sym = {}
    for w in ws:
        img = {}
        for r in range(len(w)):
            key = w[r:] + w[:r]
            img[key] = img.get(key, ZERO) + ONE
        sym[w] = img
    ker_C = len(ws) - linalg.rank(sym.values())
    if d == 0:
        comm = 1
    else:
        vecs = []
        for j in range(1, n + 1):
            for u in words(n, d - 1):
                a, b = (j,) + u, u + (j,)
                if a != b:
                    vecs.append({a: ONE, b: -ONE})
        comm = linalg.rank(vecs)
    if d == 0:
        ker_theta = 0
    else:
        th = {}
        for j in range(1, n + 1):
            for u in words(n, d - 1):
                a, b = (j,) + u, u + (j,)
                th[(j, u)] = {} if a == b else {a: ONE, b: -ONE}
        ker_theta = len(th) - linalg.rank(th.values())
    return ExactnessDimensions(n, d, ker_delta, ker_C, comm, ker_theta, image_delta)


def cyclic_symmetrize_kernel_check(p: Polynomial) -> bool:
    """``C(C(p)) = k C(p)`` for ``p`` homogeneous of degree ``k >= 1``."""
    from .ncpoly import cyclic_symmetrize
    if not p.is_homogeneous() or p.is_zero() or p.degree < 1:
        raise ValueError("need a nonzero homogeneous polynomial of positive degree")
    c = cyclic_symmetrize(p)
    return cyclic_symmetrize(c) == c.scale(int(p.degree))
