"""
The full Fock space over C^n, truncated at a maximal tensor degree.

A :class:`FockVector` is a finite sum ``sum c_w e_w`` where ``e_w`` is the
tensor ``e_{w_1} (x) ... (x) e_{w_k}`` and ``e_()`` is the vacuum.  Creation
operators that would push mass above the cap drop it and set ``overflow``;
identity checks must only be read on vectors where the flag is clear.
"""

from __future__ import annotations

from ..ncpoly import GeneratorMismatch, ONE, Polynomial, ZERO, conj, words, words_upto


class TruncationError(ValueError):
    pass


class FockVector:
    __slots__ = ("n", "d", "terms", "overflow")

    def __init__(self, n, d, terms=None, overflow=False):
        self.n = n
        self.d = d
        clean = {}
        for w, c in (terms or {}).items():
            w = tuple(w)
            if len(w) > d:
                raise TruncationError(f"word {w} exceeds truncation degree {d}")
            if c:
                clean[w] = c
        self.terms = clean
        self.overflow = overflow

    @classmethod
    def _raw(cls, n, d, terms, overflow=False):
        v = cls.__new__(cls)
        v.n, v.d, v.terms, v.overflow = n, d, terms, overflow
        return v

    @classmethod
    def vacuum(cls, n, d):
        return cls._raw(n, d, {(): ONE})

    @classmethod
    def zero(cls, n, d):
        return cls._raw(n, d, {})

    @classmethod
    def basis(cls, word, n, d):
        return cls(n, d, {tuple(word): ONE})

    def _check(self, other):
        if (self.n, self.d) != (other.n, other.d):
            raise GeneratorMismatch("Fock vectors over different (n, d)")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w, ZERO) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return FockVector._raw(self.n, self.d, out, self.overflow or other.overflow)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if not c:
            return FockVector._raw(self.n, self.d, {}, self.overflow)
        return FockVector._raw(self.n, self.d, {w: x * c for w, x in self.terms.items()},
                               self.overflow)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return (self.n, self.d, self.terms) == (other.n, other.d, other.terms)

    def __hash__(self):
        return hash((self.n, self.d, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def inner(self, other):
        """``<self, other>``, linear in the first slot."""
        self._check(other)
        small, big = (self.terms, other.terms) if len(self.terms) < len(other.terms) else (other.terms, self.terms)
        total = ZERO
        for w in small:
            if w in big:
                total = total + self.terms[w] * conj(other.terms[w])
        return total

    def grade(self, k):
        return FockVector._raw(self.n, self.d, {w: c for w, c in self.terms.items() if len(w) == k},
                               self.overflow)

    def reverse(self):
        """The antiunitary ``J``: reverse every tensor, conjugate coefficients."""
        return FockVector._raw(self.n, self.d, {w[::-1]: conj(c) for w, c in self.terms.items()},
                               self.overflow)

    def with_degree(self, d):
        return FockVector(self.n, d, self.terms, self.overflow)

    def __repr__(self):
        body = " + ".join(f"{c}*e{list(w)}" for w, c in sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0])))
        flag = ", overflow" if self.overflow else ""
        return f"FockVector(n={self.n}, d={self.d}: {body or '0'}{flag})"


def _emit(v, out, overflow, w, c):
    if len(w) > v.d:
        return True
    x = out.get(w, ZERO) + c
    if x:
        out[w] = x
    else:
        out.pop(w, None)
    return overflow


def _map(v, fn):
    out = {}
    overflow = v.overflow
    for w, c in v.terms.items():
        for w2, a in fn(w):
            overflow = _emit(v, out, overflow, w2, c * a)
    return FockVector._raw(v.n, v.d, out, overflow)


def _check_j(v, j):
    if not 1 <= j <= v.n:
        raise IndexError(f"generator index {j} out of range 1..{v.n}")


def apply_creation(j, v):
    """``l_j xi = e_j (x) xi``."""
    _check_j(v, j)
    return _map(v, lambda w: [((j,) + w, ONE)])


def apply_annihilation(j, v):
    _check_j(v, j)
    return _map(v, lambda w: [(w[1:], ONE)] if w and w[0] == j else [])


def apply_right_creation(j, v):
    """``r_j xi = xi (x) e_j``."""
    _check_j(v, j)
    return _map(v, lambda w: [(w + (j,), ONE)])


def apply_right_annihilation(j, v):
    _check_j(v, j)
    return _map(v, lambda w: [(w[:-1], ONE)] if w and w[-1] == j else [])


def apply_s(j, v):
    """``s_j = l_j + l_j*``."""
    return apply_creation(j, v) + apply_annihilation(j, v)


def apply_d(j, v):
    """``d_j = r_j + r_j*``."""
    return apply_right_creation(j, v) + apply_right_annihilation(j, v)


def apply_T(j, v):
    """``T_j = l_j - r_j``."""
    return apply_creation(j, v) - apply_right_creation(j, v)


def apply_T_adjoint(j, v):
    return apply_annihilation(j, v) - apply_right_annihilation(j, v)


def apply_rotation(v):
    """``R e_{i_1..i_k} = e_{i_k i_1 .. i_{k-1}}``; ``R 1 = 0``."""
    return _map(v, lambda w: [(w[-1:] + w[:-1], ONE)] if w else [])


def apply_rotation_adjoint(v):
    return _map(v, lambda w: [(w[1:] + w[:1], ONE)] if w else [])


def apply_number(v):
    return _map(v, lambda w: [(w, ONE * len(w))])


def apply_vacuum_projection(v):
    return _map(v, lambda w: [(w, ONE)] if not w else [])


def apply_cyclic_symmetrization(v):
    """Sum of all ``len(w)`` rotations of each tensor; ``C 1 = 0``."""
    return _map(v, lambda w: [(w[r:] + w[:r], ONE) for r in range(len(w))])


class FockOperator:
    """A named linear map on the truncated Fock space."""

    def __init__(self, n, d, action, name="A"):
        self.n, self.d, self.action, self.name = n, d, action, name

    def __call__(self, v: FockVector) -> FockVector:
        if (v.n, v.d) != (self.n, self.d):
            raise GeneratorMismatch("operator and vector over different (n, d)")
        return self.action(v)

    def __matmul__(self, other):
        return FockOperator(self.n, self.d, lambda v: self(other(v)), f"{self.name}{other.name}")

    def __add__(self, other):
        return FockOperator(self.n, self.d, lambda v: self(v) + other(v), f"({self.name}+{other.name})")

    def __sub__(self, other):
        return FockOperator(self.n, self.d, lambda v: self(v) - other(v), f"({self.name}-{other.name})")

    def scale(self, c):
        return FockOperator(self.n, self.d, lambda v: self(v).scale(c), f"{c}{self.name}")

    def matrix(self, grade=None):
        """Columns ``{w: image}`` over basis tensors (one grade, or all up to ``d``)."""
        ws = words(self.n, grade) if grade is not None else words_upto(self.n, self.d)
        return {w: self(FockVector.basis(w, self.n, self.d)) for w in ws}

    def __repr__(self):
        return f"FockOperator({self.name}, n={self.n}, d={self.d})"


def operators(n, d):
    """The standard operators as :class:`FockOperator` objects."""
    ops = {
        "I": FockOperator(n, d, lambda v: v, "I"),
        "R": FockOperator(n, d, apply_rotation, "R"),
        "R*": FockOperator(n, d, apply_rotation_adjoint, "R*"),
        "N": FockOperator(n, d, apply_number, "N"),
        "P": FockOperator(n, d, apply_vacuum_projection, "P"),
        "C": FockOperator(n, d, apply_cyclic_symmetrization, "C"),
    }
    for j in range(1, n + 1):
        ops[f"l{j}"] = FockOperator(n, d, lambda v, j=j: apply_creation(j, v), f"l{j}")
        ops[f"l{j}*"] = FockOperator(n, d, lambda v, j=j: apply_annihilation(j, v), f"l{j}*")
        ops[f"r{j}"] = FockOperator(n, d, lambda v, j=j: apply_right_creation(j, v), f"r{j}")
        ops[f"r{j}*"] = FockOperator(n, d, lambda v, j=j: apply_right_annihilation(j, v), f"r{j}*")
        ops[f"s{j}"] = FockOperator(n, d, lambda v, j=j: apply_s(j, v), f"s{j}")
        ops[f"T{j}"] = FockOperator(n, d, lambda v, j=j: apply_T(j, v), f"T{j}")
        ops[f"T{j}*"] = FockOperator(n, d, lambda v, j=j: apply_T_adjoint(j, v), f"T{j}*")
    return ops


def poly_to_fock(p: Polynomial, d: int | None = None) -> FockVector:
    """``p(s_1, ..., s_n) 1``; requires ``d >= deg p``."""
    n = p.n
    deg = max(int(p.degree), 0) if not p.is_zero() else 0
    d = deg if d is None else d
    if d < deg:
        raise TruncationError(f"truncation degree {d} below polynomial degree {deg}")
    cache = {(): FockVector.vacuum(n, d)}

    def value(w):
        if w not in cache:
            cache[w] = apply_s(w[0], value(w[1:]))
        return cache[w]

    out = FockVector.zero(n, d)
    for w, c in p.terms.items():
        out = out + value(w).scale(c)
    assert not out.overflow
    return out


def fock_to_poly(v: FockVector) -> Polynomial:
    """Inverse of :func:`poly_to_fock` (by triangular elimination on degree)."""
    n = v.n
    rem = FockVector._raw(n, v.d, dict(v.terms))
    out = {}
    while rem.terms:
        top = max(len(w) for w in rem.terms)
        for w, c in list(rem.terms.items()):
            if len(w) == top:
                out[w] = out.get(w, ZERO) + c
                rem = rem - poly_to_fock(Polynomial(n, {w: c}), v.d)
    return Polynomial(n, out)


def ell_word_on_vacuum(word, n, d) -> FockVector:
    """``l_{w_1} ... l_{w_k} 1 = e_w``."""
    return FockVector.basis(word, n, d)


def ell_poly_on_vacuum(p: Polynomial, d: int) -> FockVector:
    """A polynomial in the letters ``l_j`` applied to the vacuum."""
    return FockVector(p.n, d, dict(p.terms))


def field_to_fock(v, d):
    """Componentwise :func:`poly_to_fock` of a vector field."""
    return tuple(poly_to_fock(c, d) for c in v)


def tuple_vector(vs):
    """Sparse coordinates ``{(j, w): c}`` of an n-tuple of Fock vectors."""
    out = {}
    for j, v in enumerate(vs, start=1):
        for w, c in v.terms.items():
            out[(j, w)] = c
    return out


def tuple_inner(a, b):
    return sum((x.inner(y) for x, y in zip(a, b)), ZERO)


def tuple_reverse(a):
    return tuple(x.reverse() for x in a)
