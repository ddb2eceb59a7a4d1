"""
Exact noncommutative polynomials.

Elements of the free algebra C<X_1, ..., X_n> are stored as sparse maps from
words (tuples of 1-based generator indices) to exact Gaussian rational
coefficients.  Real coefficients are plain ``gmpy2.mpq`` values; a coefficient
with a nonzero imaginary part is a :class:`Scalar`.  Keeping the real case on
``mpq`` keeps the inner loops in C.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from types import MappingProxyType

from gmpy2 import mpq, mpz

ZERO = mpq(0)
ONE = mpq(1)
_MPQ = type(ZERO)
_MPZ = type(mpz(0))

#: degree of the zero polynomial
NEG_INF = -math.inf


class GeneratorMismatch(ValueError):
    """Raised when values over different generator counts are combined."""


class Scalar:
    """Gaussian rational ``re + im*i`` with ``im != 0``.

    Use :func:`gauss` to build coefficients; it returns an ``mpq`` whenever the
    imaginary part vanishes, so a ``Scalar`` is never equal to a real number.
    """

    __slots__ = ("re", "im")

    def __init__(self, re, im):
        self.re = mpq(re)
        self.im = mpq(im)
        if not self.im:
            raise ValueError("Scalar requires a nonzero imaginary part; use gauss()")

    def __add__(self, other):
        if isinstance(other, Scalar):
            return gauss(self.re + other.re, self.im + other.im)
        try:
            other = mpq(other)
        except TypeError:
            return NotImplemented
        return Scalar(self.re + other, self.im)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __sub__(self, other):
        if isinstance(other, Scalar):
            return gauss(self.re - other.re, self.im - other.im)
        try:
            other = mpq(other)
        except TypeError:
            return NotImplemented
        return Scalar(self.re - other, self.im)

    def __rsub__(self, other):
        try:
            other = mpq(other)
        except TypeError:
            return NotImplemented
        return Scalar(other - self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return gauss(self.re * other.re - self.im * other.im,
                         self.re * other.im + self.im * other.re)
        try:
            other = mpq(other)
        except TypeError:
            return NotImplemented
        return gauss(self.re * other, self.im * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Scalar):
            return self * other.conjugate() * (1 / abs_squared(other))
        try:
            other = mpq(other)
        except TypeError:
            return NotImplemented
        return Scalar(self.re / other, self.im / other)

    def __rtruediv__(self, other):
        try:
            other = mpq(other)
        except TypeError:
            return NotImplemented
        return self.conjugate() * (other / abs_squared(self))

    def conjugate(self):
        return Scalar(self.re, -self.im)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.re == other.re and self.im == other.im
        return False

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return True

    def __repr__(self):
        return f"Scalar({self.re}, {self.im})"

    def __reduce__(self):
        return (Scalar, (self.re, self.im))


I = Scalar(0, 1)


def gauss(re, im=0):
    """Return the exact coefficient ``re + im*i`` (an ``mpq`` when real)."""
    if im:
        return Scalar(re, im)
    return mpq(re)


def coeff(x):
    """Coerce ``x`` to a coefficient value or raise ``TypeError``."""
    if isinstance(x, Scalar):
        return x
    if isinstance(x, complex):
        return gauss(mpq(x.real), mpq(x.imag))
    if isinstance(x, (int, Fraction, _MPQ, _MPZ)):
        return mpq(x)
    if isinstance(x, str):
        return mpq(x)
    raise TypeError(f"cannot use {type(x).__name__} as a coefficient")


def conj(c):
    return c.conjugate() if isinstance(c, Scalar) else c


def re_part(c):
    return c.re if isinstance(c, Scalar) else c


def im_part(c):
    return c.im if isinstance(c, Scalar) else ZERO


def is_real(c) -> bool:
    return not isinstance(c, Scalar)


def abs_squared(c):
    if isinstance(c, Scalar):
        return c.re * c.re + c.im * c.im
    return c * c


def rational_sqrt(q):
    """Exact square root of a nonnegative rational, or ``None``."""
    q = mpq(q)
    if q < 0:
        return None
    num, den = int(q.numerator), int(q.denominator)
    a, b = math.isqrt(num), math.isqrt(den)
    if a * a == num and b * b == den:
        return mpq(a, b)
    return None


def abs_value(c):
    """Return ``(|c|, exact)``.

    ``|c|`` is exact for real coefficients and for Gaussian rationals whose
    modulus is rational; otherwise the upper bound ``|re| + |im|`` is returned
    with ``exact=False``.
    """
    if not isinstance(c, Scalar):
        return abs(c), True
    root = rational_sqrt(abs_squared(c))
    if root is not None:
        return root, True
    return abs(c.re) + abs(c.im), False


# ---------------------------------------------------------------------------
# words
# ---------------------------------------------------------------------------

def check_word(word, n):
    for letter in word:
        if not (isinstance(letter, int) and 1 <= letter <= n):
            raise ValueError(f"letter {letter!r} out of range 1..{n}")
    return tuple(word)


def words(n, length):
    """All words of the given length over ``n`` letters, in lexicographic order."""
    return itertools.product(range(1, n + 1), repeat=length)


def words_upto(n, degree):
    for k in range(degree + 1):
        yield from words(n, k)


def cyclic_rotate(word, steps=1):
    """Rotate left by ``steps``: ``(a, b, c)`` -> ``(b, c, a)`` for ``steps=1``."""
    if not word:
        return word
    s = steps % len(word)
    return word[s:] + word[:s]


def lex_compare(u, v) -> int:
    """-1, 0 or 1 according to the lexicographic order of ``u`` and ``v``."""
    return (u > v) - (u < v)


def cyclic_period(word) -> int:
    """Least ``m`` with ``word[s] == word[t]`` whenever ``s == t (mod m)``.

    Only ``m`` smaller than the length is tested; the length itself is returned
    when no smaller period exists.  ``m`` need not divide the length.
    """
    L = len(word)
    for m in range(1, L):
        if all(word[i] == word[i + m] for i in range(L - m)):
            return m
    return max(L, 1)


def rotation_period(word) -> int:
    """Size of the cyclic orbit of ``word`` (least ``m >= 1`` fixing it)."""
    L = len(word)
    for m in range(1, L + 1):
        if L % m == 0 and word[m:] + word[:m] == word:
            return m
    return 1


def necklace(word):
    """Lexicographically least rotation of ``word``."""
    if not word:
        return word
    return min(word[s:] + word[:s] for s in range(len(word)))


def necklaces(n, length):
    """Representatives of the cyclic orbits of words of the given length."""
    return sorted({necklace(w) for w in words(n, length)})


def word_key(word):
    return (len(word), word)


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

def _check_n(a, b):
    if a.n != b.n:
        raise GeneratorMismatch(f"generator counts differ: {a.n} vs {b.n}")


class Polynomial:
    """Immutable element of C<X_1, ..., X_n>."""

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms=None):
        if n < 1:
            raise ValueError("need at least one generator")
        self.n = n
        clean = {}
        if terms:
            for w, c in dict(terms).items():
                w = check_word(w, n)
                c = coeff(c)
                if c:
                    clean[w] = clean.get(w, ZERO) + c
                    if not clean[w]:
                        del clean[w]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n, terms):
        # trusted constructor: words validated, no zero coefficients
        p = object.__new__(cls)
        p.n = n
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def _clean(cls, n, terms):
        return cls._raw(n, {w: c for w, c in terms.items() if c})

    @classmethod
    def zero(cls, n):
        return cls._raw(n, {})

    @classmethod
    def one(cls, n):
        return cls._raw(n, {(): ONE})

    @classmethod
    def constant(cls, c, n):
        c = coeff(c)
        return cls._raw(n, {(): c} if c else {})

    @classmethod
    def gen(cls, j, n):
        check_word((j,), n)
        return cls._raw(n, {(j,): ONE})

    @classmethod
    def monomial(cls, word, n, c=1):
        return cls(n, {tuple(word): c})

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def items(self):
        """Terms in canonical order (by length, then lexicographically)."""
        return sorted(self._terms.items(), key=lambda t: word_key(t[0]))

    def coefficient(self, word):
        return self._terms.get(tuple(word), ZERO)

    @property
    def degree(self):
        if not self._terms:
            return NEG_INF
        return max(len(w) for w in self._terms)

    @property
    def low_degree(self):
        if not self._terms:
            return NEG_INF
        return min(len(w) for w in self._terms)

    def is_zero(self):
        return not self._terms

    def is_homogeneous(self):
        return len({len(w) for w in self._terms}) <= 1

    def is_real(self):
        return all(not isinstance(c, Scalar) for c in self._terms.values())

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.n == other.n and self._terms == other._terms
        try:
            c = coeff(other)
        except TypeError:
            return NotImplemented
        return self == Polynomial.constant(c, self.n)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    # arithmetic

    def _lift(self, other):
        if isinstance(other, Polynomial):
            _check_n(self, other)
            return other
        try:
            return Polynomial.constant(coeff(other), self.n)
        except TypeError:
            return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out.get(w, ZERO) + c
        return Polynomial._clean(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.n, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out.get(w, ZERO) - c
        return Polynomial._clean(self.n, out)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def scale(self, c):
        c = coeff(c)
        if not c:
            return Polynomial.zero(self.n)
        return Polynomial._clean(self.n, {w: c * a for w, a in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            _check_n(self, other)
            out = {}
            get = out.get
            for u, a in self._terms.items():
                for v, b in other._terms.items():
                    w = u + v
                    out[w] = get(w, ZERO) + a * b
            return Polynomial._clean(self.n, out)
        try:
            c = coeff(other)
        except TypeError:
            return NotImplemented
        return self.scale(c)

    def __rmul__(self, other):
        try:
            c = coeff(other)
        except TypeError:
            return NotImplemented
        return self.scale(c)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        out = Polynomial.one(self.n)
        for _ in range(e):
            out = out * self
        return out

    # structure

    def star(self):
        """Involution fixing the generators: conjugate coefficients, reverse words."""
        return Polynomial._raw(self.n, {w[::-1]: conj(c) for w, c in self._terms.items()})

    def homogeneous_component(self, k):
        return Polynomial._raw(self.n, {w: c for w, c in self._terms.items() if len(w) == k})

    def homogeneous_components(self):
        out = {}
        for w, c in self._terms.items():
            out.setdefault(len(w), {})[w] = c
        return {k: Polynomial._raw(self.n, t) for k, t in sorted(out.items())}

    def truncate(self, degree):
        return Polynomial._raw(self.n, {w: c for w, c in self._terms.items() if len(w) <= degree})

    def map_coefficients(self, f):
        return Polynomial._clean(self.n, {w: coeff(f(c)) for w, c in self._terms.items()})

    def with_n(self, n):
        """Same polynomial viewed over ``n`` generators (``n`` at least the used letters)."""
        for w in self._terms:
            check_word(w, n)
        return Polynomial._raw(n, dict(self._terms))

    def substitute(self, args):
        return substitute(self, args)

    __call__ = substitute

    def __repr__(self):
        from .text import print_polynomial
        return f"Polynomial({self.n}, {print_polynomial(self)!r})"

    def __str__(self):
        from .text import print_polynomial
        return print_polynomial(self)


# functional surface -------------------------------------------------------

def poly_add(p, q):
    _check_n(p, q)
    return p + q


def poly_mul(p, q):
    _check_n(p, q)
    return p * q


def poly_scale(c, p):
    return p.scale(c)


def involution(p):
    return p.star()


def commutator(p, q):
    """``pq - qp``."""
    _check_n(p, q)
    return p * q - q * p


def cyclic_symmetrize(p):
    """Sum of the cyclic rotations of each monomial; constants map to 0."""
    out = {}
    for w, c in p._terms.items():
        for s in range(len(w)):
            r = w[s:] + w[:s]
            out[r] = out.get(r, ZERO) + c
    return Polynomial._clean(p.n, out)


def homogeneous_component(p, k):
    return p.homogeneous_component(k)


def substitute(p, args):
    """Evaluate ``p`` at polynomials ``args`` (a unital homomorphism)."""
    args = tuple(args)
    if len(args) != p.n:
        raise ValueError(f"expected {p.n} arguments, got {len(args)}")
    if not all(isinstance(a, Polynomial) for a in args):
        raise TypeError("substitute takes polynomials")
    m = args[0].n
    if any(a.n != m for a in args):
        raise GeneratorMismatch("substitution arguments use different generator counts")
    out = Polynomial.zero(m)
    cache = {(): Polynomial.one(m)}

    def value(w):
        # memoised on prefixes, since monomials often share them
        if w not in cache:
            cache[w] = value(w[:-1]) * args[w[-1] - 1]
        return cache[w]

    for w, c in p._terms.items():
        out = out + value(w).scale(c)
    return out


def gens(n):
    return tuple(Polynomial.gen(j, n) for j in range(1, n + 1))


# ---------------------------------------------------------------------------
# tensor square
# ---------------------------------------------------------------------------

class TensorPoly:
    """Immutable element of C<n> (x) C<n>, keyed by pairs of words."""

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n, terms=None):
        self.n = n
        clean = {}
        for (u, v), c in dict(terms or {}).items():
            key = (check_word(u, n), check_word(v, n))
            c = coeff(c)
            clean[key] = clean.get(key, ZERO) + c
        self._terms = {k: c for k, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, n, terms):
        t = object.__new__(cls)
        t.n = n
        t._terms = {k: c for k, c in terms.items() if c}
        t._hash = None
        return t

    @classmethod
    def zero(cls, n):
        return cls._raw(n, {})

    @classmethod
    def one(cls, n):
        return cls._raw(n, {((), ()): ONE})

    @classmethod
    def simple(cls, a: Polynomial, b: Polynomial):
        """The elementary tensor ``a (x) b``."""
        _check_n(a, b)
        out = {}
        for u, x in a._terms.items():
            for v, y in b._terms.items():
                out[(u, v)] = x * y
        return cls._raw(a.n, out)

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def items(self):
        return sorted(self._terms.items(),
                      key=lambda t: (word_key(t[0][0]), word_key(t[0][1])))

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, TensorPoly):
            return self.n == other.n and self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    def __add__(self, other):
        if not isinstance(other, TensorPoly):
            return NotImplemented
        _check_n(self, other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, ZERO) + c
        return TensorPoly._raw(self.n, out)

    def __neg__(self):
        return TensorPoly._raw(self.n, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        c = coeff(c)
        return TensorPoly._raw(self.n, {k: c * a for k, a in self._terms.items()})

    def __mul__(self, other):
        # right bimodule action: (b (x) c) a = b (x) ca
        if isinstance(other, Polynomial):
            _check_n(self, other)
            out = {}
            for (u, v), x in self._terms.items():
                for w, y in other._terms.items():
                    k = (u, v + w)
                    out[k] = out.get(k, ZERO) + x * y
            return TensorPoly._raw(self.n, out)
        try:
            return self.scale(coeff(other))
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        # left bimodule action: a (b (x) c) = ab (x) c
        if isinstance(other, Polynomial):
            _check_n(self, other)
            out = {}
            for w, y in other._terms.items():
                for (u, v), x in self._terms.items():
                    k = (w + u, v)
                    out[k] = out.get(k, ZERO) + y * x
            return TensorPoly._raw(self.n, out)
        try:
            return self.scale(coeff(other))
        except TypeError:
            return NotImplemented

    def flip(self):
        return TensorPoly._raw(self.n, {(v, u): c for (u, v), c in self._terms.items()})

    def star(self):
        return TensorPoly._raw(self.n, {(u[::-1], v[::-1]): conj(c)
                                        for (u, v), c in self._terms.items()})

    def __repr__(self):
        from .text import print_tensor
        return f"TensorPoly({self.n}, {print_tensor(self)!r})"

    def __str__(self):
        from .text import print_tensor
        return print_tensor(self)


def tensor_bimodule_mul(a, t, b):
    """``a t b`` for the bimodule structure ``a (x (x) y) b = ax (x) yb``."""
    return (a * t) * b


def tensor_flip(t):
    return t.flip()


def tensor_star(t):
    return t.star()
