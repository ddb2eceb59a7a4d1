"""Seeded random inputs for the verification suites.

Coefficients are ``a / b`` with ``a`` uniform in ``{-3..3}`` and ``b`` uniform
in ``{1, 2}``; word lengths are uniform up to the requested degree.
"""

from __future__ import annotations

import random

from gmpy2 import mpq

from .calculus import VectorField
from .ncpoly import Polynomial, gauss


def rng_for(seed, label) -> random.Random:
    """A generator determined by ``seed`` and a label (stable across runs)."""
    return random.Random(f"{seed}:{label}")


def rational(rng, nonzero=False):
    while True:
        q = mpq(rng.randint(-3, 3), rng.randint(1, 2))
        if q or not nonzero:
            return q


def coefficient(rng, complex_=False):
    if complex_:
        return gauss(rational(rng), rational(rng))
    return rational(rng)


def random_word(rng, n, degree, min_degree=0):
    length = rng.randint(min_degree, degree)
    return tuple(rng.randint(1, n) for _ in range(length))


def random_polynomial(rng, n, degree, terms=None, complex_=False, min_degree=0):
    terms = rng.randint(1, 6) if terms is None else terms
    out = {}
    for _ in range(terms):
        out[random_word(rng, n, degree, min_degree)] = coefficient(rng, complex_)
    return Polynomial(n, out)


def random_field(rng, n, degree, complex_=False, min_degree=0):
    return VectorField(random_polynomial(rng, n, degree, complex_=complex_, min_degree=min_degree)
                       for _ in range(n))


def random_homogeneous_field(rng, n, k, terms=None):
    """A random element of ``V_k`` (components of degree ``k + 1``)."""
    return VectorField(random_polynomial(rng, n, k + 1, terms, min_degree=k + 1)
                       for _ in range(n))
