"""Independent reference computations for the tests.

Everything here works on plain dicts ``{word: Fraction}`` and
``fractions.Fraction`` arithmetic, so it shares no code with the library.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def frac(q):
    return Fraction(int(q.numerator), int(q.denominator))


def to_dict(p):
    """Library polynomial (real coefficients) -> ``{word: Fraction}``."""
    return {tuple(w): frac(c) for w, c in p.terms.items()}


def d_add(a, b, s=1):
    out = dict(a)
    for w, c in b.items():
        out[w] = out.get(w, 0) + s * c
        if out[w] == 0:
            del out[w]
    return out


def d_mul(a, b):
    out = {}
    for u, x in a.items():
        for v, y in b.items():
            out[u + v] = out.get(u + v, 0) + x * y
    return {w: c for w, c in out.items() if c}


def perfect_matchings(positions):
    if not positions:
        yield []
        return
    first, rest = positions[0], positions[1:]
    for i, other in enumerate(rest):
        for m in perfect_matchings(rest[:i] + rest[i + 1:]):
            yield [(first, other)] + m


def brute_moment(word):
    """Count non-crossing pairings of ``word`` that pair equal letters."""
    if len(word) % 2:
        return 0
    count = 0
    for m in perfect_matchings(list(range(len(word)))):
        if any(word[a] != word[b] for a, b in m):
            continue
        crossing = any(a < c < b < d for (a, b), (c, d) in itertools.permutations(m, 2))
        count += not crossing
    return count


def brute_trace(p):
    return sum((c * brute_moment(w) for w, c in p.items()), Fraction(0))


def ffd(word, j):
    """``{(left, right): count}`` for the free difference quotient of a word."""
    out = {}
    for k, letter in enumerate(word):
        if letter == j:
            key = (word[:k], word[k + 1:])
            out[key] = out.get(key, 0) + 1
    return out


def cyclic_derivative(p, j):
    """Sum over occurrences of ``X_j``: suffix followed by prefix."""
    out = {}
    for w, c in p.items():
        for k, letter in enumerate(w):
            if letter == j:
                key = w[k + 1:] + w[:k]
                out[key] = out.get(key, 0) + c
    return {w: c for w, c in out.items() if c}


def derivation(field, p):
    """``D_K p`` by replacing one letter at a time."""
    out = {}
    for w, c in p.items():
        for k, letter in enumerate(w):
            for u, x in field[letter - 1].items():
                key = w[:k] + u + w[k + 1:]
                out[key] = out.get(key, 0) + c * x
    return {w: c for w, c in out.items() if c}


def first_variation_by_matrices(p, field, mats, eps_order=1):
    """Coefficient of ``eps`` in ``tr p(X + eps K(X))`` using dual-number matrices.

    ``mats`` are square matrices of Fractions; matrix entries are pairs
    ``(a, b)`` meaning ``a + b eps``.
    """
    size = len(mats[0])

    def zero():
        return [[(Fraction(0), Fraction(0)) for _ in range(size)] for _ in range(size)]

    def ident():
        z = zero()
        for i in range(size):
            z[i][i] = (Fraction(1), Fraction(0))
        return z

    def mul(a, b):
        out = zero()
        for i in range(size):
            for k in range(size):
                ai = a[i][k]
                if ai == (0, 0):
                    continue
                for j in range(size):
                    bk = b[k][j]
                    x0, x1 = out[i][j]
                    out[i][j] = (x0 + ai[0] * bk[0], x1 + ai[0] * bk[1] + ai[1] * bk[0])
        return out

    def add(a, b, c=1):
        return [[(a[i][j][0] + c * b[i][j][0], a[i][j][1] + c * b[i][j][1]) for j in range(size)]
                for i in range(size)]

    def poly_at(q, args):
        out = zero()
        for w, c in q.items():
            m = ident()
            for letter in w:
                m = mul(m, args[letter - 1])
            out = add(out, m, c)
        return out

    plain = [[[(x, Fraction(0)) for x in row] for row in m] for m in mats]
    k_vals = [poly_at(kj, plain) for kj in field]
    shifted = [add(x, [[(Fraction(0), e[0]) for e in row] for row in kv]) for x, kv in zip(plain, k_vals)]
    val = poly_at(p, shifted)
    return sum((val[i][i][1] for i in range(size)), Fraction(0))


def orbit_count(n, length):
    """Number of cyclic orbits of words, by direct enumeration."""
    seen, count = set(), 0
    for w in itertools.product(range(1, n + 1), repeat=length):
        if w in seen:
            continue
        count += 1
        for r in range(length):
            seen.add(w[r:] + w[:r])
    return count


def catalan(k):
    from math import comb
    return comb(2 * k, k) // (k + 1)
