"""Semicircular moments by non-crossing pair partitions, and the Chebyshev
polynomials ``P_k`` (orthonormal for the (0,1) semicircle law)."""

from __future__ import annotations

from functools import lru_cache

from ..calculus import TraceFunctional
from ..ncpoly import ONE, Polynomial, TensorPoly, ZERO


@lru_cache(maxsize=None)
def _pairings(w):
    if not w:
        return 1
    if len(w) % 2:
        return 0
    first = w[0]
    total = 0
    # the first letter pairs with position q; non-crossing forces the inside
    # and the outside to pair among themselves
    for q in range(1, len(w), 2):
        if w[q] == first:
            inner = _pairings(w[1:q])
            if inner:
                total += inner * _pairings(w[q + 1:])
    return total


def semicircular_moment(word) -> int:
    """``tau(s_{w_1} ... s_{w_k})``: non-crossing pairings joining equal letters."""
    return _pairings(tuple(word))


def semicircular_trace(n: int) -> TraceFunctional:
    return TraceFunctional(n, lambda w: ONE * _pairings(w), name="semicircular")


@lru_cache(maxsize=None)
def _cheb(k):
    if k == 0:
        return Polynomial.one(1)
    if k == 1:
        return Polynomial.gen(1, 1)
    return Polynomial.gen(1, 1) * _cheb(k - 1) - _cheb(k - 2)


def chebyshev_P(k: int, j: int = 1, n: int = 1) -> Polynomial:
    """``P_k(X_j)`` in ``C<n>``: ``P_0 = 1``, ``P_1 = t``, ``P_{k+1} = t P_k - P_{k-1}``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    p = _cheb(k)
    if n == 1 and j == 1:
        return p
    return p.substitute([Polynomial.gen(j, n)])


def chebyshev_product(ks, idx, n) -> Polynomial:
    """``P_{k_1}(X_{i_1}) ... P_{k_p}(X_{i_p})``."""
    out = Polynomial.one(n)
    for k, i in zip(ks, idx):
        out = out * chebyshev_P(k, i, n)
    return out


def chebyshev_generating_check(d: int) -> bool:
    """``(1 - r t + r^2) sum_m P_m(t) r^m = 1`` through ``r^d``."""
    t = Polynomial.gen(1, 1)
    for m in range(d + 1):
        c = chebyshev_P(m)
        if m >= 1:
            c = c - t * chebyshev_P(m - 1)
        if m >= 2:
            c = c + chebyshev_P(m - 2)
        if c != (ONE if m == 0 else ZERO):
            return False
    return True


def chebyshev_difference_quotient(k: int) -> TensorPoly:
    """``sum_{0 <= h < k} P_h (x) P_{k-1-h}``."""
    out = TensorPoly.zero(1)
    for h in range(k):
        out = out + TensorPoly.simple(chebyshev_P(h), chebyshev_P(k - 1 - h))
    return out
