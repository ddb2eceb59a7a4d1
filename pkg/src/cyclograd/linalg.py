"""
Exact sparse linear algebra.

Vectors are dicts mapping hashable coordinates to exact field elements (``mpq``
or Gaussian rational :class:`~cyclograd.ncpoly.Scalar`).  Elimination is plain
Gaussian elimination over the field; the matrices met in this package are very
sparse and block structured, so fill-in stays small.
"""

from __future__ import annotations

from gmpy2 import mpq

_ZERO = mpq(0)


def _axpy(target, a, row):
    # target -= a * row, dropping exact zeros
    for k, x in row.items():
        v = target.get(k, _ZERO) - a * x
        if v:
            target[k] = v
        else:
            target.pop(k, None)


class EchelonBasis:
    """Row echelon basis grown one vector at a time.

    Row ``k`` has a unit entry at its pivot and zeros at the pivots of all rows
    inserted before it, so one pass in insertion order reduces a vector.  When
    ``track`` is set every row remembers which combination of the inserted
    inputs produced it.
    """

    def __init__(self, track=False):
        self.track = track
        self.pivots = []
        self.rows = []
        self.combos = []

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self):
        return len(self.rows)

    def _reduce(self, vec, combo, sign):
        for p, row, c in zip(self.pivots, self.rows, self.combos or [None] * len(self.rows)):
            a = vec.get(p)
            if a:
                _axpy(vec, a, row)
                if combo is not None:
                    _axpy(combo, -sign * a, c)
        return vec

    def reduce(self, vec):
        """Remainder of ``vec`` modulo the span."""
        return self._reduce({k: v for k, v in vec.items() if v}, None, 1)

    def contains(self, vec):
        return not self.reduce(vec)

    def add(self, vec, tag=None):
        """Insert ``vec``; return ``None`` if independent, else a relation.

        With tracking, a dependent input yields the dict ``{tag: coeff}`` of a
        vanishing combination of the inputs (the input's own tag has
        coefficient 1).
        """
        v = {k: x for k, x in vec.items() if x}
        combo = {tag: mpq(1)} if self.track else None
        self._reduce(v, combo, -1)
        if not v:
            return combo if self.track else {}
        p = next(iter(v))
        inv = 1 / v[p]
        v = {k: x * inv for k, x in v.items()}
        self.pivots.append(p)
        self.rows.append(v)
        if self.track:
            self.combos.append({k: x * inv for k, x in combo.items()})
        return None

    def solve(self, target):
        """Return ``{tag: coeff}`` with ``sum coeff * input[tag] == target`` or ``None``."""
        if not self.track:
            raise ValueError("solve needs a tracking basis")
        v = {k: x for k, x in target.items() if x}
        w = {}
        self._reduce(v, w, 1)
        if v:
            return None
        return {k: x for k, x in w.items() if x}


def rank(vectors) -> int:
    basis = EchelonBasis()
    for v in vectors:
        basis.add(v)
    return basis.rank


def independent_subset(vectors):
    """Indices of a maximal independent subfamily, chosen greedily in order."""
    basis = EchelonBasis()
    keep = []
    for i, v in enumerate(vectors):
        if basis.add(v) is None:
            keep.append(i)
    return keep


def kernel(images):
    """Basis of the kernel of the linear map given by ``{tag: image}``.

    Returns a list of dicts ``{tag: coeff}``.
    """
    basis = EchelonBasis(track=True)
    out = []
    for tag, img in images.items():
        rel = basis.add(img, tag)
        if rel is not None:
            out.append({k: x for k, x in rel.items() if x})
    return out


def span_dimension(vectors) -> int:
    return rank(vectors)


def same_span(a, b) -> bool:
    a, b = list(a), list(b)
    ra = rank(a)
    return ra == rank(b) and ra == rank(a + b)


def contains_span(big, small) -> bool:
    """True when every vector of ``small`` lies in the span of ``big``."""
    basis = EchelonBasis()
    for v in big:
        basis.add(v)
    return all(basis.contains(v) for v in small)


def apply(combo, vectors):
    """``sum combo[t] * vectors[t]`` as a sparse dict."""
    out = {}
    for t, a in combo.items():
        for k, x in vectors[t].items():
            out[k] = out.get(k, _ZERO) + a * x
    return {k: x for k, x in out.items() if x}


def realify(vec):
    """Split Gaussian rational coordinates into real and imaginary parts.

    Real-linear independence of complex vectors equals rational-linear
    independence of their realifications.
    """
    out = {}
    for k, x in vec.items():
        re = getattr(x, "re", x)
        im = getattr(x, "im", _ZERO)
        if re:
            out[(k, 0)] = mpq(re)
        if im:
            out[(k, 1)] = mpq(im)
    return out
