"""Exact noncommutative calculus: cyclic derivatives, seminorm estimates,
Lie algebras of polynomial vector fields and the semicircular Fock model."""

from .ncpoly import (
    I, Polynomial, Scalar, TensorPoly, commutator, cyclic_symmetrize, gauss,
    gens, involution, poly_add, poly_mul, poly_scale, substitute,
)
from .text import ParseError, parse_polynomial, parse_tensor, parse_vector_field, print_polynomial

from .calculus import VectorField, TraceFunctional

__version__ = "0.1.0"

__all__ = [
    "I", "Polynomial", "Scalar", "TensorPoly", "VectorField", "TraceFunctional",
    "commutator", "cyclic_symmetrize", "gauss", "gens", "involution", "poly_add",
    "poly_mul", "poly_scale", "substitute", "ParseError", "parse_polynomial",
    "parse_tensor", "parse_vector_field", "print_polynomial",
]
