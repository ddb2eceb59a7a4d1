"""The semicircular trace, the truncated full Fock space and the structure of
trace-preserving vector fields."""

from .fock import (
    FockOperator, FockVector, TruncationError, apply_annihilation, apply_creation,
    apply_number, apply_right_annihilation, apply_right_creation, apply_rotation,
    apply_s, apply_vacuum_projection, operators, poly_to_fock,
)
from .moments import chebyshev_P, semicircular_moment, semicircular_trace
from .structure import (
    F_fock, F_polynomial, lemma77_check, omega_basis, prop72_check, real_basis,
    root_basis, thm712_density_check, trace_preserving_fock_basis,
)

__all__ = [
    "FockOperator", "FockVector", "TruncationError", "apply_annihilation", "apply_creation",
    "apply_number", "apply_right_annihilation", "apply_right_creation", "apply_rotation",
    "apply_s", "apply_vacuum_projection", "operators", "poly_to_fock", "chebyshev_P",
    "semicircular_moment", "semicircular_trace", "F_fock", "F_polynomial", "lemma77_check",
    "omega_basis", "prop72_check", "real_basis", "root_basis", "thm712_density_check",
    "trace_preserving_fock_basis",
]
