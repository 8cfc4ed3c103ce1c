"""Roots of standard polynomials over quaternion division algebras."""

from ._core import (
    ConvergenceError,
    DomainError,
    companion_polynomial,
    companion_polynomial_exact,
    evaluate,
    from_left_factors,
    is_right_eigenvalue,
    multiply,
    reduce,
    reduced_invariants,
    right_char_poly,
    solve,
    verify,
)

__all__ = [
    "ConvergenceError",
    "DomainError",
    "companion_polynomial",
    "companion_polynomial_exact",
    "evaluate",
    "from_left_factors",
    "is_right_eigenvalue",
    "multiply",
    "reduce",
    "reduced_invariants",
    "right_char_poly",
    "solve",
    "verify",
]
