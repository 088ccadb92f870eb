from .matrix import (RationalMatrix, Vector, rref, rref_with_pivots, span_basis,
                     to_rational, to_vector, format_rational, zero_vector, is_zero_vector)
from .affine import AffineSubspaceQ, solve_affine, intersect_affine
__all__ = [
    "RationalMatrix",
    "Vector",
    "rref",
    "rref_with_pivots",
    "span_basis",
    "to_rational",
    "to_vector",
    "format_rational",
    "zero_vector",
    "is_zero_vector",
    "AffineSubspaceQ",
    "solve_affine",
    "intersect_affine",
]
