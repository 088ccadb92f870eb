from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from decider_errors import InputError
from .matrix import RationalMatrix, Vector, rref_with_pivots, span_basis, to_vector, zero_vector


@dataclass(frozen=True)
class AffineSubspaceQ:
    """
    A possibly empty affine subspace of Q^d.

    The non-empty form is `point + span(directions)` with linearly independent
    directions; the empty form carries only its ambient dimension.
    Attributes:
        ambient_dim (int): d.
        point (tuple[Fraction, ...] | None): A point of the subspace, None iff empty.
        directions (tuple[tuple[Fraction, ...], ...] | None): Direction basis, None iff empty.
    """
    ambient_dim: int
    point: Vector | None = None
    directions: tuple[Vector, ...] | None = None

    def __post_init__(self):
        if (self.point is None) != (self.directions is None):
            raise InputError("An affine subspace has both a point and directions, or neither")
        if self.point is None:
            return
        if len(self.point) != self.ambient_dim or any(len(d) != self.ambient_dim for d in self.directions):
            raise InputError(f"Affine subspace data does not live in Q^{self.ambient_dim}")
        if len(span_basis(self.directions, self.ambient_dim)) != len(self.directions):
            raise InputError("Affine subspace directions must be linearly independent")

    @classmethod
    def empty(cls, ambient_dim: int) -> "AffineSubspaceQ":
        return cls(ambient_dim)

    @classmethod
    def full(cls, ambient_dim: int) -> "AffineSubspaceQ":
        return cls(ambient_dim, zero_vector(ambient_dim), RationalMatrix.identity(ambient_dim).rows)

    @classmethod
    def linear(cls, directions: Sequence[Sequence[Fraction]], ambient_dim: int) -> "AffineSubspaceQ":
        return cls(ambient_dim, zero_vector(ambient_dim), span_basis(directions, ambient_dim))

    @property
    def is_empty(self) -> bool:
        return self.point is None

    @property
    def dimension(self) -> int:
        """Dimension of the subspace, -1 when empty."""
        return -1 if self.directions is None else len(self.directions)

    def sample(self, coefficients: Sequence[Fraction]) -> Vector:
        """Point `point + sum(c_i * direction_i)`."""
        if self.is_empty:
            raise InputError("Cannot sample an empty affine subspace")
        if len(coefficients) != len(self.directions):
            raise InputError(
                f"Expected {len(self.directions)} coefficients, got {len(coefficients)}")
        result = list(self.point)
        for c, direction in zip(coefficients, self.directions):
            for idx, entry in enumerate(direction):
                result[idx] += c * entry
        return tuple(result)

    def to_equations(self) -> tuple[RationalMatrix, Vector]:
        """
        Describe the subspace as the solution set of `A x = b`.
        Returns:
            tuple[RationalMatrix, tuple[Fraction, ...]]: (A, b); the empty subspace gives 0 = 1.
        """
        if self.is_empty:
            row = zero_vector(self.ambient_dim)
            return RationalMatrix(1, self.ambient_dim, (row,)), (Fraction(1),)
        if not self.directions:
            normals = RationalMatrix.identity(self.ambient_dim).rows
        else:
            normals = RationalMatrix.from_rows(self.directions, self.ambient_dim).nullspace()
        equations = RationalMatrix(len(normals), self.ambient_dim, tuple(normals))
        return equations, equations.apply(self.point)

    def contains(self, vector: Sequence[Fraction]) -> bool:
        if self.is_empty:
            return False
        equations, rhs = self.to_equations()
        return equations.apply(tuple(vector)) == rhs

    def same_subspace(self, other: "AffineSubspaceQ") -> bool:
        """Point-set equality, checked by mutual membership of points and directions."""
        if self.ambient_dim != other.ambient_dim:
            return False
        if self.is_empty or other.is_empty:
            return self.is_empty and other.is_empty
        if self.dimension != other.dimension or not other.contains(self.point):
            return False
        origin = zero_vector(self.ambient_dim)
        other_linear = AffineSubspaceQ(self.ambient_dim, origin, other.directions)
        return all(other_linear.contains(d) for d in self.directions)

    def direct_sum(self, other: "AffineSubspaceQ") -> "AffineSubspaceQ":
        """The product subspace of Q^(d1 + d2)."""
        dim = self.ambient_dim + other.ambient_dim
        if self.is_empty or other.is_empty:
            return AffineSubspaceQ.empty(dim)
        pad_left = zero_vector(self.ambient_dim)
        pad_right = zero_vector(other.ambient_dim)
        directions = tuple(d + pad_right for d in self.directions) + tuple(pad_left + d for d in other.directions)
        return AffineSubspaceQ(dim, self.point + other.point, directions)


def solve_affine(matrix: RationalMatrix, rhs: Sequence[object]) -> AffineSubspaceQ:
    """
    Solve `matrix @ x = rhs` exactly.

    The canonical point sets every free variable to zero and the directions are
    the reduced-form kernel basis, so equal systems always give equal output.
    Args:
        matrix (RationalMatrix): Coefficient matrix A.
        rhs (Sequence): Right-hand side b with one entry per row of A.
    Returns:
        AffineSubspaceQ: The solution set, empty iff the system is inconsistent.
    """
    b = to_vector(rhs)
    if len(b) != matrix.n_rows:
        raise InputError(
            f"Right-hand side has {len(b)} entries but the matrix has {matrix.n_rows} rows")
    n = matrix.n_cols
    augmented = RationalMatrix(matrix.n_rows, n + 1, tuple(
        row + (value,) for row, value in zip(matrix.rows, b)
    ))
    reduced, pivots = rref_with_pivots(augmented)
    if pivots and pivots[-1] == n:
        return AffineSubspaceQ.empty(n)

    point = [Fraction(0)] * n
    for row_index, pivot in enumerate(pivots):
        point[pivot] = reduced.rows[row_index][n]

    # the first n columns of the augmented reduced form are rref(matrix)
    return AffineSubspaceQ(n, tuple(point), matrix.nullspace())


def intersect_affine(first: AffineSubspaceQ, second: AffineSubspaceQ) -> AffineSubspaceQ:
    """Intersection of two affine subspaces of the same Q^d, in canonical form."""
    if first.ambient_dim != second.ambient_dim:
        raise InputError(
            f"Cannot intersect subspaces of Q^{first.ambient_dim} and Q^{second.ambient_dim}")
    if first.is_empty or second.is_empty:
        return AffineSubspaceQ.empty(first.ambient_dim)
    a1, b1 = first.to_equations()
    a2, b2 = second.to_equations()
    return solve_affine(a1.vstack(a2), b1 + b2)
