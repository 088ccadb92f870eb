from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from decider_errors import InputError
from exact_linalg import AffineSubspaceQ, RationalMatrix, Vector, solve_affine


@dataclass(frozen=True)
class LinearDgaSystem:
    """
    Equations `d x_i = a_i + sum_j a_ij * x_j` for unknowns x_i of degree n_i in a dga A.

    Attributes:
        ambient (GradedAlgebra): The dga A the unknowns live in.
        degrees (tuple[int, ...]): Degree n_i of each unknown, non-decreasing, each >= 2.
        constants (tuple[Any, ...]): a_i, homogeneous of degree n_i + 1 or zero.
        coefficients (tuple[tuple[Any | None, ...], ...]): a_ij, square; None stands for zero.
        labels (tuple[str, ...]): Name of each unknown, used in diagnostics.
        bound (int | None): Equations landing above this degree are dropped and their
            unknowns left free.
    """
    ambient: Any
    degrees: tuple[int, ...]
    constants: tuple[Any, ...]
    coefficients: tuple[tuple[Any | None, ...], ...]
    labels: tuple[str, ...] = ()
    bound: int | None = None

    def __post_init__(self):
        size = len(self.degrees)
        if len(self.constants) != size:
            raise InputError(f"{size} unknowns but {len(self.constants)} constants")
        if len(self.coefficients) != size or any(len(row) != size for row in self.coefficients):
            raise InputError(f"Coefficient matrix must be {size}x{size}")
        if self.labels and len(self.labels) != size:
            raise InputError(f"{size} unknowns but {len(self.labels)} labels")
        if any(n < 2 for n in self.degrees):
            raise InputError(f"Unknowns must have degree >= 2, got {list(self.degrees)}")
        if list(self.degrees) != sorted(self.degrees):
            raise InputError(f"Unknown degrees must be non-decreasing, got {list(self.degrees)}")
        for i, (n_i, constant) in enumerate(zip(self.degrees, self.constants)):
            if not _is_zero(constant) and self.ambient.degree_of(constant) != n_i + 1:
                raise InputError(
                    f"Constant of {self.label(i)} must have degree {n_i + 1}")
            for j, coefficient in enumerate(self.coefficients[i]):
                if coefficient is None or _is_zero(coefficient):
                    continue
                expected = n_i + 1 - self.degrees[j]
                if self.ambient.degree_of(coefficient) != expected:
                    raise InputError(
                        f"Coefficient of {self.label(j)} in the equation of {self.label(i)} "
                        f"must have degree {expected}")

    def label(self, index: int) -> str:
        return self.labels[index] if self.labels else f"x{index + 1}"

    @property
    def size(self) -> int:
        return len(self.degrees)

    def offsets(self) -> tuple[int, ...]:
        """Start of each unknown's block in the concatenated coordinates of V = sum A^(n_i)."""
        starts, position = [], 0
        for n in self.degrees:
            starts.append(position)
            position += self.ambient.dimension(n)
        return tuple(starts)

    @property
    def ambient_dim(self) -> int:
        return sum(self.ambient.dimension(n) for n in self.degrees)

    def constrains(self, index: int) -> bool:
        return self.bound is None or self.degrees[index] + 1 <= self.bound

    def split(self, vector: Sequence[Fraction]) -> tuple[Vector, ...]:
        """Cut a vector of V into per-unknown coordinate blocks."""
        starts = self.offsets()
        ends = starts[1:] + (self.ambient_dim,)
        return tuple(tuple(vector[a:b]) for a, b in zip(starts, ends))

    def equation_rows(self, index: int) -> tuple[list[Vector], Vector]:
        """Rows of (D - T) and of C for the equation of unknown `index`."""
        n_i = self.degrees[index]
        target = n_i + 1
        height = self.ambient.dimension(target)
        blocks: list[RationalMatrix] = []
        for j, n_j in enumerate(self.degrees):
            width = self.ambient.dimension(n_j)
            block = RationalMatrix.zeros(height, width)
            if j == index:
                block = self.ambient.differential_matrix(n_i)
            coefficient = self.coefficients[index][j]
            if coefficient is not None and not _is_zero(coefficient):
                block = block - self.ambient.multiplication_matrix(coefficient, n_j, target)
            blocks.append(block)
        rows = [sum((block.rows[r] for block in blocks), ()) for r in range(height)]
        return rows, self.ambient.vector(self.constants[index], target)

    def assemble(self, count: int | None = None) -> tuple[RationalMatrix, Vector]:
        """
        Build (D - T) and C for the first `count` equations (all of them by default).

        D is block diagonal with the differentials of A, T holds multiplication
        by each a_ij, and C stacks the constants; solutions of (D - T) v = C are
        exactly the solutions of the system.
        """
        count = self.size if count is None else count
        rows: list[Vector] = []
        rhs: list[Fraction] = []
        for index in range(count):
            if not self.constrains(index):
                continue
            equation, constant = self.equation_rows(index)
            rows.extend(equation)
            rhs.extend(constant)
        return RationalMatrix(len(rows), self.ambient_dim, tuple(rows)), tuple(rhs)


def solve_linear_dga_system(system: LinearDgaSystem, count: int | None = None) -> AffineSubspaceQ:
    """
    All tuples (x_1, ..., x_k) with |x_i| = n_i solving the system.

    Args:
        system (LinearDgaSystem): The equations.
        count (int | None): Only impose the first `count` equations.
    Returns:
        AffineSubspaceQ: Solutions in the concatenated degree bases; empty iff none exist.
    """
    matrix, rhs = system.assemble(count)
    return solve_affine(matrix, rhs)


def _is_zero(value: Any) -> bool:
    return bool(value.is_zero)
