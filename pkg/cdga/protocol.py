from typing import Any, Protocol, Sequence, runtime_checkable
from fractions import Fraction

from exact_linalg import AffineSubspaceQ, RationalMatrix, Vector, solve_affine, zero_vector


@runtime_checkable
class GradedAlgebra(Protocol):
    """
    What the lifting solver needs from a model of M.

    Implemented by FreeCDGA (elements are `Element`) and by FinitePresentation
    (elements are `GradedVector`). Both support `+`, `-`, unary minus and
    multiplication by a rational on their elements.
    """

    @property
    def top_degree(self) -> int | None: ...

    def dimension(self, degree: int) -> int: ...

    def basis_labels(self, degree: int) -> tuple[str, ...]: ...

    def zero(self, degree: int) -> Any: ...

    def one(self) -> Any: ...

    def mul(self, a: Any, b: Any) -> Any: ...

    def apply_diff(self, a: Any) -> Any: ...

    def degree_of(self, a: Any) -> int | None: ...

    def vector(self, a: Any, degree: int) -> Vector: ...

    def element(self, degree: int, vector: Sequence[Fraction]) -> Any: ...

    def differential_matrix(self, degree: int) -> RationalMatrix: ...

    def multiplication_matrix(self, a: Any, source_degree: int, target_degree: int) -> RationalMatrix: ...

    def cocycles(self, degree: int) -> AffineSubspaceQ: ...

    def is_exact(self, a: Any) -> Any | None: ...

    def cohomology_dimension(self, degree: int) -> int: ...


class CocycleMixin:
    """Kernel and cohomology computations shared by the per-degree linear models."""

    def cocycles(self, degree: int) -> AffineSubspaceQ:
        """ker d in degree k, as a linear subspace of the degree-k coordinates."""
        matrix = self.differential_matrix(degree)
        return solve_affine(matrix, zero_vector(matrix.n_rows))

    def cohomology_dimension(self, degree: int) -> int:
        if degree < 0:
            return 0
        kernel = self.dimension(degree) - self.differential_matrix(degree).rank
        image = self.differential_matrix(degree - 1).rank if degree >= 1 else 0
        return kernel - image
