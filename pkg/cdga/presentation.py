from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping, Sequence

from decider_errors import InputError
from exact_linalg import (AffineSubspaceQ, RationalMatrix, Vector, is_zero_vector,
                          solve_affine, to_rational, to_vector, zero_vector)
from .protocol import CocycleMixin


@dataclass(frozen=True)
class GradedVector:
    """
    Homogeneous element of a FinitePresentation: a degree and coordinates in that degree's basis.
    Attributes:
        degree (int): Degree of the element.
        coords (tuple[Fraction, ...]): Coordinates in the presentation's basis of that degree.
    """
    degree: int
    coords: Vector

    @property
    def is_zero(self) -> bool:
        return is_zero_vector(self.coords)

    def __add__(self, other: "GradedVector") -> "GradedVector":
        if self.degree != other.degree:
            if other.is_zero:
                return self
            if self.is_zero:
                return other
            raise InputError(
                f"Cannot add classes of degrees {self.degree} and {other.degree}")
        return GradedVector(self.degree, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "GradedVector":
        return GradedVector(self.degree, tuple(-a for a in self.coords))

    def __sub__(self, other: "GradedVector") -> "GradedVector":
        return self + (-other)

    def scale(self, value: object) -> "GradedVector":
        factor = to_rational(value)
        return GradedVector(self.degree, tuple(factor * a for a in self.coords))

    def __mul__(self, value: object) -> "GradedVector":
        if isinstance(value, GradedVector):
            raise InputError("Multiply classes through their FinitePresentation")
        return self.scale(value)

    __rmul__ = __mul__


@dataclass(frozen=True)
class FinitePresentation(CocycleMixin):
    """
    Finite-dimensional graded-commutative dga given degree by degree.

    Usually the rational cohomology ring of M with zero differential. Basis
    element 0 of degree 0 is the unit; products of basis elements that are not
    listed are zero, and products landing above the top degree vanish.
    Attributes:
        basis (tuple[tuple[str, ...], ...]): Basis names for degrees 0..top.
        products (tuple[tuple[tuple[str, str], tuple[Fraction, ...]], ...]): Product table, sorted.
        differentials (tuple[RationalMatrix, ...]): d: degree k -> k+1, one matrix per degree.
    """
    basis: tuple[tuple[str, ...], ...]
    products: tuple[tuple[tuple[str, str], Vector], ...]
    differentials: tuple[RationalMatrix, ...]
    _memo: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not self.basis or len(self.basis[0]) != 1:
            raise InputError("Degree 0 must be one-dimensional, spanned by the unit")
        if len(self.differentials) != len(self.basis):
            raise InputError("One differential matrix per degree is required")
        for degree, matrix in enumerate(self.differentials):
            expected = (self.dimension(degree + 1), self.dimension(degree))
            if (matrix.n_rows, matrix.n_cols) != expected:
                raise InputError(
                    f"Differential in degree {degree} must be {expected[0]}x{expected[1]}")
        self._validate_algebra()

    # --- construction ---------------------------------------------------------

    @classmethod
    def build(
        cls,
        basis: Mapping[int, Sequence[str]],
        products: Iterable[tuple[str, str, Sequence[object]]] = (),
        differentials: Mapping[int, Sequence[Sequence[object]]] | None = None,
    ) -> "FinitePresentation":
        """
        Build from basis names per degree, (left, right, vector) product entries
        and optional differential matrices keyed by source degree.

        The unit's products and the mirrored entry of each listed product
        (with the Koszul sign) are filled in automatically.
        """
        if not basis:
            raise InputError("A presentation needs at least the degree-0 unit")
        if min(basis) < 0:
            raise InputError("Degrees must be non-negative")
        top = max(basis)
        pieces = tuple(tuple(basis.get(k, ())) for k in range(top + 1))
        where: dict[str, tuple[int, int]] = {}
        for degree, names in enumerate(pieces):
            for pos, name in enumerate(names):
                if name in where:
                    raise InputError(f"Duplicate basis name {name!r}")
                where[name] = (degree, pos)

        def dim(k: int) -> int:
            return len(pieces[k]) if 0 <= k <= top else 0

        table: dict[tuple[str, str], Vector] = {}
        for left, right, raw in products:
            for name in (left, right):
                if name not in where:
                    raise InputError(f"Product entry names unknown basis element {name!r}")
            target = where[left][0] + where[right][0]
            vector = to_vector(raw)
            if target > top:
                if not is_zero_vector(vector):
                    raise InputError(
                        f"Product {left}*{right} lands in degree {target} above the top degree {top}")
                continue
            if len(vector) != dim(target):
                raise InputError(
                    f"Product {left}*{right} needs {dim(target)} coordinates, got {len(vector)}")
            if (left, right) in table and table[(left, right)] != vector:
                raise InputError(f"Conflicting entries for {left}*{right}")
            table[(left, right)] = vector

        unit = pieces[0][0]
        for name, (degree, pos) in where.items():
            own = tuple(Fraction(1 if i == pos else 0) for i in range(dim(degree)))
            for key in ((unit, name), (name, unit)):
                if key in table and table[key] != own:
                    raise InputError(f"The unit {unit!r} must act trivially on {name!r}")
                table[key] = own

        for (left, right), vector in list(table.items()):
            if (right, left) not in table:
                sign = -1 if where[left][0] * where[right][0] % 2 else 1
                table[(right, left)] = tuple(sign * v for v in vector)

        matrices = []
        given = dict(differentials or {})
        unknown = set(given) - set(range(top + 1))
        if unknown:
            raise InputError(f"Differential matrices given for degrees outside 0..{top}: {sorted(unknown)}")
        for k in range(top + 1):
            if k in given and given[k]:
                matrices.append(RationalMatrix.from_rows(given[k], dim(k)))
            else:
                matrices.append(RationalMatrix.zeros(dim(k + 1), dim(k)))

        nonzero = tuple(sorted((key, vec) for key, vec in table.items() if not is_zero_vector(vec)))
        return cls(pieces, nonzero, tuple(matrices))

    # --- structure ------------------------------------------------------------

    @property
    def top_degree(self) -> int:
        return len(self.basis) - 1

    @property
    def unit_name(self) -> str:
        return self.basis[0][0]

    def dimension(self, degree: int) -> int:
        return len(self.basis[degree]) if 0 <= degree <= self.top_degree else 0

    def basis_labels(self, degree: int) -> tuple[str, ...]:
        return self.basis[degree] if 0 <= degree <= self.top_degree else ()

    def locate(self, name: str) -> tuple[int, int]:
        for degree, names in enumerate(self.basis):
            if name in names:
                return degree, names.index(name)
        raise InputError(f"Unknown basis element {name!r}")

    @property
    def has_zero_differential(self) -> bool:
        return all(m.is_zero for m in self.differentials)

    def _table(self) -> dict[tuple[int, int, int, int], Vector]:
        table = self._memo.get("table")
        if table is None:
            table = {}
            for (left, right), vector in self.products:
                table[self.locate(left) + self.locate(right)] = vector
            self._memo["table"] = table
        return table

    # --- elements -------------------------------------------------------------

    def zero(self, degree: int) -> GradedVector:
        return GradedVector(degree, zero_vector(self.dimension(degree)))

    def one(self) -> GradedVector:
        return GradedVector(0, (Fraction(1),))

    def basis_element(self, name: str) -> GradedVector:
        degree, pos = self.locate(name)
        return GradedVector(degree, tuple(Fraction(1 if i == pos else 0) for i in range(self.dimension(degree))))

    def element(self, degree: int, vector: Sequence[Fraction]) -> GradedVector:
        if len(vector) != self.dimension(degree):
            raise InputError(
                f"Degree {degree} has dimension {self.dimension(degree)}, got {len(vector)} coordinates")
        return GradedVector(degree, tuple(vector))

    def vector(self, a: GradedVector, degree: int) -> Vector:
        if a.degree != degree:
            if a.is_zero:
                return zero_vector(self.dimension(degree))
            raise InputError(f"Class of degree {a.degree} used where degree {degree} is expected")
        if len(a.coords) != self.dimension(degree):
            raise InputError(f"Class has {len(a.coords)} coordinates, degree {degree} needs {self.dimension(degree)}")
        return a.coords

    def degree_of(self, a: GradedVector) -> int | None:
        return a.degree

    def mul(self, a: GradedVector, b: GradedVector) -> GradedVector:
        target = a.degree + b.degree
        result = [Fraction(0)] * self.dimension(target)
        if not result:
            return GradedVector(target, ())
        table = self._table()
        for i, x in enumerate(a.coords):
            if x == 0:
                continue
            for j, y in enumerate(b.coords):
                if y == 0:
                    continue
                entry = table.get((a.degree, i, b.degree, j))
                if entry is None:
                    continue
                for pos, value in enumerate(entry):
                    result[pos] += x * y * value
        return GradedVector(target, tuple(result))

    # --- differential ---------------------------------------------------------

    def differential_matrix(self, degree: int) -> RationalMatrix:
        if 0 <= degree <= self.top_degree:
            return self.differentials[degree]
        return RationalMatrix.zeros(self.dimension(degree + 1), self.dimension(degree))

    def apply_diff(self, a: GradedVector) -> GradedVector:
        return GradedVector(a.degree + 1, self.differential_matrix(a.degree).apply(self.vector(a, a.degree)))

    def multiplication_matrix(self, a: GradedVector, source_degree: int, target_degree: int) -> RationalMatrix:
        if not a.is_zero and a.degree != target_degree - source_degree:
            raise InputError(
                f"Multiplier of degree {a.degree} does not map degree {source_degree} to {target_degree}")
        size = self.dimension(source_degree)
        columns = []
        for pos in range(size):
            unit_vector = GradedVector(source_degree, tuple(Fraction(1 if i == pos else 0) for i in range(size)))
            columns.append(self.vector(self.mul(a, unit_vector), target_degree) if not a.is_zero
                           else zero_vector(self.dimension(target_degree)))
        return RationalMatrix.from_columns(columns, self.dimension(target_degree))

    def is_exact(self, a: GradedVector) -> GradedVector | None:
        """
        Find b with d(b) = a.

        With zero differential (a cohomology ring) a class is exact iff it is zero.
        """
        if not self.apply_diff(a).is_zero:
            raise InputError(f"Class of degree {a.degree} is not closed")
        previous = a.degree - 1
        if a.is_zero:
            return self.zero(previous)
        if self.has_zero_differential or previous < 0:
            return None
        solutions = solve_affine(self.differential_matrix(previous), self.vector(a, a.degree))
        if solutions.is_empty:
            return None
        return GradedVector(previous, solutions.point)

    def is_closed(self, a: GradedVector) -> bool:
        return self.apply_diff(a).is_zero

    # --- validation -----------------------------------------------------------

    def _basis_vectors(self, degree: int) -> list[GradedVector]:
        size = self.dimension(degree)
        return [GradedVector(degree, tuple(Fraction(1 if i == pos else 0) for i in range(size)))
                for pos in range(size)]

    def _validate_algebra(self) -> None:
        elements = [v for k in range(1, self.top_degree + 1) for v in self._basis_vectors(k)]
        for a, b in product(elements, repeat=2):
            ab, ba = self.mul(a, b), self.mul(b, a)
            sign = -1 if a.degree * b.degree % 2 else 1
            if ab.coords != ba.scale(sign).coords:
                raise InputError(
                    f"Product table is not graded commutative in degrees {a.degree}, {b.degree}")
        for a, b, c in product(elements, repeat=3):
            if a.degree + b.degree + c.degree > self.top_degree:
                continue
            if self.mul(self.mul(a, b), c).coords != self.mul(a, self.mul(b, c)).coords:
                raise InputError(
                    f"Product table is not associative in degrees {a.degree}, {b.degree}, {c.degree}")
        if self.has_zero_differential:
            return
        if not self.differentials[0].is_zero:
            raise InputError("The unit must be closed")
        for k in range(self.top_degree + 1):
            composite = self.differential_matrix(k + 1) @ self.differential_matrix(k)
            if not composite.is_zero:
                raise InputError(f"d∘d is not zero on degree {k}")
        for a, b in product(elements, repeat=2):
            if a.degree + b.degree + 1 > self.top_degree:
                continue
            lhs = self.apply_diff(self.mul(a, b))
            sign = -1 if a.degree % 2 else 1
            rhs = self.mul(self.apply_diff(a), b) + self.mul(a, self.apply_diff(b)).scale(sign)
            if lhs.coords != self.vector(rhs, lhs.degree):
                raise InputError(
                    f"The differential does not satisfy the Leibniz rule in degrees {a.degree}, {b.degree}")

    # --- basis change ---------------------------------------------------------

    def rebased(self, transforms: Mapping[int, RationalMatrix]) -> "FinitePresentation":
        """
        Same algebra in a new basis.

        The columns of `transforms[k]` are the new degree-k basis vectors written
        in the old basis; degrees without a transform keep their basis. Old
        coordinates v become `transforms[k].inverse().apply(v)`.
        """
        def change(k: int) -> RationalMatrix:
            return transforms.get(k, RationalMatrix.identity(self.dimension(k)))

        if 0 in transforms and transforms[0] != RationalMatrix.identity(1):
            raise InputError("The unit cannot be rebased")
        inverses = {k: change(k).inverse() for k in range(self.top_degree + 1)}
        entries = []
        for p in range(1, self.top_degree + 1):
            for q in range(1, self.top_degree + 1 - p):
                for i, a in enumerate(self._basis_vectors(p)):
                    for j, b in enumerate(self._basis_vectors(q)):
                        new_a = GradedVector(p, change(p).column(i))
                        new_b = GradedVector(q, change(q).column(j))
                        prod_vec = self.mul(new_a, new_b)
                        entries.append((self.basis[p][i], self.basis[q][j],
                                        inverses[p + q].apply(prod_vec.coords)))
        matrices = {}
        for k in range(self.top_degree + 1):
            if k + 1 <= self.top_degree:
                matrices[k] = (inverses[k + 1] @ self.differentials[k] @ change(k)).rows
        return FinitePresentation.build(
            {k: names for k, names in enumerate(self.basis)}, entries, matrices)
