from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from decider_errors import InputError


Vector = tuple[Fraction, ...]


def to_rational(value: object) -> Fraction:
    """Convert an int, Fraction or "p/q" string into a Fraction.

    Floats are refused: every decision the package makes is exact.
    Args:
        value (object): Value to convert.
    Returns:
        Fraction: The value in lowest terms with positive denominator.
    """
    if isinstance(value, bool):
        raise InputError(f"Boolean {value!r} is not a rational number")
    if isinstance(value, (Fraction, int)):
        return Fraction(value)
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"Cannot read {value!r} as an exact rational") from exc
    raise InputError(
        f"Expected an exact rational (int, Fraction or 'p/q' string), got {type(value).__name__} {value!r}"
    )


def to_vector(values: Iterable[object]) -> Vector:
    return tuple(to_rational(v) for v in values)


def format_rational(value: Fraction) -> str:
    """Render a rational in the fixed "p/q" form used by every output document."""
    return f"{value.numerator}/{value.denominator}"


def zero_vector(size: int) -> Vector:
    return (Fraction(0),) * size


def is_zero_vector(vector: Sequence[Fraction]) -> bool:
    return all(v == 0 for v in vector)


@dataclass(frozen=True)
class RationalMatrix:
    """
    Immutable matrix over the rationals.
    Attributes:
        n_rows (int): Number of rows.
        n_cols (int): Number of columns (kept explicitly so 0-row matrices still have a shape).
        rows (tuple[tuple[Fraction, ...], ...]): Entries, row by row.
    """
    n_rows: int
    n_cols: int
    rows: tuple[Vector, ...]

    def __post_init__(self):
        if len(self.rows) != self.n_rows:
            raise InputError(
                f"Matrix declares {self.n_rows} rows but holds {len(self.rows)}")
        for row in self.rows:
            if len(row) != self.n_cols:
                raise InputError(
                    f"Matrix row of length {len(row)} does not match {self.n_cols} columns")

    # --- constructors ---------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[object]], n_cols: int | None = None) -> "RationalMatrix":
        converted = tuple(to_vector(row) for row in rows)
        if n_cols is None:
            if not converted:
                raise InputError("Column count is required for a matrix without rows")
            n_cols = len(converted[0])
        return cls(len(converted), n_cols, converted)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Fraction]], n_rows: int) -> "RationalMatrix":
        rows = tuple(tuple(col[r] for col in columns) for r in range(n_rows))
        return cls(n_rows, len(columns), rows)

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> "RationalMatrix":
        return cls(n_rows, n_cols, tuple(zero_vector(n_cols) for _ in range(n_rows)))

    @classmethod
    def identity(cls, size: int) -> "RationalMatrix":
        return cls(size, size, tuple(
            tuple(Fraction(1 if r == c else 0) for c in range(size)) for r in range(size)
        ))

    # --- basic operations -----------------------------------------------------

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        r, c = index
        return self.rows[r][c]

    def column(self, index: int) -> Vector:
        return tuple(row[index] for row in self.rows)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(self.n_cols, self.n_rows, tuple(
            self.column(c) for c in range(self.n_cols)
        ))

    def apply(self, vector: Sequence[Fraction]) -> Vector:
        if len(vector) != self.n_cols:
            raise InputError(
                f"Cannot apply a {self.n_rows}x{self.n_cols} matrix to a vector of length {len(vector)}")
        return tuple(sum((a * x for a, x in zip(row, vector)), Fraction(0)) for row in self.rows)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.n_cols != other.n_rows:
            raise InputError(
                f"Cannot multiply {self.n_rows}x{self.n_cols} by {other.n_rows}x{other.n_cols}")
        columns = [other.column(c) for c in range(other.n_cols)]
        return RationalMatrix(self.n_rows, other.n_cols, tuple(
            tuple(sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in columns)
            for row in self.rows
        ))

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        if (self.n_rows, self.n_cols) != (other.n_rows, other.n_cols):
            raise InputError("Cannot subtract matrices of different shapes")
        return RationalMatrix(self.n_rows, self.n_cols, tuple(
            tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)
        ))

    def hstack(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.n_rows != other.n_rows:
            raise InputError("Cannot place side by side matrices with different row counts")
        return RationalMatrix(self.n_rows, self.n_cols + other.n_cols, tuple(
            r1 + r2 for r1, r2 in zip(self.rows, other.rows)
        ))

    def vstack(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.n_cols != other.n_cols:
            raise InputError("Cannot stack matrices with different column counts")
        return RationalMatrix(self.n_rows + other.n_rows, self.n_cols, self.rows + other.rows)

    @property
    def is_zero(self) -> bool:
        return all(is_zero_vector(row) for row in self.rows)

    # --- elimination ----------------------------------------------------------

    def rref(self) -> "RationalMatrix":
        return rref(self)

    @property
    def rank(self) -> int:
        return len(rref_with_pivots(self)[1])

    def nullspace(self) -> tuple[Vector, ...]:
        """Kernel basis read off the reduced form, one vector per free column."""
        reduced, pivots = rref_with_pivots(self)
        pivot_set = set(pivots)
        basis = []
        for free in range(self.n_cols):
            if free in pivot_set:
                continue
            vector = [Fraction(0)] * self.n_cols
            vector[free] = Fraction(1)
            for row_index, pivot in enumerate(pivots):
                vector[pivot] = -reduced.rows[row_index][free]
            basis.append(tuple(vector))
        return tuple(basis)

    def inverse(self) -> "RationalMatrix":
        if self.n_rows != self.n_cols:
            raise InputError(f"Only square matrices are invertible, got {self.n_rows}x{self.n_cols}")
        size = self.n_rows
        reduced, pivots = rref_with_pivots(self.hstack(RationalMatrix.identity(size)))
        if pivots[:size] != tuple(range(size)):
            raise InputError("Matrix is singular")
        return RationalMatrix(size, size, tuple(row[size:] for row in reduced.rows))

    def __str__(self) -> str:
        return "[" + ", ".join(
            "[" + ", ".join(str(e) for e in row) + "]" for row in self.rows
        ) + "]"


def rref_with_pivots(matrix: RationalMatrix) -> tuple[RationalMatrix, tuple[int, ...]]:
    """
    Gauss-Jordan elimination in exact arithmetic.
    Args:
        matrix (RationalMatrix): Matrix to reduce.
    Returns:
        tuple[RationalMatrix, tuple[int, ...]]: The reduced row-echelon form and its pivot columns.
    """
    m = [list(row) for row in matrix.rows]
    pivots: list[int] = []
    pivot_row = 0
    for col in range(matrix.n_cols):
        if pivot_row == matrix.n_rows:
            break
        source = next((r for r in range(pivot_row, matrix.n_rows) if m[r][col] != 0), None)
        if source is None:
            continue
        m[pivot_row], m[source] = m[source], m[pivot_row]
        inv = 1 / m[pivot_row][col]
        m[pivot_row] = [e * inv for e in m[pivot_row]]
        for r in range(matrix.n_rows):
            factor = m[r][col]
            if r == pivot_row or factor == 0:
                continue
            m[r] = [a - factor * b for a, b in zip(m[r], m[pivot_row])]
        pivots.append(col)
        pivot_row += 1
    reduced = RationalMatrix(matrix.n_rows, matrix.n_cols, tuple(tuple(row) for row in m))
    return reduced, tuple(pivots)


def rref(matrix: RationalMatrix) -> RationalMatrix:
    """Return the unique reduced row-echelon form of `matrix`."""
    return rref_with_pivots(matrix)[0]


def span_basis(vectors: Iterable[Sequence[Fraction]], dimension: int) -> tuple[Vector, ...]:
    """Canonical basis of the span of `vectors`: the non-zero rows of their reduced form."""
    rows = [tuple(v) for v in vectors]
    if not rows:
        return ()
    reduced, pivots = rref_with_pivots(RationalMatrix(len(rows), dimension, tuple(rows)))
    return reduced.rows[:len(pivots)]
