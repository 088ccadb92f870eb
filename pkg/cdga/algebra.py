from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Mapping, Sequence

from decider_errors import InputError, InternalError
from exact_linalg import AffineSubspaceQ, RationalMatrix, Vector, solve_affine, zero_vector
from .element import Element, mul
from .generators import GeneratorSet
from .monomial import Monomial
from .protocol import CocycleMixin


@lru_cache(maxsize=4096)
def _enumerate_monomials(gens: GeneratorSet, degree: int) -> tuple[Monomial, ...]:
    """All monomials of the given degree, in descending lexicographic order of exponents."""
    degrees = gens.degrees
    found: list[tuple[int, ...]] = []

    def walk(index: int, remaining: int, prefix: tuple[int, ...]) -> None:
        if index == len(degrees):
            if remaining == 0:
                found.append(prefix)
            return
        deg = degrees[index]
        top = 1 if deg % 2 else remaining // deg
        for exp in range(min(top, remaining // deg), -1, -1):
            walk(index + 1, remaining - exp * deg, prefix + (exp,))

    if degree >= 0:
        walk(0, degree, ())
    return tuple(Monomial(exps) for exps in found)


def basis_of_degree(algebra: "FreeCDGA | GeneratorSet", degree: int) -> tuple[Monomial, ...]:
    """Monomial basis of the degree-k piece of a free graded-commutative algebra."""
    gens = algebra if isinstance(algebra, GeneratorSet) else algebra.gens
    if degree < 0:
        raise InputError(f"Degree must be non-negative, got {degree}")
    return _enumerate_monomials(gens, degree)


def coordinates(a: Element, basis: Sequence[Monomial]) -> Vector:
    """Coefficients of `a` in `basis`; the monomials of `a` must all belong to the basis."""
    index = {monomial: pos for pos, monomial in enumerate(basis)}
    vector = [Fraction(0)] * len(basis)
    for monomial, coefficient in a.terms:
        pos = index.get(monomial)
        if pos is None:
            raise InternalError(
                f"Monomial {monomial.label(a.gens)} is missing from the enumerated basis")
        vector[pos] = coefficient
    return tuple(vector)


@dataclass(frozen=True)
class FreeCDGA(CocycleMixin):
    """
    Free graded-commutative differential algebra (ΛW, d) over Q.

    The differential is stored on generators and extended by the Leibniz rule;
    d∘d = 0 is checked on every generator at construction.
    Attributes:
        gens (GeneratorSet): The generators W, in fixed order.
        differentials (tuple[Element, ...]): d(g) for each generator, in generator order.
    """
    gens: GeneratorSet
    differentials: tuple[Element, ...]
    _memo: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if len(self.differentials) != len(self.gens):
            raise InputError(
                f"{len(self.gens)} generators but {len(self.differentials)} differentials")
        for gen, image in zip(self.gens, self.differentials):
            if image.gens != self.gens:
                raise InputError(f"d({gen.name}) is written over a different generator set")
            if not image.is_zero and image.degree != gen.degree + 1:
                raise InputError(
                    f"d({gen.name}) must be homogeneous of degree {gen.degree + 1}, got {image}")
        for gen, image in zip(self.gens, self.differentials):
            if not self.apply_diff(image).is_zero:
                raise InputError(f"d(d({gen.name})) is not zero")

    @classmethod
    def build(cls, gens: GeneratorSet, differentials: Mapping[str, Element] | None = None) -> "FreeCDGA":
        """Generators not named in `differentials` get d = 0."""
        differentials = dict(differentials or {})
        unknown = set(differentials) - set(gens.names)
        if unknown:
            raise InputError(f"Differentials given for unknown generators {sorted(unknown)}")
        images = tuple(differentials.get(name, Element.zero(gens)) for name in gens.names)
        return cls(gens, images)

    @classmethod
    def with_zero_differential(cls, gens: GeneratorSet) -> "FreeCDGA":
        return cls.build(gens)

    # --- elements -------------------------------------------------------------

    @property
    def top_degree(self) -> int | None:
        return None

    def generator(self, name: str) -> Element:
        return Element.generator(self.gens, name)

    def diff_of(self, name: str) -> Element:
        return self.differentials[self.gens.index(name)]

    def zero(self, degree: int | None = None) -> Element:
        return Element.zero(self.gens)

    def one(self) -> Element:
        return Element.one(self.gens)

    def mul(self, a: Element, b: Element) -> Element:
        return mul(a, b)

    def degree_of(self, a: Element) -> int | None:
        return a.degree

    @property
    def has_zero_differential(self) -> bool:
        return all(image.is_zero for image in self.differentials)

    # --- differential ---------------------------------------------------------

    def _diff_monomial(self, monomial: Monomial) -> Element:
        key = ("d", monomial)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        size = len(self.gens)
        result = Element.zero(self.gens)
        prefix_degree = 0
        for idx, exp in enumerate(monomial.exponents):
            if exp == 0:
                continue
            gen = self.gens[idx]
            image = self.differentials[idx]
            if not image.is_zero:
                prefix = Monomial(monomial.exponents[:idx] + (0,) * (size - idx))
                power = Monomial(tuple(exp - 1 if i == idx else 0 for i in range(size)))
                suffix = Monomial((0,) * (idx + 1) + monomial.exponents[idx + 1:])
                sign = -1 if prefix_degree % 2 else 1
                term = mul(
                    mul(Element.monomial(self.gens, prefix, sign * exp),
                        mul(Element.monomial(self.gens, power), image)),
                    Element.monomial(self.gens, suffix),
                )
                result = result + term
            prefix_degree += exp * gen.degree
        self._memo[key] = result
        return result

    def apply_diff(self, a: Element) -> Element:
        """Extend d from generators by the Leibniz rule d(ab) = d(a)b + (-1)^|a| a d(b)."""
        if a.gens != self.gens:
            raise InputError("Element is written over a different generator set")
        result = Element.zero(self.gens)
        for monomial, coefficient in a.terms:
            result = result + self._diff_monomial(monomial).scale(coefficient)
        return result

    # --- linear algebra per degree --------------------------------------------

    def basis(self, degree: int) -> tuple[Monomial, ...]:
        return basis_of_degree(self, degree) if degree >= 0 else ()

    def basis_labels(self, degree: int) -> tuple[str, ...]:
        return tuple(m.label(self.gens) for m in self.basis(degree))

    def dimension(self, degree: int) -> int:
        return len(self.basis(degree))

    def vector(self, a: Element, degree: int) -> Vector:
        if a.is_zero:
            return zero_vector(self.dimension(degree))
        if a.degree != degree:
            raise InputError(f"Element {a} is not homogeneous of degree {degree}")
        return coordinates(a, self.basis(degree))

    def element(self, degree: int, vector: Sequence[Fraction]) -> Element:
        basis = self.basis(degree)
        if len(vector) != len(basis):
            raise InputError(
                f"Vector of length {len(vector)} does not fit degree {degree} of dimension {len(basis)}")
        return Element.from_mapping(self.gens, dict(zip(basis, vector)))

    def differential_matrix(self, degree: int) -> RationalMatrix:
        """Matrix of d: A^k -> A^(k+1) in the monomial bases."""
        key = ("D", degree)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        columns = [self.vector(self._diff_monomial(m), degree + 1) for m in self.basis(degree)]
        matrix = RationalMatrix.from_columns(columns, self.dimension(degree + 1))
        self._memo[key] = matrix
        return matrix

    def multiplication_matrix(self, a: Element, source_degree: int, target_degree: int) -> RationalMatrix:
        """Matrix of x -> a*x from A^source to A^target."""
        if not a.is_zero and a.degree != target_degree - source_degree:
            raise InputError(
                f"Multiplier {a} does not map degree {source_degree} to degree {target_degree}")
        columns = [
            self.vector(mul(a, Element.monomial(self.gens, m)), target_degree)
            for m in self.basis(source_degree)
        ]
        return RationalMatrix.from_columns(columns, self.dimension(target_degree))

    def is_exact(self, a: Element) -> Element | None:
        """
        Find b with d(b) = a.
        Args:
            a (Element): A closed homogeneous element.
        Returns:
            Element | None: The canonical primitive, or None when `a` is not exact.
        """
        if not a.is_homogeneous:
            raise InputError(f"Exactness is only defined for homogeneous elements, got {a}")
        if not self.apply_diff(a).is_zero:
            raise InputError(f"Element {a} is not closed")
        if a.is_zero:
            return Element.zero(self.gens)
        degree = a.degree
        if degree == 0:
            return None
        solutions = solve_affine(self.differential_matrix(degree - 1), self.vector(a, degree))
        if solutions.is_empty:
            return None
        return self.element(degree - 1, solutions.point)


def apply_diff(algebra: Any, a: Any) -> Any:
    return algebra.apply_diff(a)


def cocycles(algebra: Any, degree: int) -> AffineSubspaceQ:
    return algebra.cocycles(degree)


def is_exact(algebra: Any, a: Any) -> Any | None:
    return algebra.is_exact(a)


def cohomology_dimension(algebra: Any, degree: int) -> int:
    return algebra.cohomology_dimension(degree)
