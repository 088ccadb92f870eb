from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from decider_errors import InputError
from exact_linalg import to_rational
from .generators import GeneratorSet
from .monomial import Monomial


Term = tuple[Monomial, Fraction]


@dataclass(frozen=True)
class Element:
    """
    Graded-commutative polynomial over Q in the generators of a GeneratorSet.

    Terms are kept sorted (monomials in descending lexicographic order) with no
    zero coefficients, so equal elements compare and hash equal.
    Attributes:
        gens (GeneratorSet): Generators the polynomial is written in.
        terms (tuple[tuple[Monomial, Fraction], ...]): Non-zero terms.
    """
    gens: GeneratorSet
    terms: tuple[Term, ...] = ()

    def __post_init__(self):
        for monomial, coefficient in self.terms:
            monomial.check(self.gens)
            if coefficient == 0:
                raise InputError("Elements never store zero coefficients")

    # --- constructors ---------------------------------------------------------

    @classmethod
    def from_mapping(cls, gens: GeneratorSet, mapping: Mapping[Monomial, object]) -> "Element":
        terms = []
        for monomial, coefficient in mapping.items():
            value = to_rational(coefficient)
            if value != 0:
                terms.append((monomial, value))
        terms.sort(key=lambda term: term[0], reverse=True)
        return cls(gens, tuple(terms))

    @classmethod
    def from_terms(cls, gens: GeneratorSet, terms: Iterable[tuple[Mapping[str, int], object]]) -> "Element":
        """Build from (exponents by generator name, coefficient) pairs; repeated monomials add up."""
        accumulated: dict[Monomial, Fraction] = {}
        for powers, coefficient in terms:
            exponents = [0] * len(gens)
            for name, exp in powers.items():
                exponents[gens.index(name)] += exp
            monomial = Monomial(tuple(exponents))
            accumulated[monomial] = accumulated.get(monomial, Fraction(0)) + to_rational(coefficient)
        return cls.from_mapping(gens, accumulated)

    @classmethod
    def zero(cls, gens: GeneratorSet) -> "Element":
        return cls(gens)

    @classmethod
    def scalar(cls, gens: GeneratorSet, value: object) -> "Element":
        return cls.from_mapping(gens, {Monomial.unit(len(gens)): value})

    @classmethod
    def one(cls, gens: GeneratorSet) -> "Element":
        return cls.scalar(gens, 1)

    @classmethod
    def generator(cls, gens: GeneratorSet, name: str) -> "Element":
        return cls(gens, ((Monomial.generator(len(gens), gens.index(name)), Fraction(1)),))

    @classmethod
    def monomial(cls, gens: GeneratorSet, monomial: Monomial, coefficient: object = 1) -> "Element":
        return cls.from_mapping(gens, {monomial: coefficient})

    # --- queries --------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int | None:
        """Common degree of all terms; None for zero or inhomogeneous elements."""
        degrees = {m.degree(self.gens) for m, _ in self.terms}
        return degrees.pop() if len(degrees) == 1 else None

    @property
    def is_homogeneous(self) -> bool:
        return self.is_zero or self.degree is not None

    def as_dict(self) -> dict[Monomial, Fraction]:
        return dict(self.terms)

    def coefficient(self, monomial: Monomial) -> Fraction:
        return self.as_dict().get(monomial, Fraction(0))

    # --- arithmetic -----------------------------------------------------------

    def _check_same(self, other: "Element") -> None:
        if self.gens != other.gens:
            raise InputError("Elements are written over different generator sets")

    def __add__(self, other: "Element") -> "Element":
        self._check_same(other)
        accumulated = self.as_dict()
        for monomial, coefficient in other.terms:
            accumulated[monomial] = accumulated.get(monomial, Fraction(0)) + coefficient
        return Element.from_mapping(self.gens, accumulated)

    def __neg__(self) -> "Element":
        return Element(self.gens, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def scale(self, value: object) -> "Element":
        factor = to_rational(value)
        if factor == 0:
            return Element.zero(self.gens)
        return Element(self.gens, tuple((m, c * factor) for m, c in self.terms))

    def __mul__(self, other: "Element | int | Fraction") -> "Element":
        if isinstance(other, Element):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other: "int | Fraction") -> "Element":
        return self.scale(other)

    def embed(self, target: GeneratorSet) -> "Element":
        """Rewrite over a generator set that contains all of this element's generators by name."""
        positions = [target.index(name) for name in self.gens.names]
        mapping = {}
        for monomial, coefficient in self.terms:
            exponents = [0] * len(target)
            for pos, exp in zip(positions, monomial.exponents):
                exponents[pos] = exp
            mapping[Monomial(tuple(exponents))] = coefficient
        return Element.from_mapping(target, mapping)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        pieces = []
        for monomial, coefficient in self.terms:
            label = monomial.label(self.gens)
            magnitude = abs(coefficient)
            if label == "1":
                body = str(magnitude)
            elif magnitude == 1:
                body = label
            else:
                body = f"{magnitude}*{label}"
            sign = "-" if coefficient < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text


def mul(a: Element, b: Element) -> Element:
    """Graded-commutative product with Koszul signs."""
    a._check_same(b)
    accumulated: dict[Monomial, Fraction] = {}
    for ma, ca in a.terms:
        for mb, cb in b.terms:
            product = ma.times(mb, a.gens)
            if product is None:
                continue
            sign, monomial = product
            accumulated[monomial] = accumulated.get(monomial, Fraction(0)) + sign * ca * cb
    return Element.from_mapping(a.gens, accumulated)
