from dataclasses import dataclass
from typing import Any, Mapping

from decider_errors import InputError
from .algebra import FreeCDGA
from .element import Element
from .protocol import GradedAlgebra


@dataclass(frozen=True)
class CdgaMorphism:
    """
    Morphism of CDGAs out of a free algebra, fixed by the images of its generators.

    The target may be a FreeCDGA or a FinitePresentation. Construction checks
    that images preserve degrees and that φ(dg) = d(φg) for every generator g
    with |g| + 1 <= `validate_through` (all generators when it is None).
    Attributes:
        source (FreeCDGA): Domain, a free CDGA.
        target (GradedAlgebra): Codomain.
        images (tuple[Any, ...]): Image of each source generator, in generator order.
        validate_through (int | None): Highest degree in which the chain condition is checked.
    """
    source: FreeCDGA
    target: Any
    images: tuple[Any, ...]
    validate_through: int | None = None

    def __post_init__(self):
        if len(self.images) != len(self.source.gens):
            raise InputError(
                f"{len(self.source.gens)} source generators but {len(self.images)} images")
        for gen, image in zip(self.source.gens, self.images):
            degree = self.target.degree_of(image)
            if degree is not None and degree != gen.degree and not _is_zero(image):
                raise InputError(
                    f"Image of {gen.name} has degree {degree}, expected {gen.degree}")
            if degree is None and not _is_zero(image):
                raise InputError(f"Image of {gen.name} is not homogeneous")
        failures = self.chain_failures()
        if failures:
            raise InputError(
                f"Images do not commute with the differential on {', '.join(failures)}")

    @classmethod
    def build(cls, source: FreeCDGA, target: GradedAlgebra, images: Mapping[str, Any],
              validate_through: int | None = None) -> "CdgaMorphism":
        """Generators not named in `images` are sent to zero."""
        unknown = set(images) - set(source.gens.names)
        if unknown:
            raise InputError(f"Images given for unknown generators {sorted(unknown)}")
        ordered = tuple(
            images[g.name] if g.name in images else target.zero(g.degree)
            for g in source.gens
        )
        return cls(source, target, ordered, validate_through)

    @classmethod
    def identity(cls, algebra: FreeCDGA) -> "CdgaMorphism":
        return cls(algebra, algebra, tuple(algebra.generator(name) for name in algebra.gens.names))

    def image_of(self, name: str) -> Any:
        return self.images[self.source.gens.index(name)]

    def apply(self, a: Element) -> Any:
        """Evaluate on an element of the source by substituting generator images."""
        if a.gens != self.source.gens:
            raise InputError("Element is not written over the morphism's source generators")
        degree = a.degree
        total = self.target.zero(degree if degree is not None else 0)
        for monomial, coefficient in a.terms:
            value = self.target.one()
            for image, exp in zip(self.images, monomial.exponents):
                for _ in range(exp):
                    value = self.target.mul(value, image)
            total = total + value.scale(coefficient)
        return total

    def chain_failures(self) -> list[str]:
        """Names of generators on which φ∘d and d∘φ differ."""
        failures = []
        for gen, image, boundary in zip(self.source.gens, self.images, self.source.differentials):
            if self.validate_through is not None and gen.degree + 1 > self.validate_through:
                continue
            lhs = self.apply(boundary)
            rhs = self.target.apply_diff(image)
            if not _equal(self.target, lhs, rhs, gen.degree + 1):
                failures.append(gen.name)
        return failures


def _is_zero(value: Any) -> bool:
    return bool(value.is_zero)


def _equal(target: Any, a: Any, b: Any, degree: int) -> bool:
    return target.vector(a, degree) == target.vector(b, degree)
