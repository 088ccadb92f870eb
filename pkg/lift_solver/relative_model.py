from dataclasses import dataclass, field
from typing import Mapping

from pydantic import BaseModel, Field

from decider_errors import InputError, UnsupportedInputError
from cdga import (Element, FreeCDGA, FreeCdgaDocument, GeneratorDocument, GeneratorSet,
                  Monomial, TermDocument, element_from_terms, element_to_terms,
                  free_cdga_from_document, free_cdga_to_document)


@dataclass(frozen=True)
class AffineDifferential:
    """
    d(w) split as `constant + sum(coefficient_l * w_l)`.
    Attributes:
        constant (Element): Part in the base subalgebra, over the base generators.
        linear (tuple[tuple[str, Element], ...]): (fibre generator, base coefficient) pairs.
    """
    constant: Element
    linear: tuple[tuple[str, Element], ...] = ()

    @property
    def is_constant(self) -> bool:
        return not self.linear


@dataclass(frozen=True)
class RelativeModel:
    """
    Relative model (B ⊗ ΛW_F, d) of a fibration over a base model B.

    Attributes:
        base (FreeCDGA): Base model B; its differential is unchanged in the total algebra.
        fiber_gens (GeneratorSet): Fibre generators W_F.
        fiber_diff (tuple[Element, ...]): d(w) for each fibre generator, written over
            the total generators (base first, then fibre).
        linear_through (int | None): Fibre generators of degree <= this bound must have
            a differential that is affine-linear in the fibre generators.
    """
    base: FreeCDGA
    fiber_gens: GeneratorSet
    fiber_diff: tuple[Element, ...]
    linear_through: int | None = None
    _memo: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if len(self.fiber_diff) != len(self.fiber_gens):
            raise InputError(
                f"{len(self.fiber_gens)} fibre generators but {len(self.fiber_diff)} differentials")
        gens = self.total_gens
        for gen, image in zip(self.fiber_gens, self.fiber_diff):
            if image.gens != gens:
                raise InputError(f"d({gen.name}) is not written over the total generators")
        # d∘d = 0 and degree checks happen when the total algebra is built
        _ = self.total
        if self.linear_through is not None and not self.is_linear_through(self.linear_through):
            bad = [g.name for g in self.fiber_gens
                   if g.degree <= self.linear_through and self.decompose(g.name) is None]
            raise UnsupportedInputError(
                f"Fibre differential is not linear in the fibre generators on {', '.join(bad)}")

    @classmethod
    def build(cls, base: FreeCDGA, fiber_gens: GeneratorSet,
              differentials: Mapping[str, Element] | None = None,
              linear_through: int | None = None) -> "RelativeModel":
        """
        Differentials may be written over the base generators, the total
        generators, or any generator set the total one contains by name;
        fibre generators not named get d = 0.
        """
        total_gens = base.gens.concat(fiber_gens)
        differentials = dict(differentials or {})
        unknown = set(differentials) - set(fiber_gens.names)
        if unknown:
            raise InputError(f"Differentials given for unknown fibre generators {sorted(unknown)}")
        images = tuple(
            differentials[name].embed(total_gens) if name in differentials else Element.zero(total_gens)
            for name in fiber_gens.names
        )
        return cls(base, fiber_gens, images, linear_through)

    # --- total algebra --------------------------------------------------------

    @property
    def total_gens(self) -> GeneratorSet:
        return self.base.gens.concat(self.fiber_gens)

    @property
    def total(self) -> FreeCDGA:
        """The free CDGA B ⊗ ΛW_F with the combined differential."""
        cached = self._memo.get("total")
        if cached is None:
            gens = self.total_gens
            images = tuple(image.embed(gens) for image in self.base.differentials) + self.fiber_diff
            cached = FreeCDGA(gens, images)
            self._memo["total"] = cached
        return cached

    def diff_of(self, name: str) -> Element:
        return self.fiber_diff[self.fiber_gens.index(name)]

    # --- linearity ------------------------------------------------------------

    def decompose(self, name: str) -> AffineDifferential | None:
        """
        Split d(w) into its base part and its fibre-linear part.

        Monomials are in generator order, so a base monomial times w_l is
        stored with the base factor on the left and the coefficient needs no
        sign. Returns None when some term has fibre degree other than 0 or 1.
        """
        image = self.diff_of(name)
        base_size = len(self.base.gens)
        constant: dict[Monomial, object] = {}
        linear: dict[str, dict[Monomial, object]] = {}
        for monomial, coefficient in image.terms:
            base_part = Monomial(monomial.exponents[:base_size])
            fiber_part = monomial.exponents[base_size:]
            weight = sum(fiber_part)
            if weight == 0:
                constant[base_part] = coefficient
            elif weight == 1:
                fiber_name = self.fiber_gens[fiber_part.index(1)].name
                linear.setdefault(fiber_name, {})[base_part] = coefficient
            else:
                return None
        return AffineDifferential(
            Element.from_mapping(self.base.gens, constant),
            tuple(
                (g.name, Element.from_mapping(self.base.gens, linear[g.name]))
                for g in self.fiber_gens if g.name in linear
            ),
        )

    def is_linear_through(self, bound: int) -> bool:
        return all(self.decompose(g.name) is not None for g in self.fiber_gens if g.degree <= bound)


# --- documents ------------------------------------------------------------------


class RelativeModelDocument(BaseModel):
    base: FreeCdgaDocument
    fiber_generators: list[GeneratorDocument]
    fiber_differential: dict[str, list[TermDocument]] = Field(default_factory=dict)
    linear_through: int | None = None


def relative_model_to_document(model: RelativeModel) -> RelativeModelDocument:
    return RelativeModelDocument(
        base=free_cdga_to_document(model.base),
        fiber_generators=[GeneratorDocument(name=g.name, degree=g.degree) for g in model.fiber_gens],
        fiber_differential={
            g.name: element_to_terms(image)
            for g, image in zip(model.fiber_gens, model.fiber_diff) if not image.is_zero
        },
        linear_through=model.linear_through,
    )


def relative_model_from_document(document: RelativeModelDocument) -> RelativeModel:
    base = free_cdga_from_document(document.base)
    fiber_gens = GeneratorSet.of((g.name, g.degree) for g in document.fiber_generators)
    total_gens = base.gens.concat(fiber_gens)
    return RelativeModel.build(
        base,
        fiber_gens,
        {name: element_from_terms(total_gens, terms) for name, terms in document.fiber_differential.items()},
        document.linear_through,
    )
