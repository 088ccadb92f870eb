"""
Structured-text documents for free CDGAs and finite presentations.

Numbers are exact rationals written as "p/q" strings (plain integers are
accepted on input, floats are refused). Documents are pydantic models so the
same schema validates YAML and JSON input and renders deterministic output.
"""

import json
from typing import Annotated, Any

import yaml
from pydantic import BaseModel, BeforeValidator, Field

from exact_linalg import format_rational, to_rational
from .algebra import FreeCDGA
from .element import Element
from .generators import GeneratorSet
from .presentation import FinitePresentation


def _rational_text(value: Any) -> str:
    return format_rational(to_rational(value))


RationalText = Annotated[str, BeforeValidator(_rational_text)]
RationalVector = list[RationalText]


class GeneratorDocument(BaseModel):
    name: str
    degree: int


class TermDocument(BaseModel):
    """One term `coefficient * prod(name^exponent)`; an empty monomial is the unit."""
    coefficient: RationalText
    monomial: dict[str, int] = Field(default_factory=dict)


class FreeCdgaDocument(BaseModel):
    generators: list[GeneratorDocument]
    differential: dict[str, list[TermDocument]] = Field(default_factory=dict)


class PresentationDocument(BaseModel):
    """Per-degree basis names, product entries (left, right, vector) and optional d matrices."""
    basis: dict[int, list[str]]
    products: list[tuple[str, str, RationalVector]] = Field(default_factory=list)
    differentials: dict[int, list[RationalVector]] = Field(default_factory=dict)


# --- elements -------------------------------------------------------------------


def element_to_terms(element: Element) -> list[TermDocument]:
    terms = []
    for monomial, coefficient in element.terms:
        powers = {gen.name: exp for gen, exp in zip(element.gens, monomial.exponents) if exp}
        terms.append(TermDocument(coefficient=format_rational(coefficient), monomial=powers))
    return terms


def element_from_terms(gens: GeneratorSet, terms: list[TermDocument]) -> Element:
    return Element.from_terms(gens, [(t.monomial, t.coefficient) for t in terms])


# --- free CDGAs -----------------------------------------------------------------


def free_cdga_to_document(algebra: FreeCDGA) -> FreeCdgaDocument:
    return FreeCdgaDocument(
        generators=[GeneratorDocument(name=g.name, degree=g.degree) for g in algebra.gens],
        differential={
            g.name: element_to_terms(image)
            for g, image in zip(algebra.gens, algebra.differentials) if not image.is_zero
        },
    )


def free_cdga_from_document(document: FreeCdgaDocument) -> FreeCDGA:
    gens = GeneratorSet.of((g.name, g.degree) for g in document.generators)
    return FreeCDGA.build(gens, {
        name: element_from_terms(gens, terms) for name, terms in document.differential.items()
    })


# --- finite presentations -------------------------------------------------------


def presentation_to_document(presentation: FinitePresentation) -> PresentationDocument:
    unit = presentation.unit_name
    products = [
        (left, right, [format_rational(v) for v in vector])
        for (left, right), vector in presentation.products
        if unit not in (left, right)
    ]
    differentials = {
        degree: [[format_rational(v) for v in row] for row in matrix.rows]
        for degree, matrix in enumerate(presentation.differentials) if not matrix.is_zero
    }
    return PresentationDocument(
        basis={k: list(names) for k, names in enumerate(presentation.basis)},
        products=products,
        differentials=differentials,
    )


def presentation_from_document(document: PresentationDocument) -> FinitePresentation:
    return FinitePresentation.build(
        document.basis,
        [(left, right, vector) for left, right, vector in document.products],
        {k: rows for k, rows in document.differentials.items()},
    )


# --- text -----------------------------------------------------------------------


def dump_document(document: BaseModel | dict, as_json: bool = False) -> str:
    """Render a document as YAML (default) or indented JSON, keys in declaration order."""
    data = document.model_dump(mode="json") if isinstance(document, BaseModel) else document
    if as_json:
        return json.dumps(data, indent=2, ensure_ascii=False) + "\n"
    return yaml.safe_dump(data, sort_keys=False, allow_unicode=True)
