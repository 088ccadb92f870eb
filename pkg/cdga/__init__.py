from .generators import Generator, GeneratorSet
from .monomial import Monomial
from .element import Element, mul
from .protocol import GradedAlgebra
from .algebra import (FreeCDGA, basis_of_degree, coordinates, apply_diff, cocycles,
                      is_exact, cohomology_dimension)
from .presentation import FinitePresentation, GradedVector
from .morphism import CdgaMorphism
from .serialization import (FreeCdgaDocument, PresentationDocument, TermDocument,
                            GeneratorDocument, RationalText, element_to_terms,
                            element_from_terms, free_cdga_to_document, free_cdga_from_document,
                            presentation_to_document, presentation_from_document, dump_document)
__all__ = [
    "Generator",
    "GeneratorSet",
    "Monomial",
    "Element",
    "mul",
    "GradedAlgebra",
    "FreeCDGA",
    "basis_of_degree",
    "coordinates",
    "apply_diff",
    "cocycles",
    "is_exact",
    "cohomology_dimension",
    "FinitePresentation",
    "GradedVector",
    "CdgaMorphism",
    "FreeCdgaDocument",
    "PresentationDocument",
    "TermDocument",
    "GeneratorDocument",
    "RationalText",
    "element_to_terms",
    "element_from_terms",
    "free_cdga_to_document",
    "free_cdga_from_document",
    "presentation_to_document",
    "presentation_from_document",
    "dump_document",
]
