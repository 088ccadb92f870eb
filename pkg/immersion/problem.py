"""
Immersion problems: the characteristic-class data of f: M -> N.

A problem document names the dimensions, a model of M (its cohomology ring
as a finite presentation, or a free CDGA) and the classes the decision needs,
each as a coordinate vector in the model's basis of its degree:

    name: cp2_in_r5
    dimension_m: 4
    dimension_n: 5
    cohomology:
      basis: {0: [one], 2: [x], 4: [x2]}
      products: [[x, x, ["1/1"]]]
    tangent_pontrjagin: {4: ["3/1"]}
    euler_tangent: ["3/1"]

Classes of degree above m may be omitted; they are zero in cohomology.
"""

from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any

import yaml
from pydantic import BaseModel, Field, model_validator

from app_settings import get_app_settings
from decider_errors import DegreeOneError, InputError, ScopeError
from definitions import STEP_BY_KEY
from decider_logging import get_decider_logger, log_pipeline_step
from exact_linalg import to_vector
from cdga import (FinitePresentation, FreeCDGA, FreeCdgaDocument, PresentationDocument, RationalText,
                  free_cdga_from_document, presentation_from_document)


RationalVector = list[RationalText]


class ProblemDocument(BaseModel):
    """Schema of a problem file; degrees key the class maps."""
    name: str | None = None
    dimension_m: int
    dimension_n: int
    cohomology: PresentationDocument | None = None
    free_model: FreeCdgaDocument | None = None
    tangent_pontrjagin: dict[int, RationalVector] = Field(default_factory=dict)
    pullback_pontrjagin: dict[int, RationalVector] = Field(default_factory=dict)
    pullback_euler: RationalVector | None = None
    euler_tangent: RationalVector | None = None

    @model_validator(mode="after")
    def one_model(self) -> "ProblemDocument":
        if (self.cohomology is None) == (self.free_model is None):
            raise ValueError("exactly one of `cohomology` and `free_model` is required")
        return self


@dataclass(frozen=True)
class ImmersionProblem:
    """
    Validated input of the decider.
    Attributes:
        name (str): Label used in logs and reports.
        m (int): dim M.
        n (int): dim N.
        model (FinitePresentation | FreeCDGA): Model of M.
        tangent_pontrjagin (dict[int, Any]): p_j(TM) by index j, for the j that are given.
        pullback_pontrjagin (dict[int, Any]): f*p_i(TN) by index i, for the i that are given.
        pullback_euler (Any | None): f*e(TN), n even only.
        euler_tangent (Any | None): e(TM), m even only.
        max_degree (int | None): Degree cutoff the model was checked through; None means m + 1.
    """
    name: str
    m: int
    n: int
    model: Any
    tangent_pontrjagin: dict[int, Any] = field(default_factory=dict)
    pullback_pontrjagin: dict[int, Any] = field(default_factory=dict)
    pullback_euler: Any = None
    euler_tangent: Any = None
    max_degree: int | None = None

    @property
    def cutoff(self) -> int:
        """The degree cutoff the problem was validated through; one above dim M by default."""
        return self.max_degree if self.max_degree is not None else self.m + 1


def _model_of(document: ProblemDocument) -> FinitePresentation | FreeCDGA:
    if document.cohomology is not None:
        return presentation_from_document(document.cohomology)
    return free_cdga_from_document(document.free_model)


def _class(model: Any, degree: int, values: list[str], what: str) -> Any:
    if len(values) != model.dimension(degree):
        raise InputError(
            f"{what} is not homogeneous of degree {degree}: expected {model.dimension(degree)} "
            f"coordinates, got {len(values)}")
    element = model.element(degree, to_vector(values))
    if not model.apply_diff(element).is_zero:
        raise InputError(f"{what} is not closed")
    return element


def _indexed_classes(model: Any, given: dict[int, list[str]], top_index: int, what: str) -> dict[int, Any]:
    classes = {}
    for degree, values in sorted(given.items()):
        if degree % 4 or not 1 <= degree // 4 <= top_index:
            raise InputError(
                f"{what} classes live in degrees 4, 8, ..., {4 * top_index}; got degree {degree}")
        classes[degree // 4] = _class(model, degree, values, f"{what} class in degree {degree}")
    return classes


def _check_model(model: Any, m: int, cutoff: int) -> None:
    if model.cohomology_dimension(1) != 0:
        raise DegreeOneError("The model of M has non-zero first cohomology")
    top = model.top_degree if model.top_degree is not None else cutoff
    for degree in range(m + 1, max(top, cutoff) + 1):
        if model.cohomology_dimension(degree) != 0:
            raise InputError(
                f"The model of M has cohomology in degree {degree} > dim M = {m}")


def resolve_cutoff(m: int, max_degree: int | None = None) -> int:
    """
    The degree cutoff for a problem with dim M = m.

    An explicit `max_degree` wins over the configured one, which wins over
    m + 1. Obstructions above the cutoff are taken as vanishing, which only
    holds in degrees above m, so a cutoff below m is refused.
    Raises:
        InputError: The cutoff is below m.
    """
    cutoff = max_degree if max_degree is not None else get_app_settings().decider.max_degree
    if cutoff is None:
        return m + 1
    if cutoff < m:
        raise InputError(
            f"Degree cutoff {cutoff} is below dim M = {m}; obstructions in degrees "
            f"{cutoff + 1}..{m} would be skipped")
    return cutoff


def with_cutoff(problem: ImmersionProblem, max_degree: int) -> ImmersionProblem:
    """The same problem re-validated through another degree cutoff."""
    cutoff = resolve_cutoff(problem.m, max_degree)
    if cutoff == problem.cutoff:
        return problem
    _check_model(problem.model, problem.m, cutoff)
    return replace(problem, max_degree=cutoff)


def problem_from_document(document: ProblemDocument, max_degree: int | None = None,
                          default_name: str = "problem") -> ImmersionProblem:
    """Validate a parsed document and turn it into an ImmersionProblem."""
    m, n = document.dimension_m, document.dimension_n
    if m < 1:
        raise InputError(f"dimension_m must be at least 1, got {m}")
    if n <= m:
        raise ScopeError(f"Need dimension_n > dimension_m, got m = {m}, n = {n}")
    if (n - m) % 2 == 0:
        raise ScopeError(f"Codimension n - m = {n - m} is even")

    cutoff = resolve_cutoff(m, max_degree)
    model = _model_of(document)
    _check_model(model, m, cutoff)

    tangent = _indexed_classes(model, document.tangent_pontrjagin, m // 2, "Tangent Pontrjagin")
    pullback = _indexed_classes(model, document.pullback_pontrjagin, n // 2, "Pulled-back Pontrjagin")

    pullback_euler = None
    if document.pullback_euler is not None:
        if n % 2:
            raise InputError(f"pullback_euler is only defined for even n, got n = {n}")
        pullback_euler = _class(model, n, document.pullback_euler, "Pulled-back Euler class")

    euler_tangent = None
    if document.euler_tangent is not None:
        if m % 2:
            raise InputError(f"euler_tangent is only defined for even m, got m = {m}")
        euler_tangent = _class(model, m, document.euler_tangent, "Tangent Euler class")

    return ImmersionProblem(
        name=document.name or default_name,
        m=m,
        n=n,
        model=model,
        tangent_pontrjagin=tangent,
        pullback_pontrjagin=pullback,
        pullback_euler=pullback_euler,
        euler_tangent=euler_tangent,
        max_degree=cutoff,
    )


@log_pipeline_step(STEP_BY_KEY["PARSE_PROBLEM"])
def parse_problem(text: str, max_degree: int | None = None,
                  default_name: str = "problem") -> ImmersionProblem:
    """
    Parse and validate a problem document given as YAML or JSON text.
    Raises:
        yaml.YAMLError: The text is not YAML.
        pydantic.ValidationError: The document does not match the schema.
        InputError: The data violates an invariant (ScopeError, DegreeOneError included).
    """
    raw = yaml.safe_load(text)
    if not isinstance(raw, dict):
        raise InputError("A problem document must be a mapping")
    problem = problem_from_document(ProblemDocument.model_validate(raw), max_degree, default_name)
    get_decider_logger().debug(f"Parsed problem {problem.name}: m = {problem.m}, n = {problem.n}")
    return problem


def load_problem(path: Path | str, max_degree: int | None = None) -> ImmersionProblem:
    path = Path(path)
    return parse_problem(path.read_text(encoding="utf-8"), max_degree, default_name=path.stem)
