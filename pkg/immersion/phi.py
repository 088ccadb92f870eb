from typing import Any

from decider_errors import InputError
from definitions import STEP_BY_KEY
from decider_logging import log_pipeline_step
from cdga import CdgaMorphism
from lift_solver import RelativeModel
from .problem import ImmersionProblem


def _required(problem: ImmersionProblem, given: Any, degree: int, generator: str) -> Any:
    """A class in degree <= m must be supplied; above m it defaults to zero."""
    if given is not None:
        return given
    if degree <= problem.m:
        raise InputError(f"No class given for {generator} (degree {degree})")
    return problem.model.zero(degree)


@log_pipeline_step(STEP_BY_KEY["ASSEMBLE_PHI"])
def assemble_phi(problem: ImmersionProblem, model: RelativeModel,
                 max_degree: int | None = None) -> CdgaMorphism:
    """
    The map from the base of the mono model to the model of M.

    alpha_i -> f*p_i(TN), beta_j -> p_j(TM), euler -> f*e(TN), euler_m -> e(TM).
    """
    images = {}
    for gen in model.base.gens:
        kind, _, index = gen.name.partition("_")
        if kind == "alpha":
            given = problem.pullback_pontrjagin.get(int(index))
        elif kind == "beta":
            given = problem.tangent_pontrjagin.get(int(index))
        elif gen.name == "euler":
            given = problem.pullback_euler
        elif gen.name == "euler_m":
            given = problem.euler_tangent
        else:
            raise InputError(f"Unexpected base generator {gen.name}")
        images[gen.name] = _required(problem, given, gen.degree, gen.name)
    return CdgaMorphism.build(model.base, problem.model, images,
                              validate_through=max_degree or problem.cutoff)
