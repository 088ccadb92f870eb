from dataclasses import dataclass, replace

from app_settings import DifferentialMode, get_app_settings
from definitions import STEP_BY_KEY
from decider_logging import DeciderLogContext, get_decider_logger, log_pipeline_step
from exact_linalg import Vector
from lift_solver import LiftResult, decide_dga_lift
from mono_model import MonoModelSpec, build_mono_model
from .phi import assemble_phi
from .problem import ImmersionProblem, with_cutoff


@dataclass(frozen=True)
class Obstruction:
    """
    One row of a verdict: the class phi(dw) for a fibre generator w.
    Attributes:
        name (str): Fibre generator (gamma_k or sigma).
        degree (int): Degree of the class, |w| + 1.
        value (tuple[Fraction, ...]): Coordinates of the class in the model of M.
        basis (tuple[str, ...]): Basis labels of that degree.
        exact (bool): Whether the class is exact (always True above the cutoff).
        witness (tuple[Fraction, ...] | None): Coordinates of a primitive when exact.
        above_cutoff (bool): Degree exceeds the cutoff, so the class vanishes.
    """
    name: str
    degree: int
    value: Vector
    basis: tuple[str, ...]
    exact: bool
    witness: Vector | None
    above_cutoff: bool


@dataclass(frozen=True)
class Verdict:
    """
    Answer of the decider for one problem and one differential mode.
    Attributes:
        problem_name (str): Name of the problem.
        m (int): dim M.
        n (int): dim N.
        mode (DifferentialMode): Fibre differential used.
        cutoff (int): Degree cutoff.
        immersible (bool): True iff every obstruction is exact.
        obstructions (tuple[Obstruction, ...]): One row per fibre generator.
        diagnostic (str | None): Reason for a NO verdict.
        dual_class_immersible (bool | None): In paper-literal mode, the dual-class answer.
    """
    problem_name: str
    m: int
    n: int
    mode: DifferentialMode
    cutoff: int
    immersible: bool
    obstructions: tuple[Obstruction, ...]
    diagnostic: str | None = None
    dual_class_immersible: bool | None = None

    @property
    def diverges_from_dual_class(self) -> bool | None:
        if self.dual_class_immersible is None:
            return None
        return self.dual_class_immersible != self.immersible


def _obstructions(problem: ImmersionProblem, result: LiftResult) -> tuple[Obstruction, ...]:
    return tuple(
        Obstruction(
            name=entry.name,
            degree=entry.obstruction_degree,
            value=entry.obstruction,
            basis=tuple(problem.model.basis_labels(entry.obstruction_degree)) if not entry.above_cutoff else (),
            exact=entry.exact,
            witness=entry.witness,
            above_cutoff=entry.above_cutoff,
        )
        for entry in result.generators
    )


def _decide(problem: ImmersionProblem, mode: DifferentialMode, cutoff: int) -> tuple[LiftResult, Verdict]:
    model = build_mono_model(MonoModelSpec(problem.m, problem.n, mode))
    phi = assemble_phi(problem, model, cutoff)
    result = decide_dga_lift(model, problem.model, phi, max_degree=cutoff)
    verdict = Verdict(
        problem_name=problem.name,
        m=problem.m,
        n=problem.n,
        mode=mode,
        cutoff=cutoff,
        immersible=result.exists,
        obstructions=_obstructions(problem, result),
        diagnostic=result.diagnostic,
    )
    return result, verdict


@log_pipeline_step(STEP_BY_KEY["DECIDE_IMMERSION"])
def decide_immersion(problem: ImmersionProblem, mode: DifferentialMode | None = None,
                     max_degree: int | None = None, compare_modes: bool = True) -> Verdict:
    """
    Decide whether f: M -> N is homotopic to an immersion, rationally.

    Builds the mono model for (m, n), maps its base to M through the given
    classes and asks whether that map lifts over the fibre. In paper-literal
    mode the dual-class answer is computed too (unless `compare_modes` is off)
    so a disagreement between the two differentials shows up in the verdict.
    Args:
        problem (ImmersionProblem): Validated input.
        mode (DifferentialMode | None): Fibre differential; defaults to the configured one.
        max_degree (int | None): Degree cutoff; defaults to the one the problem was validated through.
        compare_modes (bool): Also run dual-class mode when `mode` is paper-literal.
    Returns:
        Verdict: The answer with one obstruction row per fibre generator.
    Raises:
        InputError: `max_degree` is below m, or the model has cohomology above m through it.
    """
    mode = DifferentialMode(mode or get_app_settings().decider.differential_mode)
    if max_degree is not None:
        problem = with_cutoff(problem, max_degree)
    cutoff = problem.cutoff
    log = get_decider_logger(DeciderLogContext(problem.name, STEP_BY_KEY["DECIDE_IMMERSION"], mode))

    _, verdict = _decide(problem, mode, cutoff)
    if mode is DifferentialMode.PAPER_LITERAL and compare_modes:
        _, reference = _decide(problem, DifferentialMode.DUAL_CLASS, cutoff)
        verdict = replace(verdict, dual_class_immersible=reference.immersible)
        if verdict.diverges_from_dual_class:
            log.warning("Paper-literal and dual-class differentials disagree on this problem")

    log.info(f"{problem.name}: {'YES' if verdict.immersible else 'NO'} "
             f"(m = {problem.m}, n = {problem.n}, cutoff {cutoff})")
    return verdict
