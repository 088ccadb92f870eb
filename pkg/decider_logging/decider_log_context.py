from typing import Optional
from dataclasses import dataclass, asdict

from app_settings import get_app_settings, DifferentialMode
from definitions import PipelineStepDefinition, get_phase_of_step


settings = get_app_settings()


@dataclass
class DeciderLogContext:
    """
    Contextual information for decider logging.
    Attributes:
        problem_name (str): Name of the problem being decided.
        pipeline_phase (str): Current phase (e.g. 'Application', 'Pipeline', 'Report').
        pipeline_step (str): Current step code.
        differential_mode (str): Fibre differential mode in use.
        run_guid (str): Unique identifier for the run.

    Methods:
        update_step(step: PipelineStepDefinition) -> None:
            Update the current step and phase.
        update_problem_name(problem_name: str) -> None:
            Update the problem name.
        to_bind_kwargs() -> dict:
            Convert the context to a dictionary for logger binding.
    """
    problem_name: str
    pipeline_phase: str
    pipeline_step: str
    differential_mode: str
    run_guid: str = settings.log.run_guid

    def __init__(self, problem_name: Optional[str] = None,
                 step: Optional[PipelineStepDefinition] = None,
                 differential_mode: Optional[DifferentialMode] = None):
        self.problem_name = problem_name if problem_name is not None else "-"
        self.pipeline_step = step.code if step is not None else "-"
        self.pipeline_phase = get_phase_of_step(
            step).name if step is not None else "-"
        self.differential_mode = differential_mode.value if differential_mode is not None else "-"

    def update_step(self, step: PipelineStepDefinition) -> None:
        self.pipeline_step = step.code
        self.pipeline_phase = get_phase_of_step(step).name

    def update_problem_name(self, problem_name: str) -> None:
        self.problem_name = problem_name

    def to_bind_kwargs(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v is not None}
