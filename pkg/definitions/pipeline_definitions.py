from pathlib import Path
from dataclasses import dataclass
from typing import Final, Iterable
import json

# Pipeline definitions path, resolved next to this module
pipeline_defs_path: Path = Path(__file__).with_name("pipeline_steps.json")


# Pipeline Phase Definition Dataclass
@dataclass(frozen=True)
class PipelinePhaseDefinition:
    id: int
    key: str
    name: str
    description: str | None = None


# Pipeline Step Definition Dataclass
@dataclass(frozen=True)
class PipelineStepDefinition:
    id: int
    phase_id: int
    key: str
    name: str
    code: str
    step_order: int
    description: str | None = None


# Load pipeline definitions from JSON
pipeline_definitions = json.loads(pipeline_defs_path.read_text(encoding="utf-8"))

# Create Lists of Phase and Step Definitions
PHASES: Final[list[PipelinePhaseDefinition]] = [
    PipelinePhaseDefinition(**phase) for phase in pipeline_definitions["phases"]
]
STEPS: Final[list[PipelineStepDefinition]] = [
    PipelineStepDefinition(**step) for step in pipeline_definitions["steps"]
]

# Convenience lookup by key and id (useful both in app code and tests).
PHASE_BY_KEY: Final[dict[str, PipelinePhaseDefinition]] = {p.key: p for p in PHASES}
PHASE_BY_ID: Final[dict[int, PipelinePhaseDefinition]] = {p.id: p for p in PHASES}

STEP_BY_KEY: Final[dict[str, PipelineStepDefinition]] = {s.key: s for s in STEPS}
STEP_BY_ID: Final[dict[int, PipelineStepDefinition]] = {s.id: s for s in STEPS}

PIPELINE_STEPS: Final[list[str]] = [
    s.key for s in sorted(
        [s for s in STEPS if s.phase_id == PHASE_BY_KEY['PIPELINE'].id],
        key=lambda st: st.step_order
    )
]


def iter_steps_in_phase(phase_key: str) -> Iterable[PipelineStepDefinition]:
    """Yield all pipeline steps belonging to the specified phase key."""
    phase = PHASE_BY_KEY[phase_key]

    return (step for step in STEPS if step.phase_id == phase.id)


def get_phase_of_step(step: PipelineStepDefinition) -> PipelinePhaseDefinition:
    """Get the phase definition for the given step."""
    phase = PHASE_BY_ID[step.phase_id]
    return phase


if __name__ == "__main__":
    print("Decider Phases and Steps:")
    for phase in PHASES:
        print(f"Phase: {phase.name}, (ID: {phase.id})")
        for step in iter_steps_in_phase(phase.key):
            print(f"\tStep: {step.name} (ID: {step.id}, Code: {step.code})")
        print()
