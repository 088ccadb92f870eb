from .pipeline_definitions import (PHASES, STEPS, PHASE_BY_KEY, PHASE_BY_ID,
                                   STEP_BY_KEY, STEP_BY_ID, PIPELINE_STEPS, iter_steps_in_phase,
                                   get_phase_of_step, PipelinePhaseDefinition,
                                   PipelineStepDefinition)
__all__ = [
    "PHASES",
    "STEPS",
    "PHASE_BY_KEY",
    "PHASE_BY_ID",
    "STEP_BY_KEY",
    "STEP_BY_ID",
    "PIPELINE_STEPS",
    "iter_steps_in_phase",
    "get_phase_of_step",
    "PipelinePhaseDefinition",
    "PipelineStepDefinition",
]
