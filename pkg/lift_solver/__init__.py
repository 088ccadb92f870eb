from .linear_system import LinearDgaSystem, solve_linear_dga_system
from .relative_model import (AffineDifferential, RelativeModel, RelativeModelDocument,
                             relative_model_to_document, relative_model_from_document)
from .lift import GeneratorLift, LiftResult, decide_dga_lift, default_cutoff
__all__ = [
    "LinearDgaSystem",
    "solve_linear_dga_system",
    "AffineDifferential",
    "RelativeModel",
    "RelativeModelDocument",
    "relative_model_to_document",
    "relative_model_from_document",
    "GeneratorLift",
    "LiftResult",
    "decide_dga_lift",
    "default_cutoff",
]
