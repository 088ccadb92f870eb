from .builder import (MonoModelSpec, fiber_range, base_generators, fiber_generators, dual_class,
                      build_mono_model, obstruction_degrees, model_cohomology_dimensions)
__all__ = [
    "MonoModelSpec",
    "fiber_range",
    "base_generators",
    "fiber_generators",
    "dual_class",
    "build_mono_model",
    "obstruction_degrees",
    "model_cohomology_dimensions",
]
