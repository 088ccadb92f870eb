from .exceptions import (DecisionError, InputError, ScopeError, DegreeOneError,
                         UnsupportedInputError, InternalError, PLUS_CONSTRUCTION_NOTE,
                         ODD_CODIMENSION_NOTE)
__all__ = [
    "DecisionError",
    "InputError",
    "ScopeError",
    "DegreeOneError",
    "UnsupportedInputError",
    "InternalError",
    "PLUS_CONSTRUCTION_NOTE",
    "ODD_CODIMENSION_NOTE",
]
