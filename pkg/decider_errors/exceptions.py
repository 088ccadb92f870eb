"""Exception hierarchy shared by every package of the decider.

Anything derived from `InputError` is the caller's fault and maps to exit
code 2 on the command line; `InternalError` means a consistency check inside
the decider failed.
"""

ODD_CODIMENSION_NOTE = (
    "the decision procedure only applies as long as n-m is odd"
)

PLUS_CONSTRUCTION_NOTE = (
    "degree-1 data must be stripped before the decision runs: M is replaced by "
    "a simply connected complex M+ (nearly identical to the plus construction) "
    "whose rational cohomology agrees with M's in degrees >= 2, so supply the "
    "cohomology with H^1 removed"
)


class DecisionError(Exception):
    """Root of all decider errors."""


class InputError(DecisionError, ValueError):
    """Malformed, ill-graded or otherwise invalid input."""


class ScopeError(InputError):
    """Input outside the dimensions the decision procedure covers."""

    def __init__(self, message: str, note: str | None = ODD_CODIMENSION_NOTE):
        super().__init__(f"{message} ({note})" if note else message)


class DegreeOneError(InputError):
    """Degree-1 generators or non-trivial first cohomology."""

    def __init__(self, message: str):
        super().__init__(f"{message}; {PLUS_CONSTRUCTION_NOTE}")


class UnsupportedInputError(InputError):
    """A relative model whose differential is not linear where it must be."""


class InternalError(DecisionError, RuntimeError):
    """A self-check failed; indicates a bug rather than bad input."""
