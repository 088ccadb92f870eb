from enum import Enum
from uuid import uuid4
from functools import lru_cache


@lru_cache
def generate_run_guid() -> str:
    """Generate a new decider run GUID as a string.
    Returns:
        str: A new run GUID.
    """
    return str(uuid4())


class Environment(Enum):
    DEVELOPMENT = "development"
    TESTING = "testing"
    PRODUCTION = "production"


class LogLevel(Enum):
    TRACE = "trace"
    DEBUG = "debug"
    INFO = "info"
    WARNING = "warning"
    ERROR = "error"
    CRITICAL = "critical"


class DifferentialMode(str, Enum):
    """Fibre differential used for the monomorphism-bundle model."""
    DUAL_CLASS = "dual-class"
    PAPER_LITERAL = "paper-literal"
