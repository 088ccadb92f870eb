import pytest

from app_settings import get_app_settings
from decider_logging import logger
from cdga import Element, FinitePresentation, FreeCDGA, GeneratorSet


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Keep tests independent of a developer's .env and environment."""
    for key in ("DECIDER__DIFFERENTIAL_MODE", "DECIDER__MAX_DEGREE"):
        monkeypatch.delenv(key, raising=False)
    get_app_settings.cache_clear()
    yield
    get_app_settings.cache_clear()


@pytest.fixture(autouse=True)
def detach_log_sinks():
    """Sinks added by the command line point at streams pytest closes after each test."""
    yield
    logger.remove()


@pytest.fixture
def sphere_model() -> FreeCDGA:
    """(x(2), y(3); dy = x^2), the minimal model of S^2."""
    gens = GeneratorSet.of([("x", 2), ("y", 3)])
    x = Element.generator(gens, "x")
    return FreeCDGA.build(gens, {"y": x * x})


@pytest.fixture
def cp2() -> FinitePresentation:
    """Q[x]/(x^3) with |x| = 2."""
    return FinitePresentation.build({0: ["one"], 2: ["x"], 4: ["x2"]}, [("x", "x", [1])])


@pytest.fixture
def hp2() -> FinitePresentation:
    """Q[u]/(u^3) with |u| = 4."""
    return FinitePresentation.build({0: ["one"], 4: ["u"], 8: ["u2"]}, [("u", "u", [1])])
