from .fixture_model import CLASSICAL, MODES, INVALID, ALL_FIXTURES, Fixture, Fixtures, PROBLEMS_PATH
__all__ = [
    'CLASSICAL',
    'MODES',
    'INVALID',
    'ALL_FIXTURES',
    'Fixture',
    'Fixtures',
    'PROBLEMS_PATH',
]
