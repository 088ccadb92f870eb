from .series import TruncatedSeries, invert_series
from .monomials import naive_monomials
from .linear_solve import naive_linear_solve
__all__ = [
    "TruncatedSeries",
    "invert_series",
    "naive_monomials",
    "naive_linear_solve",
]
