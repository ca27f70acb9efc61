"""Twisted elliptic functions attached to even Dirichlet characters.

Submodules: ``characters`` (Dirichlet characters and Gauss sums),
``qseries`` (exact truncated q-series), ``analytic`` (numerical theta,
Weierstrass and Eisenstein evaluation), ``verify`` (identity catalog and
checker) and ``cli``.
"""

from .characters import DirichletCharacter, character_by_name, enumerate_characters, gauss_sum, kronecker
from .qseries import FormalSeries, compare_series, eta_quotient_expand, lambert_expand

__version__ = "0.1.0"

__all__ = [
    "DirichletCharacter",
    "character_by_name",
    "enumerate_characters",
    "gauss_sum",
    "kronecker",
    "FormalSeries",
    "compare_series",
    "eta_quotient_expand",
    "lambert_expand",
    "__version__",
]
