"""High-temperature expansions and classification of thermal priors."""

from ._core import (
    DomainError,
    NumericError,
    UsageError,
    __version__,
    bessel_i,
    classify,
    erfi,
    expand,
    langevin,
    models,
    moments,
    omega,
    verify,
    z,
)

__all__ = [
    "DomainError",
    "NumericError",
    "UsageError",
    "__version__",
    "bessel_i",
    "classify",
    "erfi",
    "expand",
    "langevin",
    "models",
    "moments",
    "omega",
    "verify",
    "z",
]
