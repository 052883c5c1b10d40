"""Exact homomorphism counts from Fuchsian groups into finite groups, and Levi alpha invariants."""

from ._core import (
    FuchsError,
    __version__,
    alpha,
    alpha_bound,
    character_degrees,
    dim_jm,
    epi_count,
    hom_count,
    measure,
    run_cli,
    thresholds,
    validate,
)

__all__ = [
    "FuchsError",
    "__version__",
    "alpha",
    "alpha_bound",
    "character_degrees",
    "dim_jm",
    "epi_count",
    "hom_count",
    "measure",
    "run_cli",
    "thresholds",
    "validate",
]
