"""Parametrized 2-factors in the middle layer of the odd-dimensional cube."""

from ._core import (
    InvariantViolation,
    TwoFactor,
    beta,
    build,
    catalan,
    count_asymmetric,
    count_plane_trees,
    f_alpha,
    predicted_parity,
    search,
    spectrum,
    table1_row,
    tau_alpha,
    verify,
)

__all__ = [
    "InvariantViolation",
    "TwoFactor",
    "beta",
    "build",
    "catalan",
    "count_asymmetric",
    "count_plane_trees",
    "f_alpha",
    "predicted_parity",
    "search",
    "spectrum",
    "table1_row",
    "tau_alpha",
    "verify",
]
