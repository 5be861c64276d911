"""Extremal eigenvalue bounds for the Laplacian of complex unit gain graphs."""

from .core import (
    GainGraph,
    GainStats,
    HermitianMatrix,
    SwitchingFunction,
    a_theta,
    adjacency_matrix,
    cycle_gain,
    gain_stats,
    is_balanced,
    laplacian,
    quadratic_form,
    signless_laplacian,
    switch,
)
from .eig import Spectrum, eigenvalues

__version__ = "0.1.0"

__all__ = [
    "GainGraph",
    "GainStats",
    "HermitianMatrix",
    "Spectrum",
    "SwitchingFunction",
    "a_theta",
    "adjacency_matrix",
    "cycle_gain",
    "eigenvalues",
    "gain_stats",
    "is_balanced",
    "laplacian",
    "quadratic_form",
    "signless_laplacian",
    "switch",
]
