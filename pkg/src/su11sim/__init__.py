"""Gaussian-state simulator for the pulse-pumped unbalanced SU(1,1) interferometer."""

from .gaussian import (
    GaussianError,
    GaussianState,
    QuadratureCM,
    SymplecticOp,
    apply,
    bs_matrix,
    partial_trace,
    tmsq_matrix,
    to_quadrature,
    vacuum,
)
from .interferometer import (
    Family,
    InterferometerParams,
    build,
    build_balanced_su11,
    build_rho,
    build_rho_bs,
    build_rho_bs_s,
    build_rho_s,
)

__all__ = [
    "GaussianError",
    "GaussianState",
    "QuadratureCM",
    "SymplecticOp",
    "apply",
    "bs_matrix",
    "partial_trace",
    "tmsq_matrix",
    "to_quadrature",
    "vacuum",
    "Family",
    "InterferometerParams",
    "build",
    "build_balanced_su11",
    "build_rho",
    "build_rho_bs",
    "build_rho_bs_s",
    "build_rho_s",
]
