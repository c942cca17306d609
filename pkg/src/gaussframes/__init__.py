"""Gaussian Weyl-Heisenberg frames, their phase-space lifts, and quadrature oracles.

Submodules
----------
symplectic  symplectic matrices, pre-Iwasawa factorization, lattices
gaussians   closed forms for Gaussians, Wigner/ambiguity transforms, coefficients
numerics    grid quadrature oracles (independent reference implementations)
frames      frame predicates, Janssen bounds, rates, approximate expansions
phasespace  the isometry U_phi, phase-space frames and expansions
io          text/CSV formats
cli         command-line experiments (``python -m gaussframes``)
"""
from .gaussians import (
    CLASSICAL_HBAR,
    CovarianceState,
    GaussianState,
    PhaseSpaceGaussian,
    cross_ambiguity_closed,
    cross_wigner_closed,
    expansion_coefficient,
    u_phi_closed,
)
from .frames import FrameSpec, approx_expansion, gaussian_frame_set_contains, janssen_error_sum
from .phasespace import PhaseSpaceFrameSpec, phase_space_expand
from .symplectic import Lattice, LowerBlockSymplectic, pre_iwasawa

__version__ = "0.1.0"

__all__ = [
    "CLASSICAL_HBAR",
    "CovarianceState",
    "GaussianState",
    "PhaseSpaceGaussian",
    "cross_ambiguity_closed",
    "cross_wigner_closed",
    "expansion_coefficient",
    "u_phi_closed",
    "FrameSpec",
    "approx_expansion",
    "gaussian_frame_set_contains",
    "janssen_error_sum",
    "PhaseSpaceFrameSpec",
    "phase_space_expand",
    "Lattice",
    "LowerBlockSymplectic",
    "pre_iwasawa",
]
