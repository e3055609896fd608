"""Numerics for displaced excitations of squeezed vacuum states.

The package evaluates, in closed form, normalization constants, scalar
products, coordinate/momentum wavefunctions, Wigner and Husimi phase-space
densities, photon-number distributions and quadrature moments of the state
family |beta, n; zeta> (an n-fold excited squeezed vacuum displaced by beta),
and ships an independent truncated-Fock-space oracle against which every
closed form is tested.
"""

from ._errors import (
    ConsistencyError,
    CutoffError,
    DivergentIntegralError,
    SingularMatrixError,
    SingularPairError,
    SqueezeParameterError,
)
from .states import FockCoefficients, StateLabel, fock_coefficient, fock_coefficients, normalization
from .overlaps import overlap, overlap_diag_jacobi, overlap_equal_beta, overlap_same_zeta
from .quasiprob import PhaseGrid, grid_eval, husimi_q, squeeze_axes, wigner, wigner_complex
from .photonstats import MomentReport, PhotonDistribution, f_ratio, mean_photon, moments, photon_distribution
from . import hermite2v, oracle, polymath

__version__ = "0.1.0"

__all__ = [
    "StateLabel",
    "FockCoefficients",
    "normalization",
    "fock_coefficient",
    "fock_coefficients",
    "overlap",
    "overlap_same_zeta",
    "overlap_equal_beta",
    "overlap_diag_jacobi",
    "wigner",
    "wigner_complex",
    "husimi_q",
    "grid_eval",
    "squeeze_axes",
    "PhaseGrid",
    "photon_distribution",
    "mean_photon",
    "f_ratio",
    "moments",
    "PhotonDistribution",
    "MomentReport",
    "polymath",
    "hermite2v",
    "oracle",
    "SqueezeParameterError",
    "SingularPairError",
    "CutoffError",
    "DivergentIntegralError",
    "SingularMatrixError",
    "ConsistencyError",
    "__version__",
]
