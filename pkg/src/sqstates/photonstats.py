"""Photon-number distribution and quadrature moments of the normalized
states |beta, n; zeta>."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._errors import CutoffError, SqueezeParameterError
from .polymath import jacobi, legendre
from .states import StateLabel, fock_coefficients

__all__ = [
    "PhotonDistribution",
    "MomentReport",
    "photon_distribution",
    "mean_photon",
    "mean_photon_longform",
    "f_ratio",
    "moments",
]

TAIL_HARD_LIMIT = 1e-6   # a normalized distribution with more tail is refused
AUTO_TAIL_TARGET = 1e-9
AUTO_TAIL_ACCEPT = 1e-8  # good enough when growing the cutoff stops helping
AUTO_CUTOFF_LIMIT = 20000


@dataclass(frozen=True)
class PhotonDistribution:
    """Probabilities p_0..p_cutoff of the normalized state and the weight
    beyond the cutoff."""

    probs: np.ndarray
    cutoff: int
    tail_mass: float


def photon_distribution(label: StateLabel, cutoff: int | None = None) -> PhotonDistribution:
    """p_m = N_n^2 |<m | beta, n; zeta>|^2.

    With ``cutoff=None`` the truncation is grown until the tail falls below
    1e-9, or until growing stops helping while the tail is already within
    1e-8 (the computed tail bottoms out at the rounding level of the
    coefficients for extreme parameters); an explicit cutoff whose tail
    exceeds 1e-6 raises ``CutoffError``.
    """
    if cutoff is not None:
        dist = _distribution_at(label, int(cutoff))
        if dist.tail_mass > TAIL_HARD_LIMIT:
            raise CutoffError(
                f"tail mass {dist.tail_mass:.3e} at cutoff {cutoff}; increase the cutoff")
        return dist
    m = max(32, int(2.0 * mean_photon(label)) + 24)
    prev_tail = math.inf
    while True:
        dist = _distribution_at(label, m)
        if dist.tail_mass <= AUTO_TAIL_TARGET:
            return dist
        if dist.tail_mass > 0.5 * prev_tail:  # doubling no longer helps
            if dist.tail_mass <= AUTO_TAIL_ACCEPT:
                return dist
            raise CutoffError(
                f"tail mass stalled at {dist.tail_mass:.3e} (cutoff {m})")
        if m >= AUTO_CUTOFF_LIMIT:
            raise CutoffError(f"no adequate cutoff below {AUTO_CUTOFF_LIMIT}")
        prev_tail = dist.tail_mass
        m *= 2


def _distribution_at(label: StateLabel, cutoff: int) -> PhotonDistribution:
    fc = fock_coefficients(label, cutoff, normalize=True)
    probs = np.maximum(np.abs(fc.coeffs) ** 2, 0.0)
    return PhotonDistribution(probs=probs, cutoff=cutoff, tail_mass=fc.tail_mass)


def mean_photon(label: StateLabel) -> float:
    """Mean photon number (n + (n+1) y)/(1 - y) + |beta|^2, y = |zeta|^2."""
    y = label.zeta_abs_sq
    return (label.n + (label.n + 1) * y) / (1.0 - y) + abs(label.beta) ** 2


def mean_photon_longform(label: StateLabel) -> float:
    """Mean photon number before the Jacobi three-term identity collapses it:

        [ (n - (n+1) y) P_n(w) + y/(1-y) ((n+2) P_n^(1,1)(w) - n P_{n-2}^(1,1)(w)) ]
            / ((1+y) P_n(w)) + |beta|^2,    w = (1+y)/(1-y).

    Kept as an independent route for testing the simple form."""
    n = label.n
    y = label.zeta_abs_sq
    w = (1.0 + y) / (1.0 - y)
    pn = float(np.real(legendre(n, w)))
    bracket = (n - (n + 1) * y) * pn
    upper = (n + 2) * float(np.real(jacobi(n, 1, 1, w)))
    if n >= 2:
        upper -= n * float(np.real(jacobi(n - 2, 1, 1, w)))
    bracket += y / (1.0 - y) * upper
    return bracket / ((1.0 + y) * pn) + abs(label.beta) ** 2


_F_TABLE_ZERO = "-(1-y)"  # pinned by a unit test; multiplied by n = 0 in every use


def f_ratio(n: int, y: float) -> float:
    """The squeezing-weight ratio f_n(y) = P_{n-2}^(1,1)(z) / P_n(z) at
    z = (1+y)/(1-y), with f_1 = 0; f_0 follows a fixed convention -(1-y)
    but is multiplied by n = 0 wherever it appears."""
    if not 0 <= y < 1:
        raise SqueezeParameterError(f"need 0 <= y < 1, got {y}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return -(1.0 - y)
    if n == 1:
        return 0.0
    z = (1.0 + y) / (1.0 - y)
    return float(np.real(jacobi(n - 2, 1, 1, z))) / float(np.real(legendre(n, z)))


@dataclass(frozen=True)
class MomentReport:
    """First and second moments of the normalized state: ladder means, mean
    photon number, quadrature variances, the symmetrized correlation
    <dQ dP + dP dQ>, and the rotation-invariant uncertainty sum alongside the
    phase-dependent uncertainty product."""

    mean_a: complex
    mean_adag: complex
    mean_a2: complex
    mean_n: float
    var_q: float
    var_p: float
    cov_qp_sym: float
    unc_sum: float
    unc_prod: float


def moments(label: StateLabel) -> MomentReport:
    """All closed-form first and second moments:

        <a> = beta,   <a^2> = -zeta (2n+1 + n f_n(y)) / (1-y) + beta^2,
        var Q = hbar/2 [ (2n+1)|1-zeta|^2 - (zeta+zeta*) n f_n ] / (1-y),
        var P = hbar/2 [ (2n+1)|1+zeta|^2 + (zeta+zeta*) n f_n ] / (1-y),
        <dQ dP + dP dQ> = hbar i (zeta - zeta*) (2n+1 + n f_n) / (1-y),

    the uncertainty sum hbar (2n+1)(1+y)/(1-y) (phase-independent) and the
    product var Q * var P in its expanded form.
    """
    beta, n, zeta, hbar = label.beta, label.n, label.zeta, label.hbar
    y = label.zeta_abs_sq
    omy = 1.0 - y
    nf = n * f_ratio(n, y) if n >= 2 else 0.0
    two_re = float(2.0 * zeta.real)

    mean_a2 = -zeta * (2 * n + 1 + nf) / omy + beta * beta
    var_q = 0.5 * hbar * ((2 * n + 1) * abs(1.0 - zeta) ** 2 - two_re * nf) / omy
    var_p = 0.5 * hbar * ((2 * n + 1) * abs(1.0 + zeta) ** 2 + two_re * nf) / omy
    cov = -2.0 * hbar * zeta.imag * (2 * n + 1 + nf) / omy  # i(zeta - zeta*) = -2 Im zeta
    unc_sum = hbar * (2 * n + 1) * (1.0 + y) / omy
    unc_prod = (hbar**2 / 4.0) * ((2 * n + 1) ** 2 * abs(1.0 - zeta * zeta) ** 2
                                  - nf * (2 * (2 * n + 1) + nf) * two_re**2) / omy**2
    return MomentReport(
        mean_a=beta,
        mean_adag=beta.conjugate(),
        mean_a2=mean_a2,
        mean_n=mean_photon(label),
        var_q=var_q,
        var_p=var_p,
        cov_qp_sym=cov,
        unc_sum=unc_sum,
        unc_prod=unc_prod,
    )
