"""The state family |beta, n; zeta>: Fock coefficients, normalization,
coordinate and momentum wavefunctions, Bargmann function.

Conventions.  States are *unnormalized* (the convention that makes the
family biorthogonal: <beta, m; -zeta | beta, n; zeta> = delta_mn); multiply
by ``normalization(n, |zeta|)`` where a unit-norm state is wanted.  The
displacement beta and squeezing zeta are dimensionless, hbar only enters the
wavefunctions.  Every formula is written with the scaled Hermite polynomials
h_k(x, w) = w^(k/2) H_k(x/sqrt(w)), which removes all square-root branch
choices and makes the zeta -> 0 limit exact.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from ._errors import ConsistencyError, SqueezeParameterError
from .polymath import (
    assoc_laguerre,
    hermite_scaled,
    hermite_scaled_seq_big,
    legendre,
)

__all__ = [
    "StateLabel",
    "FockCoefficients",
    "normalization",
    "norm_inverse_square_series",
    "fock_coefficient",
    "fock_coefficients",
    "fock_coefficient_squeezed_jacobi",
    "displaced_fock_coefficient",
    "psi_q",
    "psi_p",
    "bargmann",
]

LN2 = math.log(2.0)
SMALL_ZETA = 1e-10  # below this the displaced-Fock limit is used verbatim


@dataclass(frozen=True)
class StateLabel:
    """Labels one state |beta, n; zeta> (with its hbar for wavefunctions).

    Only normalizable labels (|zeta| < 1) are constructible; the |zeta| >= 1
    members of the family are not supported.
    """

    beta: complex
    n: int
    zeta: complex
    hbar: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "beta", complex(self.beta))
        object.__setattr__(self, "zeta", complex(self.zeta))
        object.__setattr__(self, "hbar", float(self.hbar))
        if self.n != int(self.n) or self.n < 0:
            raise ValueError(f"excitation number must be a nonnegative integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        if self.hbar <= 0:
            raise ValueError("hbar must be positive")
        if abs(self.zeta) >= 1:
            raise SqueezeParameterError(
                f"|zeta| = {abs(self.zeta)} >= 1: state is not normalizable")

    @property
    def zeta_abs_sq(self) -> float:
        return abs(self.zeta) ** 2


@dataclass(frozen=True)
class FockCoefficients:
    """Fock expansion <m|state> for m = 0..cutoff.  ``tail_mass`` is the
    probability weight beyond the cutoff (computed against the exact norm,
    whether or not the coefficients themselves were scaled)."""

    coeffs: np.ndarray
    cutoff: int
    normalized: bool
    tail_mass: float


def normalization(n: int, zeta_abs: float) -> float:
    """Normalization constant N_n(|zeta|), with

        N_n^-2 = sqrt((1+y)/(1-y)) P_n((1+y)/(1-y)),   y = |zeta|^2.
    """
    if not 0 <= zeta_abs < 1:
        raise SqueezeParameterError(f"need 0 <= |zeta| < 1, got {zeta_abs}")
    y = zeta_abs**2
    arg = (1 + y) / (1 - y)
    inv_sq = math.sqrt(arg) * float(np.real(legendre(n, arg)))
    return 1.0 / math.sqrt(inv_sq)


def norm_inverse_square_series(n: int, zeta_abs: float) -> float:
    """N_n^-2 from the direct excitation series

        ((1+y)/(1-y))^(n+1/2) sum_k n! / (k!^2 (n-2k)!) (|zeta|/(1+y))^(2k),

    an independent route against the Legendre closed form."""
    if not 0 <= zeta_abs < 1:
        raise SqueezeParameterError(f"need 0 <= |zeta| < 1, got {zeta_abs}")
    y = zeta_abs**2
    total = 0.0
    for k in range(n // 2 + 1):
        total += (math.factorial(n)
                  / (math.factorial(k) ** 2 * math.factorial(n - 2 * k))
                  * (zeta_abs / (1 + y)) ** (2 * k))
    return ((1 + y) / (1 - y)) ** (n + 0.5) * total


# ---------------------------------------------------------------------------
# Fock coefficients
# ---------------------------------------------------------------------------

def displaced_fock_coefficient(beta: complex, n: int, m: int) -> complex:
    """<m | D(beta) | n> (the zeta = 0 member of the family), through the
    associated Laguerre closed form; evaluated in log magnitude so large m
    underflow gracefully instead of overflowing factorials."""
    beta = complex(beta)
    if beta == 0:
        return 1.0 + 0.0j if m == n else 0.0 + 0.0j
    x = abs(beta) ** 2
    if m >= n:
        lag = complex(assoc_laguerre(n, m - n, x))
        lnmag = -0.5 * x + 0.5 * (math.lgamma(n + 1) - math.lgamma(m + 1)) + (m - n) * math.log(abs(beta))
        phase = cmath.exp(1j * (m - n) * cmath.phase(beta))
    else:
        lag = complex(assoc_laguerre(m, n - m, x))
        lnmag = -0.5 * x + 0.5 * (math.lgamma(m + 1) - math.lgamma(n + 1)) + (n - m) * math.log(abs(beta))
        phase = cmath.exp(1j * (n - m) * cmath.phase(-beta.conjugate()))
    if lag == 0:
        return 0.0 + 0.0j
    lnmag += math.log(abs(lag))
    if lnmag < -745.0:
        return 0.0 + 0.0j
    return math.exp(lnmag) * phase * (lag / abs(lag))


def _fock_coeff_batch(label: StateLabel, cutoff: int) -> np.ndarray:
    """<m|beta, n; zeta> for m = 0..cutoff from the closed double-Hermite sum

        (1+y)^(1/4) e^(-(beta+zeta beta*) beta*/2) (-1)^n / sqrt(m! n!) *
        sum_j (-1)^j m! n! / (j!(m-j)!(n-j)!) (1+y)^(j/2) 2^(2j-m-n)
              h_{m-j}(beta + zeta beta*, 2 zeta) h_{n-j}(sqrt(1+y) beta*, 2 zeta*)

    assembled in log magnitude (cutoffs of several hundred are routine)."""
    beta, n, zeta = label.beta, label.n, label.zeta
    y = abs(zeta) ** 2
    out = np.zeros(cutoff + 1, dtype=complex)

    ha_m, ha_e = hermite_scaled_seq_big(cutoff, beta + zeta * beta.conjugate(), 2.0 * zeta)
    hb_m, hb_e = hermite_scaled_seq_big(n, math.sqrt(1.0 + y) * beta.conjugate(),
                                        2.0 * zeta.conjugate())

    pref_exp = -(beta + zeta * beta.conjugate()) * beta.conjugate() / 2.0
    ln_pref = 0.25 * math.log1p(y) + pref_exp.real
    ph_pref = cmath.exp(1j * pref_exp.imag) * (-1.0) ** n

    lg = [math.lgamma(k + 1) for k in range(cutoff + n + 2)]
    for m in range(cutoff + 1):
        lnmags = []
        phases = []
        for j in range(min(m, n) + 1):
            ha, hb = ha_m[m - j], hb_m[n - j]
            if ha == 0 or hb == 0:
                continue
            lnmag = (ln_pref
                     + 0.5 * (lg[m] + lg[n]) - lg[j] - lg[m - j] - lg[n - j]
                     + 0.5 * j * math.log1p(y) + (2 * j - m - n) * LN2
                     + math.log(abs(ha)) + float(ha_e[m - j]) * LN2
                     + math.log(abs(hb)) + float(hb_e[n - j]) * LN2)
            phase = (-1.0) ** j * ph_pref * (ha / abs(ha)) * (hb / abs(hb))
            lnmags.append(lnmag)
            phases.append(phase)
        if not lnmags:
            continue
        top = max(lnmags)
        if top < -745.0:
            continue
        if top > 700.0:
            raise ConsistencyError("coefficient assembly overflow; parameters out of range")
        out[m] = math.exp(top) * sum(p * math.exp(l - top) for l, p in zip(lnmags, phases))
    return out


def fock_coefficient(label: StateLabel, m: int) -> complex:
    """Single Fock amplitude <m | beta, n; zeta> (unnormalized state).

    For |zeta| below 1e-10 the displaced-Fock (Laguerre) limit is used; the
    two routes agree there to well below the crossover error.
    """
    if m < 0 or m != int(m):
        raise ValueError("Fock index must be a nonnegative integer")
    if abs(label.zeta) < SMALL_ZETA:
        return displaced_fock_coefficient(label.beta, label.n, int(m))
    return complex(_fock_coeff_batch(label, int(m))[int(m)])


def fock_coefficients(label: StateLabel, cutoff: int, normalize: bool = False) -> FockCoefficients:
    """Fock amplitudes for m = 0..cutoff, optionally scaled to the unit-norm
    state.  The reported ``tail_mass`` is 1 - N_n^2 sum |c_m|^2, i.e. the
    weight of the normalized state beyond the cutoff."""
    if cutoff < 0:
        raise ValueError("cutoff must be nonnegative")
    if abs(label.zeta) < SMALL_ZETA:
        coeffs = np.array([displaced_fock_coefficient(label.beta, label.n, m)
                           for m in range(cutoff + 1)])
    else:
        coeffs = _fock_coeff_batch(label, cutoff)
    nn = normalization(label.n, abs(label.zeta))
    captured = nn**2 * float(np.sum(np.abs(coeffs) ** 2))
    tail = max(0.0, 1.0 - captured)
    if normalize:
        coeffs = coeffs * nn
    return FockCoefficients(coeffs=coeffs, cutoff=cutoff, normalized=normalize, tail_mass=tail)


def fock_coefficient_squeezed_jacobi(n: int, m: int, zeta: complex) -> complex:
    """<n+2m | 0, n; zeta> in its equal-index Jacobi closed form

        (1+y)^(1/4) sqrt((n+2m)! n!) / (2^m (n+m)!) (-zeta)^m
            P_n^(m,m)(sqrt(1+y)),

    valid for the undisplaced states; odd offsets vanish."""
    from .polymath import jacobi

    if m < 0:
        raise ValueError("offset must be nonnegative here")
    y = abs(zeta) ** 2
    pref = ((1 + y) ** 0.25
            * math.exp(0.5 * (math.lgamma(n + 2 * m + 1) + math.lgamma(n + 1))
                       - m * LN2 - math.lgamma(n + m + 1)))
    return pref * (-zeta) ** m * complex(jacobi(n, m, m, math.sqrt(1 + y)))


# ---------------------------------------------------------------------------
# wavefunctions
# ---------------------------------------------------------------------------

def psi_q(label: StateLabel, q):
    """Coordinate wavefunction <q | beta, n; zeta> (unnormalized state);
    ``q`` may be a scalar or array, in units where [q] = sqrt(hbar)."""
    beta, n, zeta, hbar = label.beta, label.n, label.zeta, label.hbar
    if abs(1.0 - zeta) < 1e-14:
        raise SqueezeParameterError("coordinate representation singular at zeta = 1")
    q = np.asarray(q, dtype=float)
    y = abs(zeta) ** 2
    shift = math.sqrt(hbar / 2.0) * (beta + beta.conjugate()).real
    x = q - shift
    w = (1.0 - zeta) * (1.0 + zeta.conjugate())
    herm = np.asarray(hermite_scaled(n, math.sqrt((1 + y) / hbar) * x, w), dtype=complex)
    pref = (1.0 / math.sqrt(2.0**n * math.factorial(n))
            * (1.0 - zeta) ** (-n)
            * ((1 + y) / (hbar * math.pi)) ** 0.25
            / np.sqrt(1.0 - zeta))
    expo = (-(1 + zeta) / (1 - zeta) * x * x / (2 * hbar)
            + (beta - beta.conjugate()) * q / math.sqrt(2 * hbar)
            - (beta**2 - beta.conjugate() ** 2) / 4.0)
    out = pref * herm * np.exp(expo)
    return complex(out) if out.shape == () else out


def psi_p(label: StateLabel, p):
    """Momentum wavefunction <p | beta, n; zeta> (unnormalized state)."""
    beta, n, zeta, hbar = label.beta, label.n, label.zeta, label.hbar
    if abs(1.0 + zeta) < 1e-14:
        raise SqueezeParameterError("momentum representation singular at zeta = -1")
    p = np.asarray(p, dtype=float)
    y = abs(zeta) ** 2
    shift = 1j * math.sqrt(hbar / 2.0) * (beta - beta.conjugate())
    v = p + shift  # complex displacement of the momentum argument
    w = (1.0 + zeta) * (1.0 - zeta.conjugate())
    herm = np.asarray(hermite_scaled(n, math.sqrt((1 + y) / hbar) * v, w), dtype=complex)
    pref = ((-1j) ** n / math.sqrt(2.0**n * math.factorial(n))
            * (1.0 + zeta) ** (-n)
            * ((1 + y) / (hbar * math.pi)) ** 0.25
            / np.sqrt(1.0 + zeta))
    expo = (-(1 - zeta) / (1 + zeta) * v * v / (2 * hbar)
            - 1j * (beta + beta.conjugate()) * p / math.sqrt(2 * hbar)
            + (beta**2 - beta.conjugate() ** 2) / 4.0)
    out = pref * herm * np.exp(expo)
    return complex(out) if out.shape == () else out


def bargmann(label: StateLabel, alpha_conj: complex) -> complex:
    """Bargmann function f(alpha*) = e^(|alpha|^2/2) <alpha | beta, n; zeta>:

        (1+y)^(1/4) exp(alpha* beta - zeta (alpha*-beta*)^2 / 2 - |beta|^2/2)
            * h_n(sqrt((1+y)/2) (alpha* - beta*), zeta*) / sqrt(2^n n!).
    """
    beta, n, zeta = label.beta, label.n, label.zeta
    ac = complex(alpha_conj)
    y = abs(zeta) ** 2
    diff = ac - beta.conjugate()
    herm = complex(hermite_scaled(n, cmath.sqrt((1 + y) / 2.0) * diff, zeta.conjugate()))
    pref = (1 + y) ** 0.25 / math.sqrt(2.0**n * math.factorial(n))
    return pref * cmath.exp(ac * beta - zeta / 2.0 * diff * diff - abs(beta) ** 2 / 2.0) * herm
