"""Wigner and Husimi phase-space densities of the normalized states, plus
grid sampling and the squeezing-ellipse geometry.

Conventions: densities are over the canonical pair (q, p) and integrate to 1
with measure dq dp.  The complex-argument Wigner variant follows the
alpha = (q + ip)/sqrt(2 hbar) change of variables, i.e. it is 2*hbar times
the (q, p) density so that it integrates to 1 over d^2alpha.  A displacement
beta only translates the distributions, so general beta is evaluated by
shifting the phase-space point before applying the beta = 0 closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._errors import ConsistencyError, SqueezeParameterError
from .hermite2v import SymMatrix2, hermite2_given_zeta
from .polymath import hermite_scaled_seq, legendre
from .states import StateLabel, normalization

__all__ = [
    "PhaseGrid",
    "wigner",
    "wigner_hermite_route",
    "wigner_complex",
    "husimi_q",
    "grid_eval",
    "squeeze_axes",
]


@dataclass(frozen=True)
class PhaseGrid:
    """Rectangular (q, p) grid with samples stored row-major in q
    (flat index = iq * np + ip); axes include both endpoints."""

    q_min: float
    q_max: float
    p_min: float
    p_max: float
    nq: int
    np: int
    values: np.ndarray

    def __post_init__(self):
        if not (self.q_min < self.q_max and self.p_min < self.p_max):
            raise ValueError("grid ranges must be increasing")
        if self.nq < 1 or self.np < 1:
            raise ValueError("grid sizes must be positive")
        if self.values.shape != (self.nq * self.np,):
            raise ValueError("values must be a flat array of length nq*np")

    def q_axis(self):
        return np.linspace(self.q_min, self.q_max, self.nq)

    def p_axis(self):
        return np.linspace(self.p_min, self.p_max, self.np)

    def as_matrix(self):
        return self.values.reshape(self.nq, self.np)


def _shifted(label: StateLabel, q, p):
    """Remove the displacement: the density of |beta,n;zeta> at (q,p) is the
    density of |0,n;zeta> at the shifted point."""
    q0 = math.sqrt(2.0 * label.hbar) * label.beta.real
    p0 = math.sqrt(2.0 * label.hbar) * label.beta.imag
    return np.asarray(q, dtype=float) - q0, np.asarray(p, dtype=float) - p0


def wigner(label: StateLabel, q, p):
    """Wigner density W(q, p) of the normalized state, from the closed
    Hermite series

        W = 1/(pi hbar) e^(-|G|^2/((1-y) hbar)) (-(1+y)/(1-y))^n / P_n(...)
            sum_j (-1)^j n!/(j!^2 (n-j)!) (1+y)^-j |h_j(X, zeta)|^2

    with G = (1+zeta) q + i (1-zeta) p at the displacement-shifted point and
    X = sqrt((1+y)/(2 (1-y) hbar)) G.  Real by construction; scalars or
    arrays accepted.
    """
    zeta, n, hbar = label.zeta, label.n, label.hbar
    y = abs(zeta) ** 2
    qs, ps = _shifted(label, q, p)
    g = (1.0 + zeta) * qs + 1j * (1.0 - zeta) * ps
    x = np.sqrt((1.0 + y) / (2.0 * (1.0 - y) * hbar)) * g
    hs = hermite_scaled_seq(n, x, zeta)
    total = np.zeros(np.shape(x), dtype=float)
    for j in range(n + 1):
        coeff = math.factorial(n) / (math.factorial(j) ** 2 * math.factorial(n - j))
        total += (-1.0) ** j * coeff * (1.0 + y) ** (-j) * np.abs(np.asarray(hs[j])) ** 2
    arg = (1.0 + y) / (1.0 - y)
    pref = (-arg) ** n / float(np.real(legendre(n, arg)))
    out = (np.exp(-np.abs(g) ** 2 / ((1.0 - y) * hbar)) / (math.pi * hbar)) * pref * total
    return float(out) if out.shape == () else out


def wigner_hermite_route(label: StateLabel, q: float, p: float,
                         residue_tol: float = 1e-10) -> float:
    """W(q, p) through the two-variable Hermite polynomial of the underlying
    Gauss integral (the second, independent closed route).

    The small imaginary residue left by complex arithmetic is checked
    against ``residue_tol`` (relative) and discarded; a larger residue
    raises ``ConsistencyError``.
    """
    zeta, n, hbar = label.zeta, label.n, label.hbar
    y = abs(zeta) ** 2
    qs, ps = _shifted(label, float(q), float(p))
    qs, ps = float(qs), float(ps)

    c1 = np.sqrt((1.0 + y) / ((1.0 - zeta) * (1.0 + zeta.conjugate()) * hbar))
    c2 = np.conj(c1)
    gcoef = (1.0 - y) / (abs(1.0 - zeta) ** 2 * hbar)
    s = ((zeta - zeta.conjugate()) * qs + 1j * abs(1.0 - zeta) ** 2 * ps) / (1.0 - y)
    mm = gcoef / (c2 * c2)
    lam = -c1 / c2
    dd = 2.0 * c1 * qs
    cc = 2.0 * gcoef * (qs + s) / c2
    R = SymMatrix2(2.0 * (1.0 - 1.0 / mm), -2.0 * lam / mm, 2.0 * (1.0 - lam * lam / mm))
    z1 = cc / mm
    z2 = lam * cc / mm + 2.0 * dd
    # the two displaced-Gaussian exponentials cancel algebraically, so the
    # integral reduces to 2 sqrt(pi/M) H_nn / c2
    b_int = 2.0 * np.sqrt(np.pi / mm) * hermite2_given_zeta(R, z1, z2, n, n) / c2

    nsq = normalization(n, abs(zeta)) ** 2
    pref = (nsq / (2.0**n * math.factorial(n))
            * (abs(1.0 + zeta) / abs(1.0 - zeta)) ** n
            * math.sqrt((1.0 + y) / (abs(1.0 - zeta) ** 2 * hbar * math.pi))
            * math.exp(-abs((1.0 + zeta) * qs + 1j * (1.0 - zeta) * ps) ** 2 / ((1.0 - y) * hbar))
            / (2.0 * hbar * math.pi))
    val = complex(pref * b_int)
    scale = max(abs(val), 1e-6 / (math.pi * hbar))
    if abs(val.imag) > residue_tol * scale:
        raise ConsistencyError(f"Wigner imaginary residue {val.imag:.3e} above tolerance")
    return val.real


def wigner_complex(label: StateLabel, alpha: complex) -> float:
    """Wigner density in the complex parametrization alpha = (q+ip)/sqrt(2
    hbar): equals 2*hbar*wigner at the corresponding point, normalized so
    that the integral over d^2alpha is 1 (vacuum peak 2/pi)."""
    alpha = complex(alpha)
    root = math.sqrt(2.0 * label.hbar)
    return 2.0 * label.hbar * float(wigner(label, root * alpha.real, root * alpha.imag))


def husimi_q(label: StateLabel, q, p):
    """Husimi density Q(q, p) >= 0 of the normalized state,

        Q = sqrt(1-y)/(2 pi hbar P_n((1+y)/(1-y)) 2^n n!)
            e^(-(|u|^2 + Re(zeta* u^2))) |h_n(sqrt((1+y)/2) u, zeta)|^2

    with u = alpha - beta and alpha = (q + ip)/sqrt(2 hbar)."""
    zeta, n, hbar = label.zeta, label.n, label.hbar
    y = abs(zeta) ** 2
    q = np.asarray(q, dtype=float)
    p = np.asarray(p, dtype=float)
    u = (q + 1j * p) / math.sqrt(2.0 * hbar) - label.beta
    herm = np.asarray(hermite_scaled_seq(n, math.sqrt((1.0 + y) / 2.0) * u, zeta)[n])
    arg = (1.0 + y) / (1.0 - y)
    expo = -(np.abs(u) ** 2 + np.real(zeta.conjugate() * u * u))
    out = (math.sqrt(1.0 - y) / math.pi
           * np.exp(expo) * np.abs(herm) ** 2
           / (2.0**n * math.factorial(n) * float(np.real(legendre(n, arg))))
           / (2.0 * hbar))
    return float(out) if out.shape == () else out


def grid_eval(label: StateLabel, which: str, q_min: float, q_max: float,
              p_min: float, p_max: float, nq: int, np_: int) -> PhaseGrid:
    """Sample ``wigner`` or ``husimi`` on a rectangular grid; output is
    row-major in q and deterministic (points are independent, so any
    evaluation order gives the same array)."""
    if which not in ("wigner", "husimi"):
        raise ValueError("which must be 'wigner' or 'husimi'")
    qs = np.linspace(q_min, q_max, nq)
    ps = np.linspace(p_min, p_max, np_)
    qm, pm = np.meshgrid(qs, ps, indexing="ij")
    fn = wigner if which == "wigner" else husimi_q
    vals = fn(label, qm.ravel(), pm.ravel())
    return PhaseGrid(q_min=q_min, q_max=q_max, p_min=p_min, p_max=p_max,
                     nq=nq, np=np_, values=np.asarray(vals, dtype=float))


def squeeze_axes(zeta_abs: float, hbar: float = 1.0):
    """Half-axis lengths (major, minor) of the squeezing ellipse,
    sqrt(hbar (1+|zeta|)/(1-|zeta|)) and its reciprocal partner."""
    if not 0 <= zeta_abs < 1:
        raise SqueezeParameterError(f"need 0 <= |zeta| < 1, got {zeta_abs}")
    if hbar <= 0:
        raise ValueError("hbar must be positive")
    x_max = math.sqrt(hbar * (1.0 + zeta_abs) / (1.0 - zeta_abs))
    x_min = math.sqrt(hbar * (1.0 - zeta_abs) / (1.0 + zeta_abs))
    return x_max, x_min
