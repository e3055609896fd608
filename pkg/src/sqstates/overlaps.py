"""Scalar products between states |alpha, m; xi> and |beta, n; zeta>.

The general product reduces to the special one with a vanishing bra
displacement,

    <alpha,m;xi | beta,n;zeta>
        = exp((alpha* beta - alpha beta*)/2) <0,m;xi | beta-alpha,n;zeta>,

and the special product is a finite double-Hermite sum.  As elsewhere, the
sums are arranged in the scaled polynomials h_k(x, w) = w^(k/2) H_k(x/sqrt w),
which removes every square-root branch; xi + zeta = 0 and zeta -> 0 need no
special casing.

Two delicate constants in the equal-displacement closed forms are pinned by
the test suite against the general product and the dense oracle: the j-power
carries -(xi+zeta)/(2(1-zeta xi*)), which for xi = zeta reads
-zeta/(1-|zeta|^2).
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from ._errors import SingularPairError
from .hermite2v import SymMatrix2, hermite2
from .polymath import hermite_scaled_seq, jacobi
from .states import StateLabel

__all__ = [
    "overlap",
    "overlap_special",
    "overlap_same_zeta",
    "overlap_equal_beta",
    "overlap_equal_beta_series",
    "overlap_diag_jacobi",
    "overlap_hermite_route",
]

_SINGULAR_TOL = 1e-8


def _pair_denominator(zeta, xi):
    d = 1.0 - zeta * xi.conjugate()
    if abs(d) < _SINGULAR_TOL:
        raise SingularPairError(
            f"1 - zeta xi* = {d:.3e}: squeezing pair too close to the singular manifold")
    return d


def overlap_special(m: int, xi: complex, beta: complex, n: int, zeta: complex) -> complex:
    """<0, m; xi | beta, n; zeta> as the closed double-Hermite sum

        sqrt(K)/sqrt(D) e^(-(beta+zeta beta*)(beta*+xi* beta)/(2D)) (-1)^n
        / sqrt(2^(m+n) m! n!) * sum_j (-1)^j C_j (2K/D)^j
              h_{m-j}(Xm, (xi+zeta)/D) h_{n-j}(Xn, (xi*+zeta*)/D)

    with D = 1 - zeta xi*, K = sqrt((1+|xi|^2)(1+|zeta|^2)),
    Xm = sqrt((1+|xi|^2)/2)(beta + zeta beta*)/D and
    Xn = sqrt((1+|zeta|^2)/2)(beta* + xi* beta)/D.
    """
    if m < 0 or n < 0:
        raise ValueError("excitation numbers must be nonnegative")
    xi = complex(xi)
    zeta = complex(zeta)
    beta = complex(beta)
    d = _pair_denominator(zeta, xi)
    ax = 1.0 + abs(xi) ** 2
    az = 1.0 + abs(zeta) ** 2
    kk = math.sqrt(ax * az)
    w = xi + zeta
    xm = math.sqrt(ax / 2.0) * (beta + zeta * beta.conjugate()) / d
    xn = math.sqrt(az / 2.0) * (beta.conjugate() + xi.conjugate() * beta) / d
    ha = hermite_scaled_seq(m, xm, w / d)
    hb = hermite_scaled_seq(n, xn, w.conjugate() / d)
    total = 0.0 + 0.0j
    for j in range(min(m, n) + 1):
        cj = (math.factorial(m) * math.factorial(n)
              / (math.factorial(j) * math.factorial(m - j) * math.factorial(n - j)))
        total += (-1.0) ** j * cj * (2.0 * kk / d) ** j * complex(ha[m - j]) * complex(hb[n - j])
    pref = (math.sqrt(kk) / np.sqrt(d)
            * cmath.exp(-(beta + zeta * beta.conjugate())
                        * (beta.conjugate() + xi.conjugate() * beta) / (2.0 * d))
            * (-1.0) ** n / math.sqrt(2.0 ** (m + n) * math.factorial(m) * math.factorial(n)))
    return complex(pref) * total


def overlap(a: StateLabel, b: StateLabel) -> complex:
    """<alpha, m; xi | beta, n; zeta> (a is the bra)."""
    phase = cmath.exp((a.beta.conjugate() * b.beta - a.beta * b.beta.conjugate()) / 2.0)
    return phase * overlap_special(a.n, a.zeta, b.beta - a.beta, b.n, b.zeta)


def overlap_same_zeta(beta: complex, m: int, n: int, zeta: complex) -> complex:
    """<0, m; zeta | beta, n; zeta>, the equal-squeezing special case used by
    expectation values; must agree with ``overlap`` at xi = zeta."""
    if abs(zeta) >= 1:
        raise SingularPairError("equal-squeezing product needs |zeta| < 1")
    beta = complex(beta)
    zeta = complex(zeta)
    y = abs(zeta) ** 2
    omy = 1.0 - y
    xm = math.sqrt(1 + y) * (beta + zeta * beta.conjugate()) / (2.0 * omy)
    ha = hermite_scaled_seq(m, xm, zeta / omy)
    hb = hermite_scaled_seq(n, xm.conjugate(), zeta.conjugate() / omy)
    total = 0.0 + 0.0j
    for j in range(min(m, n) + 1):
        cj = (math.factorial(m) * math.factorial(n)
              / (math.factorial(j) * math.factorial(m - j) * math.factorial(n - j)))
        total += (-1.0) ** j * cj * ((1 + y) / omy) ** j * complex(ha[m - j]) * complex(hb[n - j])
    pref = (math.sqrt((1 + y) / omy)
            * math.exp(-abs(beta + zeta * beta.conjugate()) ** 2 / (2.0 * omy))
            * (-1.0) ** n / math.sqrt(math.factorial(m) * math.factorial(n)))
    return pref * total


def overlap_equal_beta(n: int, j: int, xi: complex, zeta: complex) -> complex:
    """<beta, n+2j; xi | beta, n; zeta>, independent of beta:

        (K/D)^(1/2) (|D|/D)^n (-(xi+zeta)/(2D))^j sqrt((n+2j)! n!)/(n+j)!
            P_n^(j,j)(K/|D|).

    Offsets of odd parity vanish identically (not represented here).
    """
    if n < 0 or j < 0:
        raise ValueError("need n, j >= 0")
    xi = complex(xi)
    zeta = complex(zeta)
    d = _pair_denominator(zeta, xi)
    kk = math.sqrt((1.0 + abs(xi) ** 2) * (1.0 + abs(zeta) ** 2))
    pref = np.sqrt(kk / d) * (abs(d) / d) ** n * (-(xi + zeta) / (2.0 * d)) ** j
    ratio = math.exp(0.5 * (math.lgamma(n + 2 * j + 1) + math.lgamma(n + 1))
                     - math.lgamma(n + j + 1))
    return complex(pref) * ratio * complex(jacobi(n, j, j, kk / abs(d)))


def overlap_equal_beta_series(n: int, j: int, xi: complex, zeta: complex) -> complex:
    """Same quantity as ``overlap_equal_beta`` from the raw double sum over
    vanishing-argument Hermite values (m = n + 2j),

        1/sqrt(m!n!) (a_x/D)^(m/2+1/4) (a_z/D)^(n/2+1/4) *
        sum_{k,l} (-1)^(k+l) m! n! / (k! l! sqrt((m-2k)!(n-2l)!))
            ((xi+zeta)/(2 a_x))^k ((xi*+zeta*)/(2 a_z))^l [m-2k = n-2l]

    with a_x = 1+|xi|^2, a_z = 1+|zeta|^2 (principal powers)."""
    m = n + 2 * j
    xi = complex(xi)
    zeta = complex(zeta)
    d = _pair_denominator(zeta, xi)
    ax = 1.0 + abs(xi) ** 2
    az = 1.0 + abs(zeta) ** 2
    total = 0.0 + 0.0j
    for k in range(m // 2 + 1):
        l2 = m - 2 * k  # common value of m-2k = n-2l
        l = (n - l2) // 2
        if l < 0 or 2 * l != n - l2:
            continue
        total += ((-1.0) ** (k + l)
                  * math.factorial(m) * math.factorial(n)
                  / (math.factorial(k) * math.factorial(l) * math.factorial(l2))
                  * ((xi + zeta) / (2.0 * ax)) ** k
                  * ((xi.conjugate() + zeta.conjugate()) / (2.0 * az)) ** l)
    pref = (np.power(ax / d, m / 2.0 + 0.25) * np.power(az / d, n / 2.0 + 0.25)
            / math.sqrt(math.factorial(m) * math.factorial(n)))
    return complex(pref) * total


def overlap_diag_jacobi(n: int, j: int, zeta: complex) -> complex:
    """<beta, n+2j; zeta | beta, n; zeta> in closed Jacobi form,

        sqrt((1+y)/(1-y)) (-zeta/(1-y))^j sqrt((n+2j)! n!)/(n+j)!
            P_n^(j,j)((1+y)/(1-y)),    y = |zeta|^2.
    """
    zeta = complex(zeta)
    y = abs(zeta) ** 2
    if y >= 1:
        raise SingularPairError("needs |zeta| < 1")
    ratio = math.exp(0.5 * (math.lgamma(n + 2 * j + 1) + math.lgamma(n + 1))
                     - math.lgamma(n + j + 1))
    return (math.sqrt((1 + y) / (1 - y)) * (-zeta / (1 - y)) ** j * ratio
            * complex(jacobi(n, j, j, (1 + y) / (1 - y))))


def overlap_hermite_route(m: int, xi: complex, beta: complex, n: int, zeta: complex) -> complex:
    """<0, m; xi | beta, n; zeta> through the two-variable Hermite polynomial
    of the underlying Gaussian integral (principal square roots, chosen
    consistently across the matrix and the prefactors).  A second route for
    cross-validation of ``overlap_special``."""
    xi = complex(xi)
    zeta = complex(zeta)
    beta = complex(beta)
    d = _pair_denominator(zeta, xi)
    ax = 1.0 + abs(xi) ** 2
    az = 1.0 + abs(zeta) ** 2
    kk = math.sqrt(ax * az)
    sa = np.sqrt(1.0 - zeta)
    sb = np.sqrt(1.0 - xi.conjugate())
    sc = np.sqrt(1.0 + zeta.conjugate())
    sd = np.sqrt(1.0 + xi)
    R = SymMatrix2(
        (2.0 / d) * sb**2 * (xi + zeta) / sd**2,
        -(2.0 / d) * (sa * sb / (sc * sd)) * kk,
        (2.0 / d) * sa**2 * (xi.conjugate() + zeta.conjugate()) / sc**2,
    )
    dbar = 1.0 - xi * zeta.conjugate()
    y1 = (sd * math.sqrt(ax) / (math.sqrt(2.0) * sb)) * (beta.conjugate() - zeta.conjugate() * beta) / dbar
    y2 = -(sc * math.sqrt(az) / (math.sqrt(2.0) * sa)) * (beta - xi * beta.conjugate()) / dbar
    pref = ((sd / sb) ** m * (sc / sa) ** n * math.sqrt(kk) / np.sqrt(d)
            / math.sqrt(2.0 ** (m + n) * math.factorial(m) * math.factorial(n))
            * cmath.exp(-(beta + zeta * beta.conjugate())
                        * (beta.conjugate() + xi.conjugate() * beta) / (2.0 * d)))
    return complex(pref * hermite2(R, y1, y2, m, n))
