"""Two-variable Hermite polynomials H_mn^{R}(y1, y2) and their integrals.

The family is generated by exp(-a.R.a/2 + a.R.y) with a symmetric 2x2 matrix
R; expanding in a gives the raising recurrences

    H_{m+1,n} = zeta1 H_{m,n} - m R11 H_{m-1,n} - n R12 H_{m,n-1}
    H_{m,n+1} = zeta2 H_{m,n} - m R12 H_{m-1,n} - n R22 H_{m,n-1}

with (zeta1, zeta2) = R.y, which is how this module evaluates them.  A
regrouped product-sum route (products of scaled one-variable Hermite
polynomials, free of square-root branches), the zero-argument reductions to
Legendre/Jacobi/Gegenbauer polynomials, the antidiagonal Laguerre special
case, and the Hermite-Gauss integrals that produce these polynomials are all
provided, mostly so the test suite can play the routes against each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._errors import DivergentIntegralError, SingularMatrixError
from .polymath import assoc_laguerre, assoc_legendre, gegenbauer, hermite_scaled_seq, jacobi

__all__ = [
    "SymMatrix2",
    "GaussIntegralParams1D",
    "NdGaussParams",
    "hermite2",
    "hermite2_given_zeta",
    "hermite2_product_sum",
    "hermite2_zero",
    "hermite2_zero_via_legendre",
    "hermite2_zero_diag_legendre",
    "hermite2_zero_via_jacobi",
    "hermite2_zero_via_gegenbauer",
    "hermite2_antidiagonal_laguerre",
    "gauss_hermite_integral_1d",
    "gauss_hermite_integral_1d_product",
    "gauss_hermite_params_nd",
    "hermite_nd",
]


@dataclass(frozen=True)
class SymMatrix2:
    """Symmetric 2x2 complex matrix, stored by its three independent entries."""

    r11: complex
    r12: complex
    r22: complex

    def matrix(self):
        return np.array([[self.r11, self.r12], [self.r12, self.r22]], dtype=complex)

    def zeta(self, y1, y2):
        """The linear forms (R.y)_1, (R.y)_2 seeding the recurrences."""
        return self.r11 * y1 + self.r12 * y2, self.r12 * y1 + self.r22 * y2


def _check_orders(m, n):
    if m < 0 or n < 0 or m != int(m) or n != int(n):
        raise ValueError("Hermite orders must be nonnegative integers")
    return int(m), int(n)


def hermite2_given_zeta(R: SymMatrix2, zeta1, zeta2, m: int, n: int):
    """H_mn^{R} with the linear forms zeta = R.y supplied directly.

    Useful when y itself would require inverting R (the recurrence never
    needs y, only R.y).  ``zeta1``/``zeta2`` may be ndarrays for batched
    evaluation over many points.
    """
    m, n = _check_orders(m, n)
    z1 = np.asarray(zeta1, dtype=complex)
    z2 = np.asarray(zeta2, dtype=complex)
    col = [np.ones(np.broadcast(z1, z2).shape, dtype=complex)]
    # raise the first index along n = 0
    for i in range(m):
        nxt = z1 * col[-1]
        if i >= 1:
            nxt = nxt - i * R.r11 * col[-2]
        col.append(nxt)
    if n == 0:
        return col[m] if col[m].shape else complex(col[m])
    # raise the second index, keeping the two most recent columns
    prev = None
    cur = col
    for k in range(n):
        new = [None] * (m + 1)
        for i in range(m + 1):
            val = z2 * cur[i]
            if i >= 1:
                val = val - i * R.r12 * cur[i - 1]
            if k >= 1:
                val = val - k * R.r22 * prev[i]
            new[i] = val
        prev, cur = cur, new
    out = cur[m]
    return out if out.shape else complex(out)


def hermite2(R: SymMatrix2, y1, y2, m: int, n: int):
    """Two-variable Hermite polynomial H_mn^{R}(y1, y2) by recurrence."""
    z1, z2 = R.zeta(np.asarray(y1, dtype=complex), np.asarray(y2, dtype=complex))
    return hermite2_given_zeta(R, z1, z2, m, n)


def hermite2_product_sum(R: SymMatrix2, y1, y2, m: int, n: int) -> complex:
    """H_mn^{R}(y) as a finite sum of products of scaled one-variable
    Hermite polynomials,

        2^-((m+n)/2) sum_j (m!n!/(j!(m-j)!(n-j)!)) (-2 R12)^j
                         h_{m-j}(zeta1/sqrt2, R11) h_{n-j}(zeta2/sqrt2, R22).

    This is the classical Hermite-product expansion with every square root
    paired away, so it is total (R11 or R22 may vanish) and branch-free.
    """
    m, n = _check_orders(m, n)
    z1, z2 = R.zeta(complex(y1), complex(y2))
    ha = hermite_scaled_seq(m, z1 / math.sqrt(2.0), R.r11)
    hb = hermite_scaled_seq(n, z2 / math.sqrt(2.0), R.r22)
    total = 0.0 + 0.0j
    for j in range(min(m, n) + 1):
        coeff = (math.factorial(m) * math.factorial(n)
                 / (math.factorial(j) * math.factorial(m - j) * math.factorial(n - j)))
        total += coeff * (-2.0 * R.r12) ** j * complex(ha[m - j]) * complex(hb[n - j])
    return total * 2.0 ** (-(m + n) / 2.0)


# ----------------------------------------------------------------------------
# zero-argument values
# ----------------------------------------------------------------------------

def hermite2_zero(R: SymMatrix2, m: int, n: int) -> complex:
    """H_mn^{R}(0, 0) from its explicit power sum; zero for odd m + n.

    The sum is arranged as a polynomial in the matrix entries (no square
    roots), equivalent to

        (R11^m R22^n / 2^(m+n))^(1/2) *
        sum_l (-1)^((m+n)/2) m! n! (2r)^(mu-2l) / (l! (l+s)! (mu-2l)!)

    with r = R12/sqrt(R11 R22), mu = min(m,n), s = |m-n|/2.
    """
    m, n = _check_orders(m, n)
    if (m + n) % 2 == 1:
        return 0.0 + 0.0j
    mu = min(m, n)
    s = abs(m - n) // 2
    p11 = (m - mu) // 2  # extra whole powers of R11 once r is unfolded
    p22 = (n - mu) // 2
    sign = (-1.0) ** ((m + n) // 2)
    total = 0.0 + 0.0j
    for l in range(mu // 2 + 1):
        coeff = (math.factorial(m) * math.factorial(n)
                 / (math.factorial(l) * math.factorial(l + s) * math.factorial(mu - 2 * l)))
        total += (coeff * 2.0 ** (mu - 2 * l) * R.r12 ** (mu - 2 * l)
                  * R.r11 ** (p11 + l) * R.r22 ** (p22 + l))
    return sign * 2.0 ** (-(m + n) / 2.0) * total


def _r_ratio(R: SymMatrix2):
    return R.r12 / np.sqrt(complex(R.r11 * R.r22))


def hermite2_zero_via_legendre(R: SymMatrix2, m: int, n: int) -> complex:
    """Zero-argument value through the associated Legendre function.

    Principal square roots throughout; for odd |m-n|/2 (and other fractional
    exponents) the result can differ from ``hermite2_zero`` by a root-of-unity
    factor, so callers normally compare moduli.
    """
    m, n = _check_orders(m, n)
    if (m + n) % 2 == 1:
        return 0.0 + 0.0j
    mu = min(m, n)
    r = _r_ratio(R)
    w = r * r - 1.0
    arg = r / np.sqrt(w)
    val = assoc_legendre((m + n) // 2, abs(m - n) // 2, arg)
    return (math.factorial(mu) * (-1.0) ** ((m + n) // 2)
            * R.r11 ** (m / 2.0) * R.r22 ** (n / 2.0) * w ** ((m + n) / 4.0) * complex(val))


def hermite2_zero_diag_legendre(R: SymMatrix2, n: int) -> complex:
    """H_nn^{R}(0,0) = n! (-det R)^(n/2) P_n(-R12 / sqrt(-det R)),
    with the square root paired against the Legendre parity (branch-free)."""
    _, n = _check_orders(n, n)
    neg_det = R.r12 * R.r12 - R.r11 * R.r22
    from .polymath import legendre_scaled

    return math.factorial(n) * complex(legendre_scaled(n, -R.r12, neg_det))


def hermite2_zero_via_jacobi(R: SymMatrix2, m: int, n: int) -> complex:
    """Zero-argument value through an equal-index Jacobi polynomial
    (principal branches; same caveat as the Legendre route)."""
    m, n = _check_orders(m, n)
    if (m + n) % 2 == 1:
        return 0.0 + 0.0j
    mu = min(m, n)
    s = abs(m - n) // 2
    r = _r_ratio(R)
    w = r * r - 1.0
    arg = r / np.sqrt(w)
    pref = (math.factorial(m) * math.factorial(n) * (-1.0) ** ((m + n) // 2)
            / (2.0**s * math.factorial((m + n) // 2)))
    inner = np.sqrt(complex(R.r11**m * R.r22**n * w**mu))
    return pref * inner * complex(jacobi(mu, s, s, arg))


def hermite2_zero_via_gegenbauer(R: SymMatrix2, m: int, n: int) -> complex:
    """Zero-argument value through a Gegenbauer polynomial (principal
    branches; same caveat as the Legendre route)."""
    m, n = _check_orders(m, n)
    if (m + n) % 2 == 1:
        return 0.0 + 0.0j
    mu = min(m, n)
    s = abs(m - n) // 2
    r = _r_ratio(R)
    w = r * r - 1.0
    arg = r / np.sqrt(w)
    pref = (math.factorial(mu) * math.factorial(abs(m - n)) * (-1.0) ** ((m + n) // 2)
            / (2.0**s * math.factorial(s)))
    inner = np.sqrt(complex(R.r11**m * R.r22**n * w**mu))
    return pref * inner * complex(gegenbauer(mu, (abs(m - n) + 1) / 2.0, arg))


def hermite2_antidiagonal_laguerre(t, y1, y2, m: int, n: int) -> complex:
    """H_mn for R = t * offdiagonal(1, 1), reduced to an associated Laguerre
    polynomial:  min(m,n)! t^max(m,n) (-1)^min(m,n) y1^(n-m)+ y2^(m-n)+
    L_min^|m-n|(t y1 y2), where (k)+ keeps only positive exponents."""
    m, n = _check_orders(m, n)
    t = complex(t)
    y1 = complex(y1)
    y2 = complex(y2)
    mu, nu = min(m, n), max(m, n)
    val = assoc_laguerre(mu, abs(m - n), t * y1 * y2)
    return (math.factorial(mu) * t**nu * (-1.0) ** mu
            * y1 ** max(n - m, 0) * y2 ** max(m - n, 0) * complex(val))


# ----------------------------------------------------------------------------
# Hermite-Gauss integrals
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class GaussIntegralParams1D:
    """Parameters of integral( H_m(x) H_n(lam*x + d) exp(-M x^2 + c x) dx );
    convergence requires Re(M) > 0."""

    lam: complex
    d: complex
    M: complex
    c: complex


def _gauss_1d_matrix(p: GaussIntegralParams1D):
    M = complex(p.M)
    if M.real <= 0:
        raise DivergentIntegralError(f"integral diverges: Re(M) = {M.real} <= 0")
    lam = complex(p.lam)
    R = SymMatrix2(2.0 * (1.0 - 1.0 / M), -2.0 * lam / M, 2.0 * (1.0 - lam * lam / M))
    z1 = p.c / M
    z2 = lam * p.c / M + 2.0 * p.d
    return R, z1, z2


def gauss_hermite_integral_1d(m: int, n: int, p: GaussIntegralParams1D) -> complex:
    """Closed form sqrt(pi/M) exp(c^2/4M) H_mn^{R}(y) of the 1-D
    Hermite-Gauss integral; H is evaluated from R.y directly, so a singular
    R is harmless here."""
    R, z1, z2 = _gauss_1d_matrix(p)
    M = complex(p.M)
    h = hermite2_given_zeta(R, z1, z2, m, n)
    return np.sqrt(np.pi / M) * np.exp(p.c * p.c / (4.0 * M)) * complex(h)


def gauss_hermite_integral_1d_product(m: int, n: int, p: GaussIntegralParams1D) -> complex:
    """Same integral through the expanded product of scaled one-variable
    Hermite polynomials,

        sqrt(pi/M) e^(c^2/4M) M^-((m+n)/2) sum_j C_j (2 lam)^j
            h_{m-j}(c/(2 sqrt M), M-1) h_{n-j}((lam c + 2 M d)/(2 sqrt M), M - lam^2).
    """
    m, n = _check_orders(m, n)
    M = complex(p.M)
    if M.real <= 0:
        raise DivergentIntegralError(f"integral diverges: Re(M) = {M.real} <= 0")
    lam, c, d = complex(p.lam), complex(p.c), complex(p.d)
    sqrt_m = np.sqrt(M)
    ha = hermite_scaled_seq(m, c / (2.0 * sqrt_m), M - 1.0)
    hb = hermite_scaled_seq(n, (lam * c + 2.0 * M * d) / (2.0 * sqrt_m), M - lam * lam)
    total = 0.0 + 0.0j
    for j in range(min(m, n) + 1):
        coeff = (math.factorial(m) * math.factorial(n)
                 / (math.factorial(j) * math.factorial(m - j) * math.factorial(n - j)))
        total += coeff * (2.0 * lam) ** j * complex(ha[m - j]) * complex(hb[n - j])
    return np.sqrt(np.pi / M) * np.exp(c * c / (4.0 * M)) * total * M ** (-(m + n) / 2.0)


@dataclass(frozen=True)
class NdGaussParams:
    """Assembled parameters of the N-dimensional Hermite-Gauss integral:
    the 2N x 2N symmetric matrix R, the vector z with y = R^-1 z, and y
    itself (None when R is singular; ``r_singular`` reports that case)."""

    R: np.ndarray
    z: np.ndarray
    y: np.ndarray | None
    r_singular: bool


def gauss_hermite_params_nd(S, T, M, lam, c, d) -> NdGaussParams:
    """Parameter assembly for integral( H_m^{S}(x) H_n^{T}(lam x + d)
    exp(-x.M.x + c.x) dx ) over N variables:

        R11 = S - S M^-1 S / 2,   R22 = T - T lam M^-1 lam^T T / 2,
        R12 = -(T lam M^-1 S)^T / 2,
        z1  = S M^-1 c / 2,
        z2  = T lam M^-1 c / 2 + T d.

    (The linear terms follow from matching the generating functions of the
    two Hermite families under the Gaussian integral; symmetrizing them, as
    is sometimes done, is only correct when the matrices commute.)
    Raises on singular M; a singular R is reported, not inverted.
    """
    S = np.asarray(S, dtype=complex)
    T = np.asarray(T, dtype=complex)
    M = np.asarray(M, dtype=complex)
    lam = np.asarray(lam, dtype=complex)
    c = np.asarray(c, dtype=complex).ravel()
    d = np.asarray(d, dtype=complex).ravel()
    nn = S.shape[0]
    for name, a in (("S", S), ("T", T), ("M", M)):
        if a.shape != (nn, nn) or not np.allclose(a, a.T, atol=1e-12 * max(1.0, np.abs(a).max())):
            raise ValueError(f"{name} must be a symmetric {nn}x{nn} matrix")
    try:
        minv = np.linalg.inv(M)
    except np.linalg.LinAlgError as exc:
        raise SingularMatrixError("Gaussian weight matrix M is singular") from exc

    r11 = S - 0.5 * S @ minv @ S
    r22 = T - 0.5 * T @ lam @ minv @ lam.T @ T
    r12 = -0.5 * (T @ lam @ minv @ S).T
    R = np.block([[r11, r12], [r12.T, r22]])
    z1 = 0.5 * S @ minv @ c
    z2 = 0.5 * T @ lam @ minv @ c + T @ d
    z = np.concatenate([z1, z2])

    sv = np.linalg.svd(R, compute_uv=False)
    singular = sv[-1] <= 1e-12 * max(sv[0], 1e-300)
    y = None if singular else np.linalg.solve(R, z)
    return NdGaussParams(R=R, z=z, y=y, r_singular=bool(singular))


def hermite_nd(R, y, orders) -> complex:
    """N-variable Hermite polynomial H_orders^{R}(y) by the raising
    recurrence; intended for small total degree (cost grows combinatorially)."""
    R = np.asarray(R, dtype=complex)
    y = np.asarray(y, dtype=complex).ravel()
    zeta = R @ y
    memo = {}

    def rec(k):
        if all(v == 0 for v in k):
            return 1.0 + 0.0j
        got = memo.get(k)
        if got is not None:
            return got
        i = next(ax for ax, v in enumerate(k) if v > 0)
        base = list(k)
        base[i] -= 1
        base_t = tuple(base)
        val = zeta[i] * rec(base_t)
        for j, kj in enumerate(base_t):
            if kj > 0:
                lower = list(base_t)
                lower[j] -= 1
                val -= kj * R[i, j] * rec(tuple(lower))
        memo[k] = val
        return val

    return complex(rec(tuple(int(v) for v in orders)))
