"""Classical orthogonal polynomials for complex arguments.

All evaluators use forward three-term recurrences (O(n) work, stable for the
moderate degrees this library needs).  The module also provides the scaled
Hermite polynomials h_n(x, w) = w^(n/2) H_n(x / sqrt(w)), which are plain
polynomials in (x, w) and therefore free of square-root branch choices, plus
a set of combinatorial sum identities that the rest of the library relies on;
the identity sums are evaluated in exact rational arithmetic.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

__all__ = [
    "hermite",
    "hermite_seq",
    "hermite_scaled",
    "hermite_scaled_seq",
    "hermite_scaled_seq_big",
    "legendre",
    "legendre_scaled",
    "jacobi",
    "jacobi_symmetric_series",
    "gegenbauer",
    "assoc_laguerre",
    "assoc_legendre",
    "excitation_sum",
    "interior_power_sum",
    "interior_power_sum_closed",
    "alternating_binomial_sum",
    "alternating_binomial_sum_closed",
    "gamma_half_ratio",
]


def _check_degree(n):
    if n != int(n) or n < 0:
        raise ValueError(f"polynomial degree must be a nonnegative integer, got {n!r}")
    return int(n)


# ----------------------------------------------------------------------------
# Hermite polynomials
# ----------------------------------------------------------------------------

def hermite(n: int, z) -> complex:
    """Hermite polynomial H_n(z) for complex z.

    Recurrence H_{k+1} = 2 z H_k - 2 k H_{k-1}.
    """
    return hermite_seq(n, z)[-1]


def hermite_seq(nmax: int, z):
    """All of H_0(z) .. H_nmax(z) in one recurrence pass.

    ``z`` may be a scalar or an ndarray; the returned object is a list whose
    entries have the shape of ``z``.
    """
    nmax = _check_degree(nmax)
    z = np.asarray(z, dtype=complex)
    out = [np.ones_like(z)]
    if nmax == 0:
        return out
    out.append(2.0 * z)
    for k in range(1, nmax):
        out.append(2.0 * z * out[k] - 2.0 * k * out[k - 1])
    return out


def hermite_scaled(n: int, x, w) -> complex:
    """Scaled Hermite polynomial h_n(x, w) = w^(n/2) H_n(x / sqrt(w)).

    h_n is a polynomial in both arguments (each square root cancels), so the
    value is branch-free and h_n(x, 0) = (2x)^n holds exactly.  Recurrence:
    h_{k+1} = 2 x h_k - 2 k w h_{k-1}.
    """
    return hermite_scaled_seq(n, x, w)[-1]


def hermite_scaled_seq(nmax: int, x, w):
    """All of h_0 .. h_nmax (see ``hermite_scaled``); x may be an ndarray."""
    nmax = _check_degree(nmax)
    x = np.asarray(x, dtype=complex)
    w = complex(w)
    out = [np.ones_like(x)]
    if nmax == 0:
        return out
    out.append(2.0 * x)
    for k in range(1, nmax):
        out.append(2.0 * x * out[k] - 2.0 * k * w * out[k - 1])
    return out


def hermite_scaled_seq_big(nmax: int, x: complex, w: complex):
    """Scaled Hermite values with overflow protection.

    Returns (mantissas, exponents): h_k = mantissas[k] * 2**exponents[k].
    Needed when degrees reach a few hundred, where the raw values overflow
    double precision.
    """
    nmax = _check_degree(nmax)
    x = complex(x)
    w = complex(w)
    mant = np.empty(nmax + 1, dtype=complex)
    expo = np.zeros(nmax + 1, dtype=np.int64)
    mant[0] = 1.0
    if nmax == 0:
        return mant, expo
    mant[1] = 2.0 * x
    for k in range(1, nmax):
        # bring h_{k-1} to the scale of h_k before combining
        prev = mant[k - 1] * 2.0 ** float(expo[k - 1] - expo[k])
        val = 2.0 * x * mant[k] - 2.0 * k * w * prev
        e = expo[k]
        a = abs(val)
        if a != 0.0 and (a > 2.0**200 or a < 2.0**-200):
            shift = int(math.floor(math.log2(a)))
            val *= 2.0 ** float(-shift)
            e += shift
        mant[k + 1] = val
        expo[k + 1] = e
    return mant, expo


# ----------------------------------------------------------------------------
# Legendre, Jacobi, Gegenbauer
# ----------------------------------------------------------------------------

def legendre(n: int, z) -> complex:
    """Legendre polynomial P_n(z), Bonnet recurrence."""
    n = _check_degree(n)
    z = complex(z)
    p_prev, p = 1.0 + 0.0j, z
    if n == 0:
        return p_prev
    for k in range(1, n):
        p_prev, p = p, ((2 * k + 1) * z * p - k * p_prev) / (k + 1)
    return p


def legendre_scaled(n: int, x, w) -> complex:
    """w^(n/2) P_n(x / sqrt(w)), branch-free by the parity of P_n."""
    n = _check_degree(n)
    x = complex(x)
    w = complex(w)
    p_prev, p = 1.0 + 0.0j, x
    if n == 0:
        return p_prev
    for k in range(1, n):
        p_prev, p = p, ((2 * k + 1) * x * p - k * w * p_prev) / (k + 1)
    return p


def jacobi(n: int, a: float, b: float, z) -> complex:
    """Jacobi polynomial P_n^(a,b)(z) for complex z, upper indices a, b > -1."""
    n = _check_degree(n)
    if a <= -1 or b <= -1:
        raise ValueError("Jacobi upper indices must exceed -1")
    z = complex(z)
    p_prev = 1.0 + 0.0j
    if n == 0:
        return p_prev
    p = ((a + b + 2) * z + (a - b)) / 2.0
    for k in range(2, n + 1):
        den = 2.0 * k * (k + a + b) * (2 * k + a + b - 2)
        c1 = (2 * k + a + b - 1) * (a * a - b * b)
        c2 = (2 * k + a + b - 1) * (2 * k + a + b) * (2 * k + a + b - 2)
        c3 = 2.0 * (k + a - 1) * (k + b - 1) * (2 * k + a + b)
        p_prev, p = p, ((c1 + c2 * z) * p - c3 * p_prev) / den
    return p


def jacobi_symmetric_series(n: int, j: int, z) -> complex:
    """Equal-index Jacobi polynomial P_n^(j,j)(z) from its explicit power sum

        z^n * sum_l  (n+j)! / (l! (l+j)! (n-2l)!) * ((z^2-1)/(4 z^2))^l ,

    used as an independent route against the recurrence (z != 0).
    """
    n = _check_degree(n)
    z = complex(z)
    if z == 0:
        raise ValueError("power-sum form needs z != 0; use jacobi() instead")
    total = 0.0 + 0.0j
    ratio = (z * z - 1.0) / (4.0 * z * z)
    for l in range(n // 2 + 1):
        coeff = Fraction(math.factorial(n + j),
                         math.factorial(l) * math.factorial(l + j) * math.factorial(n - 2 * l))
        total += float(coeff) * ratio**l
    return z**n * total


def gegenbauer(n: int, lam: float, z) -> complex:
    """Gegenbauer polynomial C_n^lam(z), lam > -1/2."""
    n = _check_degree(n)
    if lam <= -0.5:
        raise ValueError("Gegenbauer parameter must exceed -1/2")
    z = complex(z)
    c_prev = 1.0 + 0.0j
    if n == 0:
        return c_prev
    c = 2.0 * lam * z
    for k in range(2, n + 1):
        c_prev, c = c, (2.0 * z * (k + lam - 1) * c - (k + 2 * lam - 2) * c_prev) / k
    return c


def assoc_laguerre(n: int, nu: int, z) -> complex:
    """Associated Laguerre polynomial L_n^nu(z); requires n + nu >= 0."""
    n = _check_degree(n)
    if n + nu < 0:
        raise ValueError("Laguerre needs n + nu >= 0")
    z = complex(z)
    l_prev = 1.0 + 0.0j
    if n == 0:
        return l_prev
    l = 1.0 + nu - z
    for k in range(1, n):
        l_prev, l = l, ((2 * k + 1 + nu - z) * l - (k + nu) * l_prev) / (k + 1)
    return l


def assoc_legendre(l: int, j: int, z, negative_root: bool = False) -> complex:
    """Associated Legendre function P_l^j(z) without the Condon-Shortley phase,

        P_l^j(z) = (sqrt(1-z^2))^j * 2^(-l) *
                   sum_k (-1)^k (2l-2k)! / (k! (l-j-2k)! (l-k)!) * z^(l-j-2k).

    The square root uses the principal branch; ``negative_root`` selects the
    other sheet, which matters for odd j (complex z included).
    """
    l = _check_degree(l)
    if not 0 <= j <= l:
        raise ValueError("need 0 <= j <= l")
    z = complex(z)
    root = np.sqrt(complex(1.0 - z * z))
    if negative_root:
        root = -root
    total = 0.0 + 0.0j
    for k in range((l - j) // 2 + 1):
        coeff = Fraction((-1) ** k * math.factorial(2 * l - 2 * k),
                         math.factorial(k) * math.factorial(l - j - 2 * k) * math.factorial(l - k))
        total += float(coeff) * z ** (l - j - 2 * k)
    return root**j * total / 2.0**l


# ----------------------------------------------------------------------------
# Combinatorial sums behind the excitation-number algebra
# ----------------------------------------------------------------------------

def excitation_sum(n: int, j: int, y) -> complex:
    """The excitation-weight sum

        sum_l  (n+j)! / (l! (l+j)! (n-2l)!) * (y / (1+y)^2)^l ,

    which collapses to ((1-y)/(1+y))^n P_n^(j,j)((1+y)/(1-y)) for y != 1.
    Singular at y = -1.
    """
    n = _check_degree(n)
    if j < 0:
        raise ValueError("need j >= 0")
    y = complex(y)
    if y == -1:
        raise ValueError("singular argument y = -1")
    ratio = y / (1.0 + y) ** 2
    total = 0.0 + 0.0j
    for l in range(n // 2 + 1):
        coeff = Fraction(math.factorial(n + j),
                         math.factorial(l) * math.factorial(l + j) * math.factorial(n - 2 * l))
        total += float(coeff) * ratio**l
    return total


def gamma_half_ratio(a: int, b: int) -> Fraction:
    """Exact value of Gamma(a + 1/2) / Gamma(b + 1/2) for integers a, b >= 0.

    Uses Gamma(k + 1/2) = (2k)! sqrt(pi) / (4^k k!); the sqrt(pi) cancels.
    """
    if a < 0 or b < 0:
        raise ValueError("need nonnegative integers")
    num = Fraction(math.factorial(2 * a), 4**a * math.factorial(a))
    den = Fraction(math.factorial(2 * b), 4**b * math.factorial(b))
    return num / den


def interior_power_sum(n: int, j: int, k: int) -> Fraction:
    """Exact rational value of

        sum_{l=k}^{[n/2]}  (n+2j)! / ((l+j)! (l-k)! (n-2l)! 2^(2l)).
    """
    n = _check_degree(n)
    if not (0 <= k <= n // 2 and j >= 0):
        raise ValueError("need 0 <= k <= n//2 and j >= 0")
    total = Fraction(0)
    for l in range(k, n // 2 + 1):
        total += Fraction(math.factorial(n + 2 * j),
                          math.factorial(l + j) * math.factorial(l - k)
                          * math.factorial(n - 2 * l) * 4**l)
    return total


def interior_power_sum_closed(n: int, j: int, k: int) -> Fraction:
    """Closed form of ``interior_power_sum``:

        2^(n-2k) (2j)! Gamma(n-k+j+1/2) / (j! Gamma(j+1/2) (n-2k)!).
    """
    n = _check_degree(n)
    if not (0 <= k <= n // 2 and j >= 0):
        raise ValueError("need 0 <= k <= n//2 and j >= 0")
    return (Fraction(2) ** (n - 2 * k)
            * Fraction(math.factorial(2 * j), math.factorial(j))
            * gamma_half_ratio(n - k + j, j)
            / math.factorial(n - 2 * k))


def alternating_binomial_sum(k: int, l: int) -> Fraction:
    """Exact rational value of

        sum_r  (-1)^r / (r! (2k-r)! (l-r)! (l-2k+r)!)

    over the r with all four factorials defined.
    """
    if k < 0 or l < 0:
        raise ValueError("need k, l >= 0")
    total = Fraction(0)
    for r in range(max(0, 2 * k - l), min(2 * k, l) + 1):
        total += Fraction((-1) ** r,
                          math.factorial(r) * math.factorial(2 * k - r)
                          * math.factorial(l - r) * math.factorial(l - 2 * k + r))
    return total


def alternating_binomial_sum_closed(k: int, l: int) -> Fraction:
    """Closed form (-1)^k / (k! l! (l-k)!) of ``alternating_binomial_sum``;
    zero when l < k (empty reciprocal factorial)."""
    if k < 0 or l < 0:
        raise ValueError("need k, l >= 0")
    if l < k:
        return Fraction(0)
    return Fraction((-1) ** k,
                    math.factorial(k) * math.factorial(l) * math.factorial(l - k))
