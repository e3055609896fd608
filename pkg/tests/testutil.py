"""Shared numerical helpers for the test suite (quadrature oracles)."""

import numpy as np
from scipy.integrate import quad


def complex_quad(f, a, b, limit=400):
    """Adaptive quadrature of a complex-valued function of a real variable."""
    re, re_err = quad(lambda x: f(x).real, a, b, limit=limit)
    im, im_err = quad(lambda x: f(x).imag, a, b, limit=limit)
    return complex(re, im), re_err + im_err


def gauss_legendre_grid(a, b, npts):
    x, w = np.polynomial.legendre.leggauss(npts)
    return 0.5 * (b - a) * x + 0.5 * (b + a), 0.5 * (b - a) * w
