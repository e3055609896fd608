"""Wigner and Husimi densities: peak values, bounds, normalization,
marginals, symmetries, both closed routes, oracle quadrature, grids."""

import cmath
import math

import numpy as np
import pytest

from sqstates import oracle as orc
from sqstates import quasiprob as qp
from sqstates.photonstats import moments
from sqstates.states import StateLabel, normalization, psi_q
from sqstates._errors import SqueezeParameterError
from testutil import gauss_legendre_grid

INV_PI = 1.0 / math.pi


def phase_space_mesh(label, nsig=8.0, npts=181):
    rep = moments(label)
    q0 = math.sqrt(2 * label.hbar) * label.beta.real
    p0 = math.sqrt(2 * label.hbar) * label.beta.imag
    wq = nsig * math.sqrt(rep.var_q)
    wp = nsig * math.sqrt(rep.var_p)
    qg, qw = gauss_legendre_grid(q0 - wq, q0 + wq, npts)
    pg, pw = gauss_legendre_grid(p0 - wp, p0 + wp, npts)
    QQ, PP = np.meshgrid(qg, pg, indexing="ij")
    W2 = np.outer(qw, pw)
    return QQ, PP, W2


# ---------------------------------------------------------------------------
# Wigner
# ---------------------------------------------------------------------------

def test_wigner_reference_peaks():
    assert qp.wigner(StateLabel(0, 0, 0), 0.0, 0.0) == pytest.approx(INV_PI, rel=1e-13)
    for zeta in (0.0, 0.3, 0.6j, -0.4 + 0.3j):
        got = qp.wigner(StateLabel(0, 1, zeta), 0.0, 0.0)
        assert got == pytest.approx(-INV_PI, rel=1e-12)


def test_wigner_against_oracle_quadrature():
    lab = StateLabel(1 - 0.5j, 3, 0.381966)
    st = orc.build_state(lab, 256)
    rng = np.random.default_rng(20)
    for _ in range(6):
        q, p = rng.uniform(-2.5, 2.5, size=2)
        assert qp.wigner(lab, q, p) == pytest.approx(orc.oracle_wigner(st, q, p), abs=1e-7)


def test_wigner_closed_routes_agree():
    rng = np.random.default_rng(21)
    for _ in range(20):
        lab = StateLabel(
            complex(rng.normal(), rng.normal()),
            int(rng.integers(0, 6)),
            0.6 * complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
        )
        q, p = rng.uniform(-3, 3, size=2)
        a = qp.wigner(lab, q, p)
        b = qp.wigner_hermite_route(lab, q, p)
        assert b == pytest.approx(a, rel=1e-9, abs=1e-12)


def test_wigner_parity_for_undisplaced_states():
    rng = np.random.default_rng(22)
    for n in range(5):
        lab = StateLabel(0, n, 0.45 * cmath.exp(0.8j))
        for _ in range(5):
            q, p = rng.uniform(-3, 3, size=2)
            assert qp.wigner(lab, q, p) == pytest.approx(qp.wigner(lab, -q, -p), rel=1e-12, abs=1e-15)


def test_wigner_bound():
    rng = np.random.default_rng(23)
    for _ in range(6):
        lab = StateLabel(
            complex(rng.normal(), rng.normal()),
            int(rng.integers(0, 6)),
            0.7 * complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
        )
        qs = rng.uniform(-6, 6, size=200)
        ps = rng.uniform(-6, 6, size=200)
        vals = qp.wigner(lab, qs, ps)
        assert np.max(np.abs(vals)) <= INV_PI + 1e-9


def test_wigner_normalization_by_quadrature():
    for lab in (StateLabel(0, 0, 0.3), StateLabel(1 + 1j, 2, 0.5j), StateLabel(-2, 5, 0.7)):
        QQ, PP, W2 = phase_space_mesh(lab)
        vals = qp.wigner(lab, QQ.ravel(), PP.ravel()).reshape(QQ.shape)
        assert float(np.sum(W2 * vals)) == pytest.approx(1.0, abs=1e-6)


def test_wigner_marginal_is_position_density():
    lab = StateLabel(0.8 - 0.3j, 2, 0.4 * cmath.exp(0.5j))
    rep = moments(lab)
    p0 = math.sqrt(2) * lab.beta.imag
    pg, pw = gauss_legendre_grid(p0 - 9 * math.sqrt(rep.var_p), p0 + 9 * math.sqrt(rep.var_p), 241)
    nn = normalization(lab.n, abs(lab.zeta))
    for q in (-1.0, 0.0, 0.7, 2.2):
        marg = float(np.sum(pw * qp.wigner(lab, np.full_like(pg, q), pg)))
        dens = abs(nn * psi_q(lab, q)) ** 2
        assert marg == pytest.approx(dens, abs=1e-6)


def test_wigner_complex_convention():
    assert qp.wigner_complex(StateLabel(0, 0, 0), 0) == pytest.approx(2 / math.pi, rel=1e-13)
    # even-parity excitation pins the origin value at +2/pi in this convention
    assert qp.wigner_complex(StateLabel(0, 2, 0.5), 0) == pytest.approx(2 / math.pi, rel=1e-11)
    lab = StateLabel(0.5 + 0.2j, 3, 0.4j)
    alpha = 0.3 - 0.7j
    q, p = math.sqrt(2) * alpha.real, math.sqrt(2) * alpha.imag
    assert qp.wigner_complex(lab, alpha) == pytest.approx(2 * qp.wigner(lab, q, p), rel=1e-13)


# ---------------------------------------------------------------------------
# Husimi
# ---------------------------------------------------------------------------

def test_husimi_reference_values():
    assert qp.husimi_q(StateLabel(0, 0, 0), 0.0, 0.0) == pytest.approx(1 / (2 * math.pi), rel=1e-13)
    assert qp.husimi_q(StateLabel(0, 1, 0.3), 0.0, 0.0) == pytest.approx(0.0, abs=1e-15)


def test_husimi_against_oracle():
    lab = StateLabel(2, 2, 0.381966)
    st = orc.build_state(lab, 256)
    rng = np.random.default_rng(24)
    for _ in range(6):
        q, p = rng.uniform(-2, 4, size=2)
        assert qp.husimi_q(lab, q, p) == pytest.approx(orc.oracle_husimi(st, q, p), abs=1e-8)


def test_husimi_bounds():
    rng = np.random.default_rng(25)
    cap = 1 / (2 * math.pi) + 1e-9
    for _ in range(6):
        lab = StateLabel(
            complex(rng.normal(), rng.normal()),
            int(rng.integers(0, 6)),
            0.7 * complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
        )
        qs = rng.uniform(-6, 6, size=300)
        ps = rng.uniform(-6, 6, size=300)
        vals = np.asarray(qp.husimi_q(lab, qs, ps))
        assert np.min(vals) >= 0.0
        assert np.max(vals) <= cap


def test_husimi_normalization_by_quadrature():
    for lab in (StateLabel(0, 0, 0.3), StateLabel(1 + 1j, 2, 0.5j), StateLabel(-2, 4, 0.65)):
        QQ, PP, W2 = phase_space_mesh(lab, nsig=9.0)
        vals = qp.husimi_q(lab, QQ.ravel(), PP.ravel()).reshape(QQ.shape)
        assert float(np.sum(W2 * vals)) == pytest.approx(1.0, abs=1e-6)


def test_husimi_sign_flip_rotates_by_quarter_turn():
    zeta = 0.45 * cmath.exp(0.7j)
    a = StateLabel(0, 3, -zeta)
    b = StateLabel(0, 3, zeta)
    rng = np.random.default_rng(26)
    for _ in range(25):
        q, p = rng.uniform(-3, 3, size=2)
        assert qp.husimi_q(a, q, p) == pytest.approx(qp.husimi_q(b, -p, q), rel=1e-10, abs=1e-14)


def test_husimi_hbar_scaling():
    lab = StateLabel(0, 0, 0, hbar=2.0)
    assert qp.husimi_q(lab, 0.0, 0.0) == pytest.approx(1 / (4 * math.pi), rel=1e-13)


# ---------------------------------------------------------------------------
# grids and geometry
# ---------------------------------------------------------------------------

def test_grid_center_sample():
    g = qp.grid_eval(StateLabel(0, 0, 0), "husimi", -1, 1, -1, 1, 3, 3)
    assert g.values[1 * 3 + 1] == pytest.approx(1 / (2 * math.pi), rel=1e-13)


def test_grid_contains_negative_for_first_excitation():
    for zeta in (0.0, 0.3, 0.55j):
        g = qp.grid_eval(StateLabel(0, 1, zeta), "wigner", -2, 2, -2, 2, 5, 5)
        assert g.values.min() < 0
        assert g.values.min() == pytest.approx(-INV_PI, rel=1e-12)


def test_grid_riemann_sum_near_unity():
    lab = StateLabel(0, 2, 0.381966)
    g = qp.grid_eval(lab, "wigner", -5, 5, -5, 5, 101, 101)
    dq = 10.0 / 100
    assert float(g.values.sum()) * dq * dq == pytest.approx(1.0, abs=1e-3)


def test_grid_ordering_row_major_in_q():
    lab = StateLabel(0.3, 1, 0.2)
    g = qp.grid_eval(lab, "husimi", -1, 1, -2, 2, 4, 7)
    qs, ps = g.q_axis(), g.p_axis()
    for iq in (0, 3):
        for ip in (0, 6):
            direct = qp.husimi_q(lab, qs[iq], ps[ip])
            assert g.values[iq * 7 + ip] == pytest.approx(direct, rel=1e-14)


def test_squeeze_axes():
    assert qp.squeeze_axes(0.0, 1.0) == (1.0, 1.0)
    xmax, xmin = qp.squeeze_axes(0.381966, 1.0)
    assert xmax / xmin == pytest.approx(math.sqrt(5), rel=1e-5)
    xmax, xmin = qp.squeeze_axes(0.5, 2.0)
    assert xmax == pytest.approx(math.sqrt(6), rel=1e-14)
    assert xmin == pytest.approx(math.sqrt(2.0 / 3.0), rel=1e-14)
    with pytest.raises(SqueezeParameterError):
        qp.squeeze_axes(1.0, 1.0)
