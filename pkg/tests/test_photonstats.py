"""Photon distribution and moments: special-case closed forms, oracle
agreement, uncertainty relations and their phase structure."""

import cmath
import math

import numpy as np
import pytest

from sqstates import oracle as orc
from sqstates import photonstats as ps
from sqstates._errors import CutoffError, SqueezeParameterError
from sqstates.polymath import assoc_laguerre
from sqstates.states import StateLabel


def oracle_probs(label, dim=512):
    st = orc.build_state(label, dim)
    return np.abs(st.amplitudes) ** 2 / st.norm_squared()


# ---------------------------------------------------------------------------
# distribution
# ---------------------------------------------------------------------------

def test_distribution_vacuum():
    d = ps.photon_distribution(StateLabel(0, 0, 0), 8)
    assert d.probs[0] == pytest.approx(1.0)
    assert np.all(d.probs[1:] == 0)
    assert d.tail_mass == 0


def test_distribution_squeezed_vacuum_closed_form():
    for za in (0.3, 0.65):
        d = ps.photon_distribution(StateLabel(0, 0, za))
        y = za**2
        for m in range(0, (d.cutoff - 1) // 2):
            want = (math.sqrt((1 - y) / (1 + y)) * math.sqrt(1 + y)
                    * math.factorial(2 * m) / (2**m * math.factorial(m)) ** 2 * y**m)
            assert d.probs[2 * m] == pytest.approx(want, rel=1e-11, abs=1e-16)
            assert d.probs[2 * m + 1] == 0
        assert d.probs.sum() == pytest.approx(1.0, abs=1e-9)


def test_distribution_displaced_fock_laguerre():
    beta, n = 3.53533, 5
    d = ps.photon_distribution(StateLabel(beta, n, 0), 60)
    x = beta**2
    for m in (0, 3, 5, 12, 30):
        if m >= n:
            lag = float(np.real(assoc_laguerre(n, m - n, x)))
            want = math.exp(-x) * math.factorial(n) / math.factorial(m) * x ** (m - n) * lag**2
        else:
            lag = float(np.real(assoc_laguerre(m, n - m, x)))
            want = math.exp(-x) * math.factorial(m) / math.factorial(n) * x ** (n - m) * lag**2
        assert d.probs[m] == pytest.approx(want, rel=1e-10, abs=1e-14)


def test_distribution_against_oracle():
    for label in (StateLabel(3.53533, 0, 0), StateLabel(2, 3, 0.5), StateLabel(1 + 1j, 2, 0.6j)):
        d = ps.photon_distribution(label)
        want = oracle_probs(label)
        k = min(d.cutoff + 1, want.size)
        assert np.max(np.abs(d.probs[:k] - want[:k])) < 1e-9


def test_distribution_nonnegative_and_subunit():
    rng = np.random.default_rng(31)
    for _ in range(5):
        label = StateLabel(
            3 * complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
            int(rng.integers(0, 8)),
            0.7 * complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
        )
        d = ps.photon_distribution(label)
        assert np.all(d.probs >= 0)
        assert d.probs.sum() <= 1 + 1e-10
        assert d.probs.sum() + d.tail_mass == pytest.approx(1.0, abs=1e-10)


def test_distribution_cutoff_error():
    with pytest.raises(CutoffError):
        ps.photon_distribution(StateLabel(4.0, 0, 0), 6)


def test_auto_cutoff_reaches_unit_mass():
    d = ps.photon_distribution(StateLabel(3.87298, 10, 0.6))
    assert d.probs.sum() == pytest.approx(1.0, abs=1e-8)


def test_auto_cutoff_handles_tail_plateau():
    # at extreme parameters the computed tail bottoms out near the
    # coefficient rounding level; the cutoff search must settle instead of
    # doubling forever (regression)
    d = ps.photon_distribution(StateLabel(3.5 - 2.4j, 12, 0.6 + 0.59j))
    assert d.tail_mass <= 1e-8
    assert d.probs.sum() == pytest.approx(1.0, abs=1e-8)


# ---------------------------------------------------------------------------
# mean photon number
# ---------------------------------------------------------------------------

def test_mean_photon_displaced_fock_limit():
    assert ps.mean_photon(StateLabel(2j, 7, 0)) == pytest.approx(7 + 4.0, rel=1e-14)
    assert ps.mean_photon(StateLabel(5, 0, 0)) == pytest.approx(25.0, rel=1e-14)


def test_mean_photon_against_oracle():
    y = 0.381966**2
    label = StateLabel(0, 2, 0.381966)
    want = (2 + 3 * y) / (1 - y)
    st = orc.build_state(label, 256)
    assert ps.mean_photon(label) == pytest.approx(want, rel=1e-13)
    assert ps.mean_photon(label) == pytest.approx(float(np.real(orc.oracle_moment(st, 1, 1))), abs=1e-9)


def test_mean_photon_matches_distribution_mean():
    rng = np.random.default_rng(32)
    for _ in range(5):
        label = StateLabel(
            4 * complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) / math.sqrt(2),
            int(rng.integers(0, 11)),
            0.8 * complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) / math.sqrt(2),
        )
        d = ps.photon_distribution(label)
        mean_from_probs = float(np.sum(np.arange(d.cutoff + 1) * d.probs))
        assert mean_from_probs == pytest.approx(ps.mean_photon(label), abs=1e-6)


def test_mean_photon_longform_route():
    for n in range(26):
        for za in (0.2, 0.5, 0.8):
            lab = StateLabel(0.3 + 0.4j, n, za)
            assert ps.mean_photon_longform(lab) == pytest.approx(ps.mean_photon(lab), rel=1e-12)


# ---------------------------------------------------------------------------
# f-ratio table
# ---------------------------------------------------------------------------

def test_f_ratio_small_orders():
    for y in (0.0, 0.25, 0.3, 0.7):
        assert ps.f_ratio(1, y) == 0.0
        assert ps.f_ratio(2, y) == pytest.approx((1 - y) ** 2 / (1 + 4 * y + y**2), rel=1e-13)
        assert ps.f_ratio(3, y) == pytest.approx(2 * (1 - y) ** 2 / (1 + 8 * y + y**2), rel=1e-13)
        assert ps.f_ratio(4, y) == pytest.approx(
            3 * (1 - y) ** 2 * (1 + 3 * y + y**2)
            / (1 + 16 * y + 36 * y**2 + 16 * y**3 + y**4), rel=1e-12)
        assert ps.f_ratio(5, y) == pytest.approx(
            4 * (1 - y) ** 2 * (1 + 5 * y + y**2)
            / (1 + 24 * y + 76 * y**2 + 24 * y**3 + y**4), rel=1e-12)


def test_f_ratio_zero_order_table_convention():
    # the n = 0 entry follows a fixed convention and is never multiplied by
    # anything but n = 0; pin it so accidental use would be caught
    for y in (0.0, 0.3, 0.9):
        assert ps.f_ratio(0, y) == pytest.approx(-(1 - y))


def test_f_ratio_domain():
    with pytest.raises(SqueezeParameterError):
        ps.f_ratio(2, 1.0)
    with pytest.raises(ValueError):
        ps.f_ratio(-1, 0.5)


# ---------------------------------------------------------------------------
# moments
# ---------------------------------------------------------------------------

def test_moments_vacuum():
    r = ps.moments(StateLabel(0, 0, 0))
    assert r.var_q == pytest.approx(0.5)
    assert r.var_p == pytest.approx(0.5)
    assert r.cov_qp_sym == pytest.approx(0.0)
    assert r.unc_sum == pytest.approx(1.0)
    assert r.unc_prod == pytest.approx(0.25)


def test_uncertainty_sum_closed_form_and_phase_invariance():
    rng = np.random.default_rng(33)
    for _ in range(10):
        n = int(rng.integers(0, 9))
        za = rng.uniform(0, 0.85)
        beta = complex(rng.normal(), rng.normal())
        y = za**2
        want = (2 * n + 1) * (1 + y) / (1 - y)
        vals = [ps.moments(StateLabel(beta, n, za * cmath.exp(1j * phi))).unc_sum
                for phi in rng.uniform(0, 2 * math.pi, size=5)]
        assert np.max(np.abs(np.asarray(vals) - want)) < 1e-12 * want


def test_moments_against_oracle():
    label = StateLabel(1 + 2j, 3, 0.4 * cmath.exp(1j * math.pi / 3))
    st = orc.build_state(label, 512)
    r = ps.moments(label)
    m_a = orc.oracle_moment(st, 1, 0)
    m_a2 = orc.oracle_moment(st, 2, 0)
    m_n = orc.oracle_moment(st, 1, 1)
    assert r.mean_a == pytest.approx(m_a, abs=1e-8)
    assert r.mean_adag == pytest.approx(np.conj(m_a), abs=1e-8)
    assert r.mean_a2 == pytest.approx(m_a2, abs=1e-8)
    assert r.mean_n == pytest.approx(float(np.real(m_n)), abs=1e-8)
    qm = math.sqrt(0.5) * (m_a + np.conj(m_a))
    pm = -1j * math.sqrt(0.5) * (m_a - np.conj(m_a))
    q2 = 0.5 * (m_a2 + np.conj(m_a2) + 2 * m_n + 1)
    p2 = -0.5 * (m_a2 + np.conj(m_a2) - 2 * m_n - 1)
    cov = -1j * (m_a2 - np.conj(m_a2)) - 2 * qm * pm
    assert r.var_q == pytest.approx(float(np.real(q2 - qm * qm)), abs=1e-8)
    assert r.var_p == pytest.approx(float(np.real(p2 - pm * pm)), abs=1e-8)
    assert r.cov_qp_sym == pytest.approx(float(np.real(cov)), abs=1e-8)


def test_uncertainty_inequality_and_product():
    rng = np.random.default_rng(34)
    for _ in range(25):
        label = StateLabel(
            complex(rng.normal(), rng.normal()),
            int(rng.integers(0, 9)),
            0.85 * complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) / math.sqrt(2),
        )
        r = ps.moments(label)
        assert r.var_q > 0 and r.var_p > 0
        assert r.unc_sum >= 2 * math.sqrt(r.var_q * r.var_p) - 1e-12
        assert r.unc_prod == pytest.approx(r.var_q * r.var_p, rel=1e-10)
        assert r.unc_sum == pytest.approx(r.var_q + r.var_p, rel=1e-12)
        assert r.mean_adag == np.conj(r.mean_a)


def test_covariance_extremal_at_imaginary_squeezing():
    za, n = 0.5, 3
    phis = np.linspace(0, 2 * math.pi, 73)
    covs = np.array([abs(ps.moments(StateLabel(0, n, za * cmath.exp(1j * p))).cov_qp_sym)
                     for p in phis])
    best = phis[np.argmax(covs)]
    dist = min(abs(best - math.pi / 2), abs(best - 3 * math.pi / 2))
    assert dist <= (phis[1] - phis[0]) / 2 + 1e-12


def test_position_variance_vanishes_toward_real_unit_squeezing():
    zs = np.linspace(0.0, 0.995, 40)
    vq = np.array([ps.moments(StateLabel(0, 0, z)).var_q for z in zs])
    assert np.all(np.diff(vq) < 0)
    assert vq[-1] < 2e-3


def test_hbar_scaling_of_moments():
    r = ps.moments(StateLabel(0, 0, 0, hbar=3.0))
    assert r.var_q == pytest.approx(1.5)
    assert r.unc_sum == pytest.approx(3.0)
