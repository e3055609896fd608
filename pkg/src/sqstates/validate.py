"""Self-validation suites: polynomial identities and oracle equivalence.

Each check returns its worst observed error and the tolerance it was held
to; the suites are deterministic for a given seed.  They are exposed both to
the test suite and to the command line (``sqstates validate``).
"""

from __future__ import annotations

import math

import numpy as np

from . import hermite2v as h2
from . import oracle as orc
from . import overlaps as ov
from . import photonstats as ps
from . import polymath as pm
from . import quasiprob as qp
from . import states as stm
from .states import StateLabel

__all__ = ["run_suite", "SUITES"]


def _check(name, max_error, tolerance):
    return {
        "name": name,
        "max_error": float(max_error),
        "tolerance": float(tolerance),
        "passed": bool(max_error <= tolerance),
    }


# ---------------------------------------------------------------------------
# identity suite
# ---------------------------------------------------------------------------

def _jacobi_bridge(rng):
    # (n+2) P_n^(1,1) - n P_{n-2}^(1,1) = 2(2n+1) P_n, relative to max term
    worst = 0.0
    zs = rng.uniform(1.0, 10.0, size=50)
    for n in range(2, 31):
        for z in zs:
            t1 = (n + 2) * complex(pm.jacobi(n, 1, 1, z))
            t2 = n * complex(pm.jacobi(n - 2, 1, 1, z))
            t3 = 2 * (2 * n + 1) * complex(pm.legendre(n, z))
            worst = max(worst, abs(t1 - t2 - t3) / max(abs(t1), abs(t2), abs(t3)))
    return _check("jacobi_three_term_bridge", worst, 1e-10)


def _excitation_sum_closed(rng):
    worst = 0.0
    for n in range(21):
        for j in range(6):
            for y in rng.uniform(-0.9, 0.9, size=4):
                lhs = complex(pm.excitation_sum(n, j, y))
                rhs = ((1 - y) / (1 + y)) ** n * complex(pm.jacobi(n, j, j, (1 + y) / (1 - y)))
                worst = max(worst, abs(lhs - rhs) / max(1.0, abs(rhs)))
    return _check("excitation_sum_closed_form", worst, 1e-10)


def _rational_sums(_rng):
    bad = 0
    for n in range(21):
        for j in range(6):
            for k in range(n // 2 + 1):
                if pm.interior_power_sum(n, j, k) != pm.interior_power_sum_closed(n, j, k):
                    bad += 1
    for k in range(11):
        for l in range(21):
            if pm.alternating_binomial_sum(k, l) != pm.alternating_binomial_sum_closed(k, l):
                bad += 1
    return _check("exact_rational_sums", float(bad), 0.0)


def _zero_argument_chain(rng):
    worst = 0.0
    for _ in range(4):
        vals = rng.uniform(-1, 1, size=6) + 1j * rng.uniform(-1, 1, size=6)
        R = h2.SymMatrix2(vals[0], vals[1], vals[2])
        for m in range(13):
            for n in range(13):
                if (m + n) % 2 == 1:
                    continue
                ref = complex(h2.hermite2_zero(R, m, n))
                scale = max(1.0, abs(ref))
                rec = complex(h2.hermite2(R, 0.0, 0.0, m, n))
                worst = max(worst, abs(rec - ref) / scale)
                for route in (h2.hermite2_zero_via_legendre,
                              h2.hermite2_zero_via_jacobi,
                              h2.hermite2_zero_via_gegenbauer):
                    worst = max(worst, abs(abs(complex(route(R, m, n))) - abs(ref)) / scale)
                if m == n:
                    diag = complex(h2.hermite2_zero_diag_legendre(R, n))
                    worst = max(worst, abs(diag - ref) / scale)
    return _check("hermite2_zero_argument_chain", worst, 1e-10)


def _product_sum_vs_recurrence(rng):
    worst = 0.0
    for _ in range(20):
        vals = rng.uniform(-1, 1, size=6) + 1j * rng.uniform(-1, 1, size=6)
        R = h2.SymMatrix2(vals[0], vals[1], vals[2])
        m, n = int(rng.integers(0, 11)), int(rng.integers(0, 11))
        a = complex(h2.hermite2(R, vals[3], vals[4], m, n))
        b = complex(h2.hermite2_product_sum(R, vals[3], vals[4], m, n))
        worst = max(worst, abs(a - b) / max(1.0, abs(a)))
    return _check("hermite2_product_sum_vs_recurrence", worst, 1e-10)


def _gauss_integral_forms(rng):
    worst = 0.0
    for _ in range(40):
        p = h2.GaussIntegralParams1D(
            lam=complex(rng.uniform(-1.5, 1.5), rng.uniform(-0.5, 0.5)),
            d=complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
            M=complex(rng.uniform(0.5, 3.0), rng.uniform(-1, 1)),
            c=complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
        )
        m, n = int(rng.integers(0, 9)), int(rng.integers(0, 9))
        a = complex(h2.gauss_hermite_integral_1d(m, n, p))
        b = complex(h2.gauss_hermite_integral_1d_product(m, n, p))
        worst = max(worst, abs(a - b) / max(1.0, abs(a)))
    return _check("gauss_integral_two_forms", worst, 1e-10)


# ---------------------------------------------------------------------------
# oracle suite
# ---------------------------------------------------------------------------

def _random_label(rng, bmax=2.5, zmax=0.7, nmax=5):
    return StateLabel(
        bmax * complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) / math.sqrt(2),
        int(rng.integers(0, nmax + 1)),
        zmax * complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) / math.sqrt(2),
    )


def _biorthogonality(rng):
    worst = 0.0
    zeta = 0.5 * np.exp(1j * rng.uniform(0, 2 * math.pi))
    beta = complex(rng.normal(), rng.normal())
    plus = orc.excitation_ladder(beta, zeta, 5, 256)
    minus = orc.excitation_ladder(beta, -zeta, 5, 256)
    for m in range(6):
        for n in range(6):
            closed = ov.overlap(StateLabel(beta, m, -zeta), StateLabel(beta, n, zeta))
            dense = orc.oracle_overlap(minus[m], plus[n])
            target = 1.0 if m == n else 0.0
            worst = max(worst, abs(closed - target), abs(dense - target))
    return _check("biorthogonality", worst, 1e-9)


def _normalization_routes(rng):
    worst = 0.0
    for n in range(9):
        za = rng.uniform(0, 0.8)
        closed = stm.normalization(n, za) ** -2
        series = stm.norm_inverse_square_series(n, za)
        dense = orc.build_state(StateLabel(0, n, za), 384).norm_squared()
        worst = max(worst, abs(closed - series) / closed, abs(closed - dense) / closed)
    return _check("normalization_three_routes", worst, 1e-9)


def _overlaps_vs_oracle(rng):
    worst = 0.0
    for _ in range(6):
        a = _random_label(rng)
        b = _random_label(rng)
        sa, sb = orc.build_state(a, 256), orc.build_state(b, 256)
        worst = max(worst, abs(ov.overlap(a, b) - orc.oracle_overlap(sa, sb)))
    return _check("general_overlap_vs_oracle", worst, 1e-9)


def _distribution_vs_oracle(rng):
    label = _random_label(rng, bmax=3.0, nmax=4)
    dist = ps.photon_distribution(label)
    st = orc.build_state(label, 512)
    dense = np.abs(st.amplitudes) ** 2 / st.norm_squared()
    k = min(dist.cutoff + 1, dense.size)
    worst = float(np.max(np.abs(dist.probs[:k] - dense[:k])))
    return _check("photon_distribution_vs_oracle", worst, 1e-9)


def _moments_vs_oracle(rng):
    worst = 0.0
    for _ in range(4):
        label = _random_label(rng)
        st = orc.build_state(label, 512)
        rep = ps.moments(label)
        m_a = orc.oracle_moment(st, 1, 0)
        m_a2 = orc.oracle_moment(st, 2, 0)
        m_n = orc.oracle_moment(st, 1, 1)
        qm = math.sqrt(0.5) * (m_a + np.conj(m_a))
        pmom = -1j * math.sqrt(0.5) * (m_a - np.conj(m_a))
        q2 = 0.5 * (m_a2 + np.conj(m_a2) + 2 * m_n + 1)
        p2 = -0.5 * (m_a2 + np.conj(m_a2) - 2 * m_n - 1)
        worst = max(
            worst,
            abs(rep.mean_a - m_a),
            abs(rep.mean_a2 - m_a2),
            abs(rep.mean_n - np.real(m_n)),
            abs(rep.var_q - np.real(q2 - qm * qm)),
            abs(rep.var_p - np.real(p2 - pmom * pmom)),
            abs(rep.unc_sum - np.real(q2 - qm * qm + p2 - pmom * pmom)),
        )
    return _check("moments_vs_oracle", worst, 1e-8)


def _phase_space_vs_oracle(rng):
    worst = 0.0
    for _ in range(3):
        label = _random_label(rng, bmax=1.5, nmax=3)
        st = orc.build_state(label, 256)
        for _ in range(4):
            q, p = rng.uniform(-2.5, 2.5, size=2)
            worst = max(worst, abs(qp.wigner(label, q, p) - orc.oracle_wigner(st, q, p)))
            worst = max(worst, abs(qp.husimi_q(label, q, p) - orc.oracle_husimi(st, q, p)))
    return _check("phase_space_vs_oracle", worst, 1e-7)


SUITES = {
    "identities": [
        _jacobi_bridge,
        _excitation_sum_closed,
        _rational_sums,
        _zero_argument_chain,
        _product_sum_vs_recurrence,
        _gauss_integral_forms,
    ],
    "oracle": [
        _biorthogonality,
        _normalization_routes,
        _overlaps_vs_oracle,
        _distribution_vs_oracle,
        _moments_vs_oracle,
        _phase_space_vs_oracle,
    ],
}


def run_suite(suite: str = "all", seed: int = 0) -> dict:
    """Run one of the validation suites; returns the JSON-ready report."""
    if suite == "all":
        checks = SUITES["identities"] + SUITES["oracle"]
    elif suite in SUITES:
        checks = SUITES[suite]
    else:
        raise ValueError(f"unknown suite {suite!r}; choose identities, oracle or all")
    rng = np.random.default_rng(seed)
    results = [fn(rng) for fn in checks]
    return {
        "suite": suite,
        "seed": int(seed),
        "checks": results,
        "passed": all(c["passed"] for c in results),
    }
