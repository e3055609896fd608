"""Truncated-Fock-space oracle.

Everything here is built from first principles (the sqrt(m) ladder matrix
elements, Taylor-applied exponentials, dense inner products, quadrature), so
it shares no code path with the closed forms in the rest of the package and
serves as their independent ground truth.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._errors import CutoffError
from .states import StateLabel

__all__ = [
    "OracleState",
    "destroy",
    "create",
    "build_state",
    "build_state_auto",
    "excitation_ladder",
    "oracle_overlap",
    "oracle_moment",
    "oracle_wigner",
    "oracle_husimi",
    "position_wavefunction",
    "apply_displacement",
]

DEFAULT_DIM = 256
MAX_DIM = 4096
SERIES_TAIL_TOL = 1e-12


@dataclass(frozen=True)
class OracleState:
    """Dense Fock-basis amplitudes of an (unnormalized) state plus an
    estimate of the weight lost to truncation."""

    dim: int
    amplitudes: np.ndarray
    tail_estimate: float

    def norm_squared(self) -> float:
        return float(np.real(np.vdot(self.amplitudes, self.amplitudes)))


def destroy(dim: int) -> np.ndarray:
    """Annihilation operator on a dim-dimensional Fock cutoff."""
    return np.diag(np.sqrt(np.arange(1, dim, dtype=float)), k=1).astype(complex)


def create(dim: int) -> np.ndarray:
    """Creation operator on a dim-dimensional Fock cutoff."""
    return destroy(dim).conj().T


def _sqrt_ladder(size: int, real_t, _cache={}) -> np.ndarray:
    key = (size, real_t)
    if key not in _cache:
        _cache[key] = np.sqrt(np.arange(1, size, dtype=real_t))
    return _cache[key]


def _lower(v: np.ndarray) -> np.ndarray:
    """a v without forming the matrix."""
    out = np.zeros_like(v)
    out[:-1] = _sqrt_ladder(v.size, v.real.dtype) * v[1:]
    return out


def _raise(v: np.ndarray) -> np.ndarray:
    """a^dagger v without forming the matrix."""
    out = np.zeros_like(v)
    out[1:] = _sqrt_ladder(v.size, v.real.dtype) * v[:-1]
    return out


def _taylor_exp_apply(op, coef: complex, v: np.ndarray, max_terms: int = 800) -> np.ndarray:
    """exp(coef * op) v as a Taylor series applied term by term."""
    acc = v.copy()
    term = v.copy()
    ref = float(np.linalg.norm(v))
    for k in range(1, max_terms):
        term = coef * op(term) / k
        acc += term
        tn = float(np.linalg.norm(term))
        ref = max(ref, float(np.linalg.norm(acc)))
        if tn <= 1e-20 * ref:
            return acc
    raise CutoffError("Taylor-applied exponential did not converge")


def apply_displacement(v: np.ndarray, beta: complex) -> np.ndarray:
    """exp(beta a^dagger - beta* a) v.

    Uses the factored form exp(-|b|^2/2) exp(b a^dagger) exp(-b* a) applied
    in collinear sub-steps with |b| <= 1/2; collinear factors compose without
    extra phases, and the small steps keep every Taylor series free of large
    cancelling terms.

    Far above the state's support the two factors have huge opposing gains
    (~e^(|b| sqrt(m)) each), so roundoff seeded there would be amplified
    step over step even though the exact map is unitary.  A relative noise
    floor of 1e-45 after each step removes those seeds; amplitudes that
    small are ~25 orders of magnitude below anything that can influence a
    double-precision observable.
    """
    beta = complex(beta)
    if beta == 0:
        return v.copy()
    steps = max(1, math.ceil(abs(beta) / 0.5))
    real_t = np.zeros(1, dtype=v.dtype).real.dtype
    b = np.asarray(beta, dtype=v.dtype) / real_t.type(steps)
    scale = np.exp(real_t.type(-0.5) * np.abs(b) ** 2)
    out = v.copy()
    for _ in range(steps):
        out = _taylor_exp_apply(_lower, -b.conjugate(), out)
        out = _taylor_exp_apply(_raise, b, out)
        out *= scale
        mags = np.abs(out)
        out[mags < 1e-45 * mags.max()] = 0.0
    return out


def _squeezed_vacuum(zeta: complex, dim: int, dtype=complex) -> np.ndarray:
    """Fock amplitudes (1+|z|^2)^(1/4) * sqrt((2m)!)/(2^m m!) * (-z)^m on
    the even states, the defining expansion of the unnormalized squeezed
    vacuum.  Generated by the term ratio c_m/c_{m-1} = -z sqrt((2m-1) 2m)/(2m)
    so the amplitudes carry the full precision of ``dtype``."""
    real_t = np.zeros(1, dtype=dtype).real.dtype
    y = np.abs(np.asarray(zeta, dtype=dtype)) ** 2
    v = np.zeros(dim, dtype=dtype)
    mmax = (dim - 1) // 2
    cur = (1 + y) ** real_t.type(0.25)
    v[0] = cur
    zt = np.asarray(zeta, dtype=dtype)
    for m in range(1, mmax + 1):
        cur = cur * (-zt) * np.sqrt(real_t.type((2 * m - 1) * 2 * m)) / real_t.type(2 * m)
        v[2 * m] = cur
    # series tail bound: |c_{m+1}/c_m|^2 -> |zeta|^2, so a geometric estimate
    if zeta != 0:
        last = float(abs(v[2 * mmax]) ** 2)
        rho = abs(zeta) ** 2
        tail = last * rho / max(1e-300, 1.0 - rho)
        if tail >= SERIES_TAIL_TOL:
            raise CutoffError(
                f"squeezed-vacuum series tail {tail:.2e} above {SERIES_TAIL_TOL} at dim {dim}")
    return v


def _apply_excitations(v: np.ndarray, zeta: complex, n: int) -> np.ndarray:
    """((a^dagger - zeta* a) / sqrt(1+|zeta|^2))^n / sqrt(n!) applied
    stepwise with per-step normalization by sqrt(k)."""
    real_t = np.zeros(1, dtype=v.dtype).real.dtype
    root = np.sqrt(real_t.type(1.0) + np.abs(np.asarray(zeta, dtype=v.dtype)) ** 2)
    out = v
    for k in range(1, n + 1):
        out = (_raise(out) - np.asarray(zeta, dtype=v.dtype).conjugate() * _lower(out)) / (
            root * np.sqrt(real_t.type(k)))
    return out


def _tail_fraction(v: np.ndarray) -> float:
    total = float(np.sum(np.abs(v) ** 2))
    if total == 0:
        return 0.0
    top = v[int(0.9 * v.size):]
    return float(np.sum(np.abs(top) ** 2)) / total


def build_state(label: StateLabel, dim: int = DEFAULT_DIM, dtype=complex) -> OracleState:
    """Unnormalized |beta, n; zeta> on a dim-dimensional cutoff, built by
    the defining operator sequence: squeezed-vacuum series, n excitation
    applications, then the displacement.  Pass ``dtype=np.clongdouble`` for
    an extended-precision build (used where huge-norm states must cancel to
    tiny overlaps)."""
    v = _squeezed_vacuum(label.zeta, dim, dtype=dtype)
    v = _apply_excitations(v, label.zeta, label.n)
    v = apply_displacement(v, label.beta)
    return OracleState(dim=dim, amplitudes=v, tail_estimate=_tail_fraction(v))


def build_state_auto(label: StateLabel, start_dim: int = DEFAULT_DIM,
                     agree_tol: float = 1e-12) -> OracleState:
    """Double the cutoff until two consecutive builds agree on the shared
    amplitudes to ``agree_tol`` (relative to the largest amplitude)."""
    dim = start_dim
    cur = build_state(label, dim)
    while 2 * dim <= MAX_DIM:
        big = build_state(label, 2 * dim)
        scale = float(np.max(np.abs(big.amplitudes))) or 1.0
        if float(np.max(np.abs(big.amplitudes[:dim] - cur.amplitudes))) <= agree_tol * scale:
            return big
        dim *= 2
        cur = big
    raise CutoffError(f"no self-consistent truncation up to dim {MAX_DIM}")


def excitation_ladder(beta: complex, zeta: complex, nmax: int, dim: int = DEFAULT_DIM,
                      dtype=complex):
    """All of |beta, 0..nmax; zeta> in one sweep (cheaper than nmax builds)."""
    base = _squeezed_vacuum(zeta, dim, dtype=dtype)
    real_t = np.zeros(1, dtype=base.dtype).real.dtype
    root = np.sqrt(real_t.type(1.0) + np.abs(np.asarray(zeta, dtype=dtype)) ** 2)
    zc = np.asarray(zeta, dtype=dtype).conjugate()
    out = []
    v = base
    for k in range(nmax + 1):
        if k > 0:
            v = (_raise(v) - zc * _lower(v)) / (root * np.sqrt(real_t.type(k)))
        w = apply_displacement(v, beta) if beta != 0 else v.copy()
        out.append(OracleState(dim=dim, amplitudes=w, tail_estimate=_tail_fraction(w)))
    return out


def oracle_overlap(a: OracleState, b: OracleState) -> complex:
    """<a|b> as a dense inner product (bra is the first argument)."""
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} != {b.dim}")
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def oracle_moment(state: OracleState, k: int, l: int, ordering: str = "normal") -> complex:
    """Ordered ladder moment of the normalized state:  <a^dag^l a^k> for
    ``normal``, <a^k a^dag^l> for ``antinormal``."""
    if k < 0 or l < 0:
        raise ValueError("orders must be nonnegative")
    if k + l > state.dim / 4:
        raise CutoffError(f"moment order {k + l} too high for dim {state.dim} (guard: dim/4)")
    v = state.amplitudes
    if ordering == "normal":
        left, right = v.copy(), v.copy()
        for _ in range(l):
            left = _lower(left)
        for _ in range(k):
            right = _lower(right)
    elif ordering == "antinormal":
        left, right = v.copy(), v.copy()
        for _ in range(k):
            left = _raise(left)
        for _ in range(l):
            right = _raise(right)
    else:
        raise ValueError("ordering must be 'normal' or 'antinormal'")
    return complex(np.vdot(left, right) / np.vdot(v, v))


def position_wavefunction(amplitudes: np.ndarray, q, hbar: float = 1.0) -> np.ndarray:
    """sum_m v_m phi_m(q) with the harmonic-oscillator eigenfunctions
    phi_m(q) = (pi hbar)^(-1/4) (2^m m!)^(-1/2) H_m(q/sqrt(hbar)) e^(-q^2/2hbar),
    generated by the normalized stable recurrence
    phi_{m+1} = xi sqrt(2/(m+1)) phi_m - sqrt(m/(m+1)) phi_{m-1}."""
    q = np.asarray(q, dtype=float)
    xi = q / math.sqrt(hbar)
    phi_prev = np.zeros_like(xi)
    phi = (math.pi * hbar) ** -0.25 * np.exp(-0.5 * xi * xi)
    out = amplitudes[0] * phi.astype(complex)
    for m in range(1, amplitudes.size):
        phi_prev, phi = phi, xi * math.sqrt(2.0 / m) * phi - math.sqrt((m - 1) / m) * phi_prev
        if amplitudes[m] != 0:
            out += amplitudes[m] * phi
    return out


def _gauss_hermite_cached(n, _cache={}):
    """Gauss-Hermite nodes t and the stable combination w * exp(t^2).

    Raw weights underflow long before the node count needed here; the
    combination follows from w_i = e^(-t_i^2) / (n phi_{n-1}(t_i)^2) with
    phi the orthonormal Hermite functions, which stay O(1) at the nodes.
    """
    if n > 700:
        # phi_0 at the outermost node underflows past ~700 nodes
        raise ValueError("Gauss-Hermite rule limited to 700 nodes")
    if n not in _cache:
        from scipy.special import roots_hermite

        t, _ = roots_hermite(n)
        phi_prev = np.zeros_like(t)
        phi = math.pi**-0.25 * np.exp(-0.5 * t * t)
        for m in range(1, n):
            phi_prev, phi = phi, t * math.sqrt(2.0 / m) * phi - math.sqrt((m - 1) / m) * phi_prev
        _cache[n] = (t, 1.0 / (n * phi * phi))
    return _cache[n]


def _wigner_quadrature(state: OracleState, q: float, p: float, hbar: float, nodes: int) -> float:
    v = state.amplitudes / math.sqrt(state.norm_squared())
    # effective support of the wavefunction sets the node scaling
    weights = np.abs(v) ** 2
    m_eff = int(np.max(np.nonzero(weights > 1e-16 * weights.max())[0], initial=0))
    reach = math.sqrt(2.0 * hbar * (m_eff + 1)) + abs(q) + 6.0 * math.sqrt(hbar)
    t, w_exp = _gauss_hermite_cached(nodes)
    tmax = t[-1]
    s = max(1.0, reach / (0.95 * math.sqrt(hbar) * tmax))
    u = math.sqrt(hbar) * s * t
    psi_minus = position_wavefunction(v, q - u, hbar)
    psi_plus = position_wavefunction(v, q + u, hbar)
    f = psi_minus * np.conj(psi_plus) * np.exp(2j * p * u / hbar)
    total = np.sum(w_exp * f) * math.sqrt(hbar) * s
    return float(np.real(total)) / (math.pi * hbar)


def oracle_wigner(state: OracleState, q: float, p: float, hbar: float = 1.0,
                  nodes: int = 400, check_tol: float = 1e-8) -> float:
    """Phase-space density of the normalized state by direct quadrature of

        W(q,p) = 1/(2 pi hbar) * integral( e^(i p x / hbar)
                   psi(q - x/2) psi*(q + x/2) dx ),

    with psi reconstructed from the Fock amplitudes.  Evaluated at two node
    counts; disagreement above ``check_tol`` raises."""
    a = _wigner_quadrature(state, q, p, hbar, nodes)
    b = _wigner_quadrature(state, q, p, hbar, int(1.6 * nodes))
    if abs(a - b) > check_tol:
        raise CutoffError(f"Wigner quadrature not converged: {a} vs {b}")
    return b


def oracle_husimi(state: OracleState, q: float, p: float, hbar: float = 1.0) -> float:
    """Coherent-state density |<alpha|psi>|^2 / pi of the normalized state,
    expressed per unit of dq dp (an extra 1/(2 hbar));  the coherent probe is
    built through the displacement machinery, not from a closed form."""
    alpha = (q + 1j * p) / math.sqrt(2.0 * hbar)
    probe = np.zeros(state.dim, dtype=complex)
    probe[0] = 1.0
    probe = apply_displacement(probe, alpha)
    ov = complex(np.vdot(probe, state.amplitudes))
    return abs(ov) ** 2 / state.norm_squared() / math.pi / (2.0 * hbar)
