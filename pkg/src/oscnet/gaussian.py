"""Zero-mean Gaussian states as covariance matrices, with exact dynamics.

Conventions (hbar = 1): quadratures are ordered (q_1..q_m, p_1..p_m), the
vacuum of a unit-frequency oscillator has covariance I/2, and fidelity is
the squared-overlap (Uhlmann) convention so that F(vacuum, squeezed r)
equals 1/cosh r.
"""

from dataclasses import dataclass

import numpy as np

from .errors import UnstablePotentialError

MIN_SYMPLECTIC_EIGENVALUE = 0.5 - 1e-9


def symplectic_form(m):
    """Canonical form J for the (q_1..q_m, p_1..p_m) ordering."""
    eye = np.eye(m)
    zero = np.zeros((m, m))
    return np.block([[zero, eye], [-eye, zero]])


def n_modes(sigma):
    dim = sigma.shape[0]
    if sigma.shape != (dim, dim) or dim % 2:
        raise ValueError(f"bad covariance shape {sigma.shape}")
    return dim // 2


def vacuum_state(omega=1.0):
    if omega <= 0:
        raise ValueError("frequency must be positive")
    return np.diag([1.0 / (2.0 * omega), omega / 2.0])


def squeezed_state(omega=1.0, r=0.0, phi=0.0):
    """Squeezed vacuum: at phi=0 the position variance shrinks by e^{-2r}.

    A nonzero squeezing phase rotates the squeezed quadrature by phi/2.
    """
    if omega <= 0:
        raise ValueError("frequency must be positive")
    core = np.diag([np.exp(-2.0 * r) / 2.0, np.exp(2.0 * r) / 2.0])
    half = phi / 2.0
    rot = np.array([[np.cos(half), -np.sin(half)], [np.sin(half), np.cos(half)]])
    scale = np.diag([1.0 / np.sqrt(omega), np.sqrt(omega)])
    return scale @ rot @ core @ rot.T @ scale


def tmsv_state(r=0.0):
    """Two-mode squeezed vacuum at unit frequency, ordering (q1, q2, p1, p2)."""
    ch, sh = np.cosh(2.0 * r) / 2.0, np.sinh(2.0 * r) / 2.0
    qq = np.array([[ch, sh], [sh, ch]])
    pp = np.array([[ch, -sh], [-sh, ch]])
    sigma = np.zeros((4, 4))
    sigma[:2, :2] = qq
    sigma[2:, 2:] = pp
    return sigma


def make_state(kind, omega=1.0, r=0.0, phi=0.0):
    if kind == "vacuum":
        return vacuum_state(omega)
    if kind == "squeezed":
        return squeezed_state(omega, r, phi)
    if kind == "tmsv":
        return tmsv_state(r)
    raise ValueError(f"unknown state kind {kind!r}")


def _sqrtm_psd(mat):
    evals, vecs = np.linalg.eigh(mat)
    return (vecs * np.sqrt(np.clip(evals, 0.0, None))) @ vecs.T


def symplectic_eigenvalues(sigma):
    """Ascending symplectic spectrum, one value per mode.

    Physical states have every value >= 1/2. Computed from the symmetric
    product sqrt(sigma) J^T sigma J sqrt(sigma), whose eigenvalues are the
    squared symplectic eigenvalues, each doubled.
    """
    sigma = np.asarray(sigma, dtype=float)
    m = n_modes(sigma)
    J = symplectic_form(m)
    root = _sqrtm_psd(sigma)
    prod = root @ J.T @ sigma @ J @ root
    evals = np.sqrt(np.clip(np.linalg.eigvalsh(prod), 0.0, None))
    return evals[::2][:m]


def validate_covariance(sigma, atol_sym=1e-12):
    """Check symmetry and the uncertainty relation; raise on violation."""
    sigma = np.asarray(sigma, dtype=float)
    if not np.allclose(sigma, sigma.T, atol=atol_sym):
        raise ValueError("covariance matrix is not symmetric")
    nu_min = symplectic_eigenvalues(sigma)[0]
    if nu_min < MIN_SYMPLECTIC_EIGENVALUE:
        raise ValueError(f"uncertainty relation violated: nu_min = {nu_min:.6e}")
    return sigma


@dataclass(frozen=True)
class SymplecticPropagator:
    """Exact quadrature map for time t under H = p^T p/2 + q^T V q/2."""

    S: np.ndarray
    t: float


def symplectic_propagator(V, t):
    """Closed-form propagator built from the spectral decomposition of V.

    With W = sqrt(V), S = [[cos(Wt), W^-1 sin(Wt)], [-W sin(Wt), cos(Wt)]].
    No time stepping: exact at any t.
    """
    V = np.asarray(V, dtype=float)
    evals, U = np.linalg.eigh(V)
    if evals[0] <= 0:
        raise UnstablePotentialError(f"non-positive eigenvalue {evals[0]:.3e}")
    w = np.sqrt(evals)
    cos = (U * np.cos(w * t)) @ U.T
    sin_over = (U * (np.sin(w * t) / w)) @ U.T
    w_sin = (U * (w * np.sin(w * t))) @ U.T
    S = np.block([[cos, sin_over], [-w_sin, cos]])
    return SymplecticPropagator(S, float(t))


def evolve(sigma, prop):
    """sigma -> S sigma S^T, re-symmetrized."""
    sigma = np.asarray(sigma, dtype=float)
    if sigma.shape[0] != prop.S.shape[0]:
        raise ValueError("covariance and propagator dimensions differ")
    out = prop.S @ sigma @ prop.S.T
    return (out + out.T) / 2.0


def reduce_modes(sigma, modes):
    """Reduced state on a subset of modes (principal q/p submatrix)."""
    sigma = np.asarray(sigma, dtype=float)
    m = n_modes(sigma)
    modes = list(modes)
    if any(not 0 <= k < m for k in modes):
        raise ValueError(f"mode indices {modes} out of range for {m} modes")
    idx = np.array(modes + [m + k for k in modes])
    return sigma[np.ix_(idx, idx)]


def fidelity_single_mode(sigma1, sigma2):
    """Uhlmann fidelity (squared-overlap convention) of two one-mode states.

    F = 1 / (sqrt(delta + lam) - sqrt(lam)) with delta = det(s1 + s2) and
    lam = 4 (det s1 - 1/4)(det s2 - 1/4); lam is clamped at zero to absorb
    rounding on pure states.
    """
    s1 = validate_covariance(sigma1)
    s2 = validate_covariance(sigma2)
    if n_modes(s1) != 1 or n_modes(s2) != 1:
        raise ValueError("fidelity_single_mode needs one-mode states")
    delta = np.linalg.det(s1 + s2)
    lam = 4.0 * (np.linalg.det(s1) - 0.25) * (np.linalg.det(s2) - 0.25)
    lam = max(lam, 0.0)
    f = 1.0 / (np.sqrt(delta + lam) - np.sqrt(lam))
    return float(min(f, 1.0))


def log_negativity(sigma):
    """Logarithmic negativity E_N (base 2) of a two-mode state.

    Partial transposition flips the sign of the second mode's momentum;
    E_N = max(0, -log2(2 nu_min)) from the transposed state's smallest
    symplectic eigenvalue.
    """
    sigma = validate_covariance(sigma)
    if n_modes(sigma) != 2:
        raise ValueError("log_negativity needs a two-mode state")
    flip = np.diag([1.0, 1.0, 1.0, -1.0])
    nu_min = symplectic_eigenvalues(flip @ sigma @ flip)[0]
    if nu_min >= 0.5:
        return 0.0
    return float(-np.log2(2.0 * nu_min))
