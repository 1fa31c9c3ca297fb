"""Brute-force single-mode state checks in a truncated number basis.

The library computes fidelities from 2x2 covariance matrices. This module
rebuilds the same states as explicit density matrices on a finite number
basis and evaluates the Uhlmann fidelity directly, so the covariance
formula can be cross-checked without sharing any code with the package.

A squeezed rotated thermal state is parameterized by (r, theta, nu) where
nu >= 1/2 is the thermal symplectic eigenvalue (nu = nbar + 1/2). The
density matrix is U rho_th U^dagger with U = R(theta) S(r), and the
matching covariance matrix is R(theta) diag(e^{-2r}, e^{2r}) nu R(theta)^T
with R(theta) = [[cos, sin], [-sin, cos]] acting on (q, p).

The default cutoff keeps 180 photons. At r = 1.5 and nu = 0.8 the
population beyond the cutoff is below 1e-12, far under the 1e-6 accuracy
this oracle is used at; a 60-photon cutoff would truncate ~1e-4 of the
norm and cannot reach that accuracy.
"""

import numpy as np
from scipy.linalg import expm

DIM = 181


def lowering(dim):
    a = np.zeros((dim, dim))
    for k in range(1, dim):
        a[k - 1, k] = np.sqrt(k)
    return a


def density_matrix(r, theta, nu, dim=DIM):
    """Rotated squeezed thermal state as a Fock-basis density matrix."""
    a = lowering(dim)
    ad = a.T
    nbar = nu - 0.5
    if nbar <= 0:
        pops = np.zeros(dim)
        pops[0] = 1.0
    else:
        x = nbar / (1.0 + nbar)
        pops = (1.0 - x) * x ** np.arange(dim)
    rho = np.diag(pops).astype(complex)
    squeeze = expm(0.5 * r * (a @ a - ad @ ad))
    rotate = expm(-1j * theta * (ad @ a))
    u = rotate @ squeeze
    return u @ rho @ u.conj().T


def covariance(r, theta, nu):
    """Covariance matrix of the same (r, theta, nu) state, hbar = 1."""
    stretch = np.diag([np.exp(-r), np.exp(r)])
    c, s = np.cos(theta), np.sin(theta)
    rot = np.array([[c, s], [-s, c]])
    return rot @ stretch @ np.diag([nu, nu]) @ stretch.T @ rot.T


def _sqrtm_psd(mat):
    evals, vecs = np.linalg.eigh(mat)
    return (vecs * np.sqrt(np.clip(evals, 0.0, None))) @ vecs.conj().T


def fock_fidelity(rho1, rho2):
    """Squared Uhlmann fidelity (tr sqrt(sqrt(r1) r2 sqrt(r1)))^2."""
    root = _sqrtm_psd(rho1)
    return np.real(np.trace(_sqrtm_psd(root @ rho2 @ root))) ** 2


def random_state_params(rng, r_max=1.5):
    r = rng.uniform(0.0, r_max)
    theta = rng.uniform(0.0, 2.0 * np.pi)
    nu = rng.uniform(0.5, 0.8)
    return r, theta, nu
