"""Potential matrices, normal modes, and spectral noise diagnostics.

The network Hamiltonian is H = p^T p / 2 + q^T V q / 2 with
V = diag(omega^2) + g L. Its normal modes are the eigenpairs of V; mode
frequencies are the square roots of the eigenvalues. For a homogeneous
connected network the slowest mode is the center-of-mass mode: frequency
omega_0 and uniform eigenvector 1/sqrt(n), independent of the topology.
"""

from dataclasses import dataclass

import numpy as np

from . import topology as topo
from .errors import EstimatorRangeError, NoDetectableShiftError, UnstablePotentialError

DETECTION_FLOOR = 1e-9


@dataclass(frozen=True)
class HamiltonianSpec:
    """Per-node bare frequencies plus the coupling constant over a topology."""

    frequencies: np.ndarray
    g: float
    topology: topo.Topology

    def __post_init__(self):
        freqs = np.asarray(self.frequencies, dtype=float)
        object.__setattr__(self, "frequencies", freqs)
        if freqs.shape != (self.topology.n_nodes,):
            raise ValueError("need one frequency per node")
        if not (freqs > 0).all():
            raise ValueError("frequencies must be strictly positive")
        if self.g <= 0:
            raise ValueError("coupling g must be positive")

    def with_frequency(self, node, omega):
        freqs = self.frequencies.copy()
        freqs[node] = omega
        return HamiltonianSpec(freqs, self.g, self.topology)


def homogeneous_spec(t, omega0=1.0, g=1.0):
    return HamiltonianSpec(np.full(t.n_nodes, float(omega0)), g, t)


def build_potential(spec):
    """V = diag(omega^2) + g L."""
    lap = topo.laplacian(spec.topology).astype(float)
    return np.diag(spec.frequencies**2) + spec.g * lap


@dataclass(frozen=True)
class NormalModeBasis:
    """Orthogonal eigenvectors K (columns) and ascending mode frequencies."""

    K: np.ndarray
    omega: np.ndarray

    @property
    def n(self):
        return len(self.omega)


def normal_modes(V):
    """Diagonalize a potential matrix into a NormalModeBasis.

    Eigenvalues must all be positive (stable Hamiltonian). The sign of each
    eigenvector is fixed so that its largest-magnitude entry is positive,
    making downstream couplings deterministic.
    """
    V = np.asarray(V, dtype=float)
    evals, K = np.linalg.eigh(V)
    if evals[0] <= 0:
        raise UnstablePotentialError(f"non-positive eigenvalue {evals[0]:.3e}")
    for j in range(K.shape[1]):
        col = K[:, j]
        if col[np.argmax(np.abs(col))] < 0:
            K[:, j] = -col
    return NormalModeBasis(K, np.sqrt(evals))


def mode_frequency_shifts(before, after, mode_range=None):
    """Relative frequency differences (omega' - omega) / omega per mode.

    Modes are matched by sorted index. mode_range selects a contiguous slice
    of mode indices; default is all modes.
    """
    if before.n != after.n:
        raise ValueError("mode bases have different dimensions")
    if mode_range is None:
        mode_range = range(before.n)
    idx = np.asarray(list(mode_range))
    return (after.omega[idx] - before.omega[idx]) / before.omega[idx]


def community_mode_coupling(basis, t, mode):
    """Per-community median of |K_{i,mode}|, in community id order."""
    col = np.abs(basis.K[:, mode])
    labels = np.asarray(t.community_of)
    return np.array([np.median(col[labels == c]) for c in range(t.n_communities)])


def detect_lost_link_pair(basis_before, omega_after, t, floor=DETECTION_FLOOR):
    """Guess which community pair lost a link, from spectra alone.

    Finds the mode m in 1..N-1 with the largest relative frequency shift and
    returns the two communities coupling most strongly to that mode in the
    pre-loss basis. Raises NoDetectableShiftError when every shift is below
    the numerical floor.
    """
    N = t.n_communities
    if N < 2:
        raise ValueError("need at least two communities")
    omega_after = np.asarray(omega_after, dtype=float)
    modes = np.arange(1, N)
    rel = np.abs((omega_after[modes] - basis_before.omega[modes]) / basis_before.omega[modes])
    if rel.max() < floor:
        raise NoDetectableShiftError("no mode shifted above the numerical floor")
    m = int(modes[np.argmax(rel)])
    coup = community_mode_coupling(basis_before, t, m)
    top2 = np.argsort(coup)[::-1][:2]
    return (int(min(top2)), int(max(top2)))


def detect_detuned_community(couplings, n_nodes):
    """Community whose median mode-0 coupling deviates most from 1/sqrt(n).

    Ties break toward the lowest community id (argmax convention).
    """
    ref = 1.0 / np.sqrt(n_nodes)
    return int(np.argmax(np.abs(np.asarray(couplings) - ref)))


def estimate_detuning(omega0_after, n, omega0=1.0):
    """First-order perturbation estimate of a single detuned frequency.

    A single node at omega' shifts the center-of-mass eigenvalue by
    (omega'^2 - omega0^2)/n to first order, so invert that relation:
    omega' ~ sqrt(omega0^2 + n (Omega0'^2 - omega0^2)).
    """
    val = omega0**2 + n * (omega0_after**2 - omega0**2)
    if val <= 0:
        raise EstimatorRangeError(
            f"estimator out of range: omega0'^2 = {omega0_after**2:.4f} too low for n = {n}"
        )
    return float(np.sqrt(val))
