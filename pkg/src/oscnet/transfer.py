"""Sender/receiver attachment and the transfer simulation itself.

Two external oscillators, both resonant with the chosen network mode, are
attached to a sender and a receiver node. Their couplings are tuned against
the node's overlap with that mode so the effective mode coupling is

    g_eff = sqrt(2) omega_ext^2 / (2c + 1),

which swaps the external states at t_ideal = (2c + 1) pi / omega_ext. The
transfer then runs on the (possibly noisy) network while keeping these
planning-time parameters, and the received state is read out over a short
window starting at t_ideal.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import gaussian, spectral
from ._kernels import reduced_window_covariances
from .errors import DecoupledNodeError, UnstablePotentialError

DECOUPLING_THRESHOLD = 1e-6
WINDOW_SAMPLES = 200


@dataclass(frozen=True)
class TransferPlan:
    sender_node: int
    receiver_node: int
    mode: int
    c: int
    omega_ext: float
    g_eff: float
    k_s: float
    k_r: float
    t_ideal: float


def plan_transfer(basis, mode, sender_node, receiver_node, c, threshold=DECOUPLING_THRESHOLD):
    """Tune the external couplings for a transfer over one network mode.

    k = g_eff / K_{node,mode} (signed), so the effective coupling to the
    mode equals g_eff regardless of the node's overlap. Nodes with overlap
    below the threshold cannot be tuned (the coupling would diverge).
    """
    if c < 1:
        raise ValueError("c must be a positive integer")
    ks_overlap = basis.K[sender_node, mode]
    kr_overlap = basis.K[receiver_node, mode]
    for node, overlap in ((sender_node, ks_overlap), (receiver_node, kr_overlap)):
        if abs(overlap) < threshold:
            raise DecoupledNodeError(f"node {node} is decoupled from mode {mode}")
    omega_ext = float(basis.omega[mode])
    g_eff = math.sqrt(2.0) * omega_ext**2 / (2 * c + 1)
    t_ideal = (2 * c + 1) * math.pi / omega_ext
    return TransferPlan(
        sender_node=int(sender_node),
        receiver_node=int(receiver_node),
        mode=int(mode),
        c=int(c),
        omega_ext=omega_ext,
        g_eff=g_eff,
        k_s=float(g_eff / ks_overlap),
        k_r=float(g_eff / kr_overlap),
        t_ideal=float(t_ideal),
    )


def assemble_full_potential(spec, plan, include_auxiliary=False):
    """Potential of network + sender + receiver (+ a decoupled auxiliary).

    Oscillator order: network nodes 0..n-1, sender at n, receiver at n+1,
    auxiliary at n+2 when included. The auxiliary row carries no coupling,
    only a unit bare frequency.
    """
    n = spec.topology.n_nodes
    size = n + 3 if include_auxiliary else n + 2
    V = np.zeros((size, size))
    V[:n, :n] = spectral.build_potential(spec)
    s, r = n, n + 1
    V[s, s] = plan.omega_ext**2
    V[r, r] = plan.omega_ext**2
    V[s, plan.sender_node] = V[plan.sender_node, s] = -plan.k_s
    V[r, plan.receiver_node] = V[plan.receiver_node, r] = -plan.k_r
    if include_auxiliary:
        V[n + 2, n + 2] = 1.0
    if np.linalg.eigvalsh(V)[0] <= 0:
        raise UnstablePotentialError("assembled potential is not positive definite")
    return V


@dataclass(frozen=True)
class TransferResult:
    fidelity_at_t_ideal: float
    fidelity_max_in_window: float
    t_of_max: float
    times: np.ndarray
    fidelities: np.ndarray


def _fidelity_series(covs, target):
    """Vectorized single-mode Uhlmann fidelity of (T, 2, 2) covariances."""
    det_t = target[0, 0] * target[1, 1] - target[0, 1] * target[1, 0]
    ssum = covs + target[None, :, :]
    delta = ssum[:, 0, 0] * ssum[:, 1, 1] - ssum[:, 0, 1] * ssum[:, 1, 0]
    det_r = covs[:, 0, 0] * covs[:, 1, 1] - covs[:, 0, 1] * covs[:, 1, 0]
    lam = np.clip(4.0 * (det_r - 0.25) * (det_t - 0.25), 0.0, None)
    return np.clip(1.0 / (np.sqrt(delta + lam) - np.sqrt(lam)), 0.0, 1.0)


def _mode_basis_blocks(U, sigma_qq, sigma_pp, sigma_qp):
    a = U.T @ sigma_qq @ U
    b = U.T @ sigma_pp @ U
    c = U.T @ sigma_qp @ U
    return a, b, c


def simulate_transfer(spec, plan, sent_state, window_dt=None, window_samples=WINDOW_SAMPLES):
    """Run one transfer and scan the readout window for the best fidelity.

    The initial state is the sent state on the sender, vacuum at each bare
    node frequency on the network, and vacuum at omega_ext on the receiver.
    The window spans [t_ideal, t_ideal + window_dt], default one period of
    the resonant mode.
    """
    sent_state = np.asarray(sent_state, dtype=float)
    if sent_state.shape != (2, 2):
        raise ValueError("sent_state must be a single-mode covariance")
    n = spec.topology.n_nodes
    V = assemble_full_potential(spec, plan, include_auxiliary=False)
    basis = spectral.normal_modes(V)
    size = n + 2

    dq = np.concatenate([1.0 / (2.0 * spec.frequencies), [0.0, 1.0 / (2.0 * plan.omega_ext)]])
    dp = np.concatenate([spec.frequencies / 2.0, [0.0, plan.omega_ext / 2.0]])
    sigma_qq = np.diag(dq)
    sigma_pp = np.diag(dp)
    sigma_qp = np.zeros((size, size))
    s = n
    sigma_qq[s, s] = sent_state[0, 0]
    sigma_pp[s, s] = sent_state[1, 1]
    sigma_qp[s, s] = sent_state[0, 1]

    a, b, c = _mode_basis_blocks(basis.K, sigma_qq, sigma_pp, sigma_qp)
    if window_dt is None:
        window_dt = 2.0 * math.pi / plan.omega_ext
    times = np.linspace(plan.t_ideal, plan.t_ideal + window_dt, window_samples)
    urows = basis.K[[n + 1], :]
    covs = reduced_window_covariances(urows, basis.omega, a, b, c, times)
    fids = _fidelity_series(covs, sent_state)
    i_max = int(np.argmax(fids))
    return TransferResult(
        fidelity_at_t_ideal=float(fids[0]),
        fidelity_max_in_window=float(fids[i_max]),
        t_of_max=float(times[i_max]),
        times=times,
        fidelities=fids,
    )


def entanglement_transfer(spec, plan, r):
    """Fraction of two-mode entanglement surviving the transfer.

    The sender and a decoupled auxiliary oscillator start in a two-mode
    squeezed vacuum (the sender arm scaled to its frequency omega_ext), the
    network and receiver in vacuum. Log-negativity between receiver and
    auxiliary at exactly t_ideal, divided by the initial E_N.
    """
    if r <= 0:
        raise ValueError("entanglement transfer needs r > 0")
    n = spec.topology.n_nodes
    V = assemble_full_potential(spec, plan, include_auxiliary=True)
    basis = spectral.normal_modes(V)
    size = n + 3
    s, rec, aux = n, n + 1, n + 2

    dq = np.concatenate([1.0 / (2.0 * spec.frequencies), [0.0, 1.0 / (2.0 * plan.omega_ext), 0.0]])
    dp = np.concatenate([spec.frequencies / 2.0, [0.0, plan.omega_ext / 2.0, 0.0]])
    sigma_qq = np.diag(dq)
    sigma_pp = np.diag(dp)
    sigma_qp = np.zeros((size, size))
    ch, sh = np.cosh(2.0 * r) / 2.0, np.sinh(2.0 * r) / 2.0
    w = plan.omega_ext
    sigma_qq[s, s] = ch / w
    sigma_qq[aux, aux] = ch
    sigma_qq[s, aux] = sigma_qq[aux, s] = sh / np.sqrt(w)
    sigma_pp[s, s] = ch * w
    sigma_pp[aux, aux] = ch
    sigma_pp[s, aux] = sigma_pp[aux, s] = -sh * np.sqrt(w)

    a, b, c = _mode_basis_blocks(basis.K, sigma_qq, sigma_pp, sigma_qp)
    covs = reduced_window_covariances(
        basis.K[[rec, aux], :], basis.omega, a, b, c, np.array([plan.t_ideal])
    )
    e_received = gaussian.log_negativity(covs[0])
    e_sent = gaussian.log_negativity(gaussian.tmsv_state(r))
    return float(e_received / e_sent)


def squeezing_fraction(received, r_sent, omega=1.0):
    """Received squeezing over sent squeezing, phase-insensitive.

    The received covariance is rescaled to unit frequency; the squeezing
    parameter is read off the smallest eigenvalue and clamped at zero.
    """
    if r_sent <= 0:
        raise ValueError("r_sent must be positive")
    received = np.asarray(received, dtype=float)
    scale = np.diag([np.sqrt(omega), 1.0 / np.sqrt(omega)])
    unit = scale @ received @ scale
    lam_min = np.linalg.eigvalsh(unit)[0]
    r_received = max(0.0, -0.5 * math.log(2.0 * lam_min))
    return float(r_received / r_sent)


@dataclass(frozen=True)
class CommunityFidelityStats:
    best: float
    top2: float
    mean: float


def community_fidelity_stats(samples):
    """Aggregate per-pair fidelities into best / top-2 / mean statistics.

    samples: iterable of (sender_community, receiver_community, fidelity).
    best is the highest within-community mean; top2 the mean over the
    best-performing two-community sub-network (both ends within the pair);
    mean is the grand mean.
    """
    samples = list(samples)
    if not samples:
        raise ValueError("no fidelity samples")
    fids = np.array([f for _, _, f in samples])
    communities = sorted({c for cs, cr, _ in samples for c in (cs, cr)})
    within = {
        c: [f for cs, cr, f in samples if cs == c and cr == c] for c in communities
    }
    within_means = [np.mean(v) for v in within.values() if v]
    if not within_means:
        raise ValueError("no within-community samples")
    best = max(within_means)
    top2 = None
    for i, ca in enumerate(communities):
        for cb in communities[i + 1 :]:
            sub = [f for cs, cr, f in samples if {cs, cr} <= {ca, cb}]
            if sub:
                top2 = max(top2, np.mean(sub)) if top2 is not None else np.mean(sub)
    if top2 is None:
        raise ValueError("no two-community sub-network samples")
    return CommunityFidelityStats(float(best), float(top2), float(np.mean(fids)))
