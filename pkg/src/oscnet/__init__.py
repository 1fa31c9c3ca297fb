"""Gaussian state transfer over noisy modular oscillator networks."""

from ._kernels import BACKEND as kernel_backend
from .errors import (
    ConfigError,
    ConnectivityError,
    DecoupledNodeError,
    EdgeEditError,
    EstimatorRangeError,
    NoDetectableShiftError,
    OscnetError,
    UnstablePotentialError,
)
from .gaussian import (
    evolve,
    fidelity_single_mode,
    log_negativity,
    make_state,
    reduce_modes,
    squeezed_state,
    symplectic_eigenvalues,
    symplectic_propagator,
    tmsv_state,
    vacuum_state,
)
from .noise import apply_detuning, apply_link_loss, compensate_detuning, compensate_link_loss
from .spectral import (
    HamiltonianSpec,
    NormalModeBasis,
    build_potential,
    community_mode_coupling,
    detect_detuned_community,
    detect_lost_link_pair,
    estimate_detuning,
    homogeneous_spec,
    mode_frequency_shifts,
    normal_modes,
)
from .topology import (
    SbmParams,
    Topology,
    edit_link,
    generate_chain,
    generate_sbm,
    is_connected,
    laplacian,
    link_census,
)
from .transfer import (
    TransferPlan,
    TransferResult,
    assemble_full_potential,
    community_fidelity_stats,
    entanglement_transfer,
    plan_transfer,
    simulate_transfer,
    squeezing_fraction,
)

__version__ = "0.1.0"
