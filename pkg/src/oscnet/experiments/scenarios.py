"""Scenario definitions for the experiment runner.

Each scenario turns a config into a list of independent tasks. A task owns
a sort key, an integer stream key (mixed with the master seed into a
per-task RNG), and its parameters. Running a task yields record dicts;
the runner collects them in key order, so output is independent of thread
count and scheduling.
"""

import math
from dataclasses import dataclass
from itertools import product

import numpy as np

from .. import gaussian, noise, spectral, topology, transfer
from ..errors import DecoupledNodeError, UnstablePotentialError

PAIRS_PER_COMMUNITY_PAIR = 5
SLOW_MODES = (1, 2, 3)
INTERNAL_REMOVAL_COUNTS = (1, 2, 3, 4, 5)


@dataclass(frozen=True)
class Task:
    key: tuple
    stream: tuple
    params: dict


@dataclass(frozen=True)
class Scenario:
    name: str
    columns: tuple
    tasks: object
    run: object
    description: str


def _sbm_params(cfg, n_communities=None, community_size=None, p_bet=None):
    return topology.SbmParams(
        n_communities=n_communities if n_communities is not None else cfg.single("communities"),
        community_size=community_size if community_size is not None else cfg.single("community_size"),
        p_int=cfg.p_int,
        p_bet=p_bet if p_bet is not None else cfg.single("p_bet"),
    )


def _network(cfg, rng, **overrides):
    t = topology.generate_sbm(_sbm_params(cfg, **overrides), rng)
    spec = spectral.homogeneous_spec(t)
    basis = spectral.normal_modes(spectral.build_potential(spec))
    return t, spec, basis


def _random_pair(rng, n):
    s = int(rng.integers(n))
    r = int(rng.integers(n - 1))
    if r >= s:
        r += 1
    return s, r


def _try_transfer(spec, plan_basis, mode, sender, receiver, cfg, sent):
    """One transfer, or None when the pair cannot be attached to the mode."""
    try:
        plan = transfer.plan_transfer(plan_basis, mode, sender, receiver, cfg.c)
        return transfer.simulate_transfer(spec, plan, sent, window_samples=cfg.window_samples)
    except (DecoupledNodeError, UnstablePotentialError):
        return None


def _sent_state(cfg, basis, mode):
    return gaussian.squeezed_state(float(basis.omega[mode]), cfg.squeezing)


# ---------------------------------------------------------------- fig2


def _fig2_tasks(cfg):
    for i in range(cfg.ensemble or 100):
        yield Task(key=(i,), stream=(0, i), params={"realization": i})


def _fig2_run(cfg, params, rng):
    i = params["realization"]
    t, _, basis = _network(cfg, rng)
    rows = []

    def shift_rows(kind, n_removed, after_basis):
        shifts = spectral.mode_frequency_shifts(basis, after_basis, SLOW_MODES)
        for rank, value in enumerate(sorted(shifts)):
            rows.append(
                {
                    "realization": i,
                    "link_kind": kind,
                    "n_removed": n_removed,
                    "rank": rank,
                    "rel_shift": float(value),
                }
            )

    lost, _ = noise.apply_link_loss(t, rng, kind="inter_community")
    after = spectral.normal_modes(spectral.build_potential(spectral.homogeneous_spec(lost)))
    shift_rows("inter_community", 1, after)

    current = t
    for count in INTERNAL_REMOVAL_COUNTS:
        current, _ = noise.apply_link_loss(current, rng, kind="internal")
        after = spectral.normal_modes(spectral.build_potential(spectral.homogeneous_spec(current)))
        shift_rows("internal", count, after)
    return rows


# ---------------------------------------------------------------- fig3


def _community_pair_samples(t, rng, per=PAIRS_PER_COMMUNITY_PAIR):
    """per sender/receiver samples for every ordered community pair."""
    samples = []
    for a in range(t.n_communities):
        nodes_a = t.community_nodes(a)
        for b in range(t.n_communities):
            nodes_b = t.community_nodes(b)
            for _ in range(per):
                s = nodes_a[rng.integers(len(nodes_a))]
                r = nodes_b[rng.integers(len(nodes_b))]
                while r == s:
                    r = nodes_b[rng.integers(len(nodes_b))]
                samples.append((a, b, s, r))
    return samples


def _fig3_tasks(cfg):
    for i in range(cfg.ensemble or 20):
        yield Task(key=(i,), stream=(0, i), params={"realization": i})


def _fig3_run(cfg, params, rng):
    i = params["realization"]
    t, spec, basis = _network(cfg, rng)
    lost_topo, event = noise.apply_link_loss(t, rng, kind="inter_community")
    lossy_spec = spectral.homogeneous_spec(lost_topo)
    fixed_topo, _ = noise.compensate_link_loss(
        lost_topo, event.community_pair, rng, exclude=(event.u, event.v)
    )
    fixed_spec = spectral.homogeneous_spec(fixed_topo)
    cases = {
        "lossless": (spec, basis),
        "lossy": (lossy_spec, spectral.normal_modes(spectral.build_potential(lossy_spec))),
        "compensated": (fixed_spec, spectral.normal_modes(spectral.build_potential(fixed_spec))),
    }
    pair_samples = _community_pair_samples(t, rng)
    rows = []
    for case, (case_spec, case_basis) in cases.items():
        shifts = spectral.mode_frequency_shifts(basis, case_basis, SLOW_MODES)
        for mode, shift in zip(SLOW_MODES, shifts):
            sent = _sent_state(cfg, basis, mode)
            fids = []
            for a, b, s, r in pair_samples:
                result = _try_transfer(case_spec, basis, mode, s, r, cfg, sent)
                if result is not None:
                    fids.append((a, b, result.fidelity_max_in_window))
            if not fids:
                continue
            stats = transfer.community_fidelity_stats(fids)
            rows.append(
                {
                    "realization": i,
                    "case": case,
                    "mode": mode,
                    "rel_shift": float(shift),
                    "f_best": stats.best,
                    "f_top2": stats.top2,
                    "f_mean": stats.mean,
                    "n_pairs": len(fids),
                }
            )
    return rows


# ---------------------------------------------------------------- fig4


def _fig4_grid(cfg):
    communities = cfg.communities or (4, 6, 8)
    sizes = cfg.community_size or (6, 10, 14)
    p_bets = cfg.p_bet or (0.025, 0.05, 0.1)
    return communities, sizes, p_bets


def _fig4_tasks(cfg):
    communities, sizes, p_bets = _fig4_grid(cfg)
    ensemble = cfg.ensemble or 200
    for cell, (n_comm, size, p_bet) in enumerate(product(communities, sizes, p_bets)):
        for i in range(ensemble):
            yield Task(
                key=(cell, i),
                stream=(cell, i),
                params={
                    "realization": i,
                    "communities": n_comm,
                    "community_size": size,
                    "p_bet": p_bet,
                },
            )


def _fig4_run(cfg, params, rng):
    n_comm, size, p_bet = params["communities"], params["community_size"], params["p_bet"]
    t, _, basis = _network(cfg, rng, n_communities=n_comm, community_size=size, p_bet=p_bet)
    lost_topo, event = noise.apply_link_loss(t, rng, kind="inter_community")
    after = spectral.normal_modes(spectral.build_potential(spectral.homogeneous_spec(lost_topo)))
    guess = spectral.detect_lost_link_pair(basis, after.omega, t)
    return [
        {
            "communities": n_comm,
            "community_size": size,
            "p_bet": p_bet,
            "realization": params["realization"],
            "hit": guess == event.community_pair,
            "baseline": 1.0 / math.comb(n_comm, 2),
        }
    ]


# ---------------------------------------------------------------- fig5


def _fig5_tasks(cfg):
    spectral_ensemble = cfg.ensemble or 100
    dynamics_ensemble = cfg.ensemble or 20
    for di, dw in enumerate(cfg.detunings()):
        for i in range(spectral_ensemble):
            yield Task(
                key=(0, di, i),
                stream=(0, di, i),
                params={"part": "spectral", "dw": dw, "realization": i},
            )
    dynamic_dws = [dw for dw in cfg.detunings() if dw < 0]
    for di, dw in enumerate(dynamic_dws):
        for i in range(dynamics_ensemble):
            yield Task(
                key=(1, di, i),
                stream=(1, di, i),
                params={"part": "dynamics", "dw": dw, "realization": i},
            )


def _detune_random_node(spec, rng, dw):
    node = int(rng.integers(spec.topology.n_nodes))
    detuned, event = noise.apply_detuning(spec, node, dw)
    return detuned, event, spec.topology.community_of[node]


def _fig5_run(cfg, params, rng):
    dw, i = params["dw"], params["realization"]
    t, spec, basis = _network(cfg, rng)
    detuned, event, true_community = _detune_random_node(spec, rng, dw)
    after = spectral.normal_modes(spectral.build_potential(detuned))
    if params["part"] == "spectral":
        couplings = spectral.community_mode_coupling(after, t, 0)
        detected = spectral.detect_detuned_community(couplings, t.n_nodes)
        est = spectral.estimate_detuning(float(after.omega[0]), t.n_nodes)
        return [
            {
                "part": "spectral",
                "dw": dw,
                "realization": i,
                "omega0_shift": float(after.omega[0]) - 1.0,
                "est_omega": est,
                "est_rel_err": (est - event.omega_new) / event.omega_new,
                "true_community": true_community,
                "detected_community": detected,
                "hit": detected == true_community,
            }
        ]
    rows = []
    for mode in (0,) + SLOW_MODES:
        sent = _sent_state(cfg, basis, mode)
        for _ in range(20):
            s, r = _random_pair(rng, t.n_nodes)
            result = _try_transfer(detuned, basis, mode, s, r, cfg, sent)
            if result is not None:
                break
        if result is None:
            continue
        rows.append(
            {
                "part": "dynamics",
                "dw": dw,
                "realization": i,
                "mode": mode,
                "f_ideal": result.fidelity_at_t_ideal,
                "f_max": result.fidelity_max_in_window,
            }
        )
    return rows


# ---------------------------------------------------------------- fig6


def _fig6_tasks(cfg):
    spectral_ensemble = cfg.ensemble or 100
    dynamics_ensemble = cfg.ensemble or 20
    dws = [dw for dw in cfg.detunings() if dw < 0]
    for di, dw in enumerate(dws):
        for i in range(spectral_ensemble):
            yield Task(
                key=(0, di, i),
                stream=(0, di, i),
                params={"part": "spectral", "dw": dw, "realization": i},
            )
        for i in range(dynamics_ensemble):
            yield Task(
                key=(1, di, i),
                stream=(1, di, i),
                params={"part": "dynamics", "dw": dw, "realization": i},
            )


def _estimate_and_compensate(t, spec, rng, dw):
    """The blind compensation protocol: detect, estimate, counter-detune."""
    detuned, event, true_community = _detune_random_node(spec, rng, dw)
    after = spectral.normal_modes(spectral.build_potential(detuned))
    couplings = spectral.community_mode_coupling(after, t, 0)
    detected = spectral.detect_detuned_community(couplings, t.n_nodes)
    est_omega = spectral.estimate_detuning(float(after.omega[0]), t.n_nodes)
    compensated, _ = noise.compensate_detuning(
        detuned, detected, est_omega - 1.0, rng, exclude=event.node
    )
    return detuned, compensated, after, event, true_community, detected


def _fig6_run(cfg, params, rng):
    dw, i = params["dw"], params["realization"]
    t, spec, basis = _network(cfg, rng)
    detuned, compensated, after, event, true_comm, detected = _estimate_and_compensate(
        t, spec, rng, dw
    )
    comp_basis = spectral.normal_modes(spectral.build_potential(compensated))
    if params["part"] == "spectral":
        couplings = spectral.community_mode_coupling(comp_basis, t, 0)
        rows = []
        for community, coupling in enumerate(couplings):
            rows.append(
                {
                    "part": "spectral",
                    "dw": dw,
                    "realization": i,
                    "community": community,
                    "coupling": float(coupling),
                    "omega0_detuned": float(after.omega[0]),
                    "omega0_compensated": float(comp_basis.omega[0]),
                    "true_community": true_comm,
                    "detected_community": detected,
                }
            )
        return rows
    rows = []
    for mode in (0,) + SLOW_MODES:
        sent = _sent_state(cfg, basis, mode)
        for _ in range(20):
            s, r = _random_pair(rng, t.n_nodes)
            res_detuned = _try_transfer(detuned, basis, mode, s, r, cfg, sent)
            res_comp = _try_transfer(compensated, basis, mode, s, r, cfg, sent)
            if res_detuned is not None and res_comp is not None:
                break
        if res_detuned is None or res_comp is None:
            continue
        for case, result in (("detuned", res_detuned), ("compensated", res_comp)):
            rows.append(
                {
                    "part": "dynamics",
                    "dw": dw,
                    "realization": i,
                    "mode": mode,
                    "case": case,
                    "f_ideal": result.fidelity_at_t_ideal,
                    "f_max": result.fidelity_max_in_window,
                }
            )
    return rows


# ---------------------------------------------------------------- fig7

FIG7_CASES = ("noiseless", "link_loss", "detuned_moderate", "detuned_large")
FIG7_DETUNED_OMEGA = {"detuned_moderate": 1.2, "detuned_large": 1.5}


def _fig7_tasks(cfg):
    for i in range(cfg.ensemble or 20):
        yield Task(key=(i,), stream=(0, i), params={"realization": i})


def _fig7_run(cfg, params, rng):
    i = params["realization"]
    t, spec, basis = _network(cfg, rng)
    lost_topo, _ = noise.apply_link_loss(t, rng, kind="inter_community")
    lossy_spec = spectral.homogeneous_spec(lost_topo)
    node = int(rng.integers(t.n_nodes))
    case_specs = {
        "noiseless": spec,
        "link_loss": lossy_spec,
        "detuned_moderate": spec.with_frequency(node, FIG7_DETUNED_OMEGA["detuned_moderate"]),
        "detuned_large": spec.with_frequency(node, FIG7_DETUNED_OMEGA["detuned_large"]),
    }
    rows = []
    for mode in (0,) + SLOW_MODES:
        for _ in range(20):
            s, r = _random_pair(rng, t.n_nodes)
            try:
                plan = transfer.plan_transfer(basis, mode, s, r, cfg.c)
            except DecoupledNodeError:
                continue
            break
        else:
            continue
        for case in FIG7_CASES:
            try:
                fraction = transfer.entanglement_transfer(case_specs[case], plan, cfg.squeezing)
            except UnstablePotentialError:
                continue
            rows.append(
                {
                    "realization": i,
                    "case": case,
                    "mode": mode,
                    "en_fraction": fraction,
                }
            )
    return rows


# ---------------------------------------------------------------- appA

APPA_CHAIN_SIZES = (5, 20, 100)


def _appa_tasks(cfg):
    yield Task(key=(0,), stream=(0, 0), params={"part": "closed_form"})
    for i in range(cfg.ensemble or 100):
        yield Task(key=(1, i), stream=(1, i), params={"part": "robustness", "realization": i})


def _ring_closed_form(n):
    lam = 2.0 - 2.0 * np.cos(2.0 * np.pi * np.arange(n) / n)
    return np.sort(np.sqrt(1.0 + lam))


def _path_closed_form(n):
    lam = 2.0 - 2.0 * np.cos(np.pi * np.arange(n) / n)
    return np.sort(np.sqrt(1.0 + lam))


def _appa_run(cfg, params, rng):
    if params["part"] == "closed_form":
        rows = []
        for kind, builder, closed_form in (
            ("ring", lambda n: topology.generate_chain(n, closed=True), _ring_closed_form),
            ("path", lambda n: topology.generate_chain(n, closed=False), _path_closed_form),
        ):
            for n in APPA_CHAIN_SIZES:
                spec = spectral.homogeneous_spec(builder(n))
                basis = spectral.normal_modes(spectral.build_potential(spec))
                err = float(np.abs(basis.omega - closed_form(n)).max())
                rows.append(
                    {
                        "part": "closed_form",
                        "kind": kind,
                        "n": n,
                        "max_abs_err": err,
                        "omega_max": float(basis.omega.max()),
                    }
                )
        return rows
    i = params["realization"]
    rows = []
    n_total = cfg.single("communities") * cfg.single("community_size")
    sbm, _, sbm_basis = _network(cfg, rng)
    ring = topology.generate_chain(n_total, closed=True)
    for kind, t, basis in (
        ("sbm", sbm, sbm_basis),
        ("ring", ring, spectral.normal_modes(spectral.build_potential(spectral.homogeneous_spec(ring)))),
    ):
        lost, event = noise.apply_link_loss(t, rng, kind="any")
        after = spectral.normal_modes(spectral.build_potential(spectral.homogeneous_spec(lost)))
        shifts = spectral.mode_frequency_shifts(basis, after, SLOW_MODES)
        if kind == "sbm":
            cu, cv = t.community_of[event.u], t.community_of[event.v]
            removed_kind = "internal" if cu == cv else "inter_community"
        else:
            removed_kind = "chain"
        rows.append(
            {
                "part": "robustness",
                "kind": kind,
                "realization": i,
                "removed_kind": removed_kind,
                "max_abs_rel_shift": float(np.abs(shifts).max()),
            }
        )
    return rows


# ---------------------------------------------------------------- registry


SCENARIOS = {
    "fig2": Scenario(
        name="fig2",
        columns=("realization", "link_kind", "n_removed", "rank", "rel_shift"),
        tasks=_fig2_tasks,
        run=_fig2_run,
        description="sorted slow-mode shifts for internal vs inter-community link removal",
    ),
    "fig3": Scenario(
        name="fig3",
        columns=(
            "realization", "case", "mode", "rel_shift",
            "f_best", "f_top2", "f_mean", "n_pairs",
        ),
        tasks=_fig3_tasks,
        run=_fig3_run,
        description="transfer fidelity vs frequency shift, lossy and compensated",
    ),
    "fig4": Scenario(
        name="fig4",
        columns=("communities", "community_size", "p_bet", "realization", "hit", "baseline"),
        tasks=_fig4_tasks,
        run=_fig4_run,
        description="lost-link community identification rate across network grids",
    ),
    "fig5": Scenario(
        name="fig5",
        columns=(
            "part", "dw", "realization", "omega0_shift", "est_omega", "est_rel_err",
            "true_community", "detected_community", "hit", "mode", "f_ideal", "f_max",
        ),
        tasks=_fig5_tasks,
        run=_fig5_run,
        description="single detuned oscillator: spectral signatures and fidelities",
    ),
    "fig6": Scenario(
        name="fig6",
        columns=(
            "part", "dw", "realization", "community", "coupling",
            "omega0_detuned", "omega0_compensated", "true_community",
            "detected_community", "mode", "case", "f_ideal", "f_max",
        ),
        tasks=_fig6_tasks,
        run=_fig6_run,
        description="blind counter-detuning compensation",
    ),
    "fig7": Scenario(
        name="fig7",
        columns=("realization", "case", "mode", "en_fraction"),
        tasks=_fig7_tasks,
        run=_fig7_run,
        description="entanglement transfer fraction under each noise type",
    ),
    "appA": Scenario(
        name="appA",
        columns=(
            "part", "kind", "n", "max_abs_err", "omega_max",
            "realization", "removed_kind", "max_abs_rel_shift",
        ),
        tasks=_appa_tasks,
        run=_appa_run,
        description="chain spectra closed forms and modular-vs-chain robustness",
    ),
}
