"""Static noise models and their compensation strategies.

One noise event per realization: either a single lost link or a single
detuned oscillator. Ground truth travels in the event record so detection
can be scored against it; the detection routines themselves never see it.
"""

from dataclasses import dataclass

from . import topology as topo
from .errors import ConnectivityError, EdgeEditError


@dataclass(frozen=True)
class LinkLossEvent:
    u: int
    v: int
    community_pair: tuple


@dataclass(frozen=True)
class DetuningEvent:
    node: int
    omega_new: float


def apply_link_loss(t, rng, kind="inter_community"):
    """Remove one edge of the requested kind, keeping the graph connected.

    kind is "internal", "inter_community", "any", or a specific (u, v) pair.
    Candidate edges are tried in random order; an edge whose removal would
    disconnect the graph is skipped. Raises ConnectivityError when every
    candidate is a bridge, EdgeEditError when no edge of the kind exists.
    """
    census = topo.link_census(t)
    if isinstance(kind, tuple):
        u, v = kind
        if not t.has_edge(u, v):
            raise EdgeEditError(f"edge ({u}, {v}) not present")
        candidates = [(min(u, v), max(u, v))]
    elif kind == "internal":
        candidates = list(census.internal)
    elif kind == "inter_community":
        candidates = [e for e, _ in census.inter_community]
    elif kind == "any":
        candidates = sorted(t.edges)
    else:
        raise ValueError(f"unknown link kind {kind!r}")
    if not candidates:
        raise EdgeEditError(f"no {kind} edge to remove")
    order = rng.permutation(len(candidates))
    for i in order:
        u, v = candidates[i]
        removed = topo.edit_link(t, u, v, "remove")
        if topo.is_connected(removed):
            pair = (t.community_of[u], t.community_of[v])
            event = LinkLossEvent(u, v, (min(pair), max(pair)))
            return removed, event
    raise ConnectivityError("every candidate edge is a bridge")


def apply_detuning(spec, node, delta_omega):
    """Shift one node's bare frequency by delta_omega."""
    omega_new = float(spec.frequencies[node] + delta_omega)
    if omega_new <= 0:
        raise ValueError(f"detuning would give non-positive frequency {omega_new}")
    return spec.with_frequency(node, omega_new), DetuningEvent(int(node), omega_new)


def absent_pairs_between(t, ca, cb, exclude=None):
    nodes_a = t.community_nodes(ca)
    nodes_b = t.community_nodes(cb)
    pairs = []
    for u in nodes_a:
        for v in nodes_b:
            e = (min(u, v), max(u, v))
            if e != exclude and not t.has_edge(u, v):
                pairs.append(e)
    return pairs


def compensate_link_loss(t, pair, rng, exclude=None):
    """Add one random absent link between the two given communities.

    exclude marks the originally lost edge so the compensating link is a
    genuinely different one.
    """
    ca, cb = pair
    candidates = absent_pairs_between(t, ca, cb, exclude=exclude)
    if not candidates:
        raise EdgeEditError(f"no absent pair left between communities {ca} and {cb}")
    u, v = candidates[rng.integers(len(candidates))]
    return topo.edit_link(t, u, v, "add"), (u, v)


def compensate_detuning(spec, community, delta_omega_est, rng, exclude=None):
    """Counter-detune a random oscillator of the given community.

    The chosen node's frequency is lowered by the estimated detuning, so a
    healthy node ends up at omega0 - delta_omega_est and a direct hit on the
    defective node restores homogeneity exactly. Pass the defective node as
    exclude to force compensation through a different oscillator.
    """
    candidates = [i for i in spec.topology.community_nodes(community) if i != exclude]
    if not candidates:
        raise ValueError(f"no candidate oscillator in community {community}")
    node = candidates[rng.integers(len(candidates))]
    omega_new = float(spec.frequencies[node] - delta_omega_est)
    if omega_new <= 0:
        raise ValueError(f"compensation would give non-positive frequency {omega_new}")
    return spec.with_frequency(node, omega_new), node
