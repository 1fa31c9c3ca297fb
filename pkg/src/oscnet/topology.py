"""Undirected simple graphs with community structure.

Node ids are 0..n_nodes-1 and community c occupies the contiguous id block
[c*n_c, (c+1)*n_c), which keeps community statistics and file output simple.
Graphs are immutable values; edits return new graphs.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import ConnectivityError, EdgeEditError

SBM_ATTEMPTS = 1000


def _norm_edge(u, v):
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Topology:
    """An undirected simple graph plus a community label per node."""

    n_nodes: int
    edges: frozenset
    community_of: tuple

    def __post_init__(self):
        if self.n_nodes <= 0:
            raise ValueError("n_nodes must be positive")
        if len(self.community_of) != self.n_nodes:
            raise ValueError("community_of must label every node")
        for u, v in self.edges:
            if u == v:
                raise ValueError("self-loops are not allowed")
            if not (0 <= u < v < self.n_nodes):
                raise ValueError(f"bad edge ({u}, {v})")
        labels = sorted(set(self.community_of))
        if labels != list(range(len(labels))):
            raise ValueError("community ids must be contiguous from 0")

    @property
    def n_communities(self):
        return max(self.community_of) + 1

    def community_nodes(self, c):
        return [i for i in range(self.n_nodes) if self.community_of[i] == c]

    def has_edge(self, u, v):
        return _norm_edge(u, v) in self.edges


@dataclass(frozen=True)
class SbmParams:
    """Stochastic block model parameters: N communities of n_c nodes each."""

    n_communities: int
    community_size: int
    p_int: float = 0.75
    p_bet: float = 0.025

    def __post_init__(self):
        if self.n_communities < 1 or self.community_size < 1:
            raise ValueError("community counts must be positive")
        for p in (self.p_int, self.p_bet):
            if not 0.0 <= p <= 1.0:
                raise ValueError("probabilities must lie in [0, 1]")

    @property
    def n_nodes(self):
        return self.n_communities * self.community_size


def generate_sbm(params, rng):
    """Sample a connected SBM graph, resampling the whole graph on failure.

    Each intra-community pair is linked independently with probability p_int
    and each inter-community pair with p_bet. Raises ConnectivityError if no
    connected sample shows up within SBM_ATTEMPTS tries.
    """
    n = params.n_nodes
    labels = tuple(i // params.community_size for i in range(n))
    iu, ju = np.triu_indices(n, k=1)
    same = np.asarray(labels)[iu] == np.asarray(labels)[ju]
    probs = np.where(same, params.p_int, params.p_bet)
    for _ in range(SBM_ATTEMPTS):
        keep = rng.random(len(probs)) < probs
        edges = frozenset(zip(iu[keep].tolist(), ju[keep].tolist()))
        t = Topology(n, edges, labels)
        if is_connected(t):
            return t
    raise ConnectivityError(
        f"no connected SBM sample in {SBM_ATTEMPTS} attempts (parameters too sparse?)"
    )


def generate_chain(n, closed=False):
    """Path graph on n >= 2 nodes, or ring on n >= 3 when closed."""
    if closed and n < 3:
        raise ValueError("a ring needs at least 3 nodes")
    if n < 2:
        raise ValueError("a path needs at least 2 nodes")
    edges = {(i, i + 1) for i in range(n - 1)}
    if closed:
        edges.add((0, n - 1))
    return Topology(n, frozenset(edges), tuple([0] * n))


def adjacency(t):
    a = np.zeros((t.n_nodes, t.n_nodes), dtype=np.int64)
    for u, v in t.edges:
        a[u, v] = a[v, u] = 1
    return a


def laplacian(t):
    """Graph Laplacian L = D - A as an integer matrix."""
    a = adjacency(t)
    return np.diag(a.sum(axis=1)) - a


def is_connected(t):
    """Breadth-first reachability from node 0."""
    if t.n_nodes == 1:
        return True
    neigh = [[] for _ in range(t.n_nodes)]
    for u, v in t.edges:
        neigh[u].append(v)
        neigh[v].append(u)
    seen = np.zeros(t.n_nodes, dtype=bool)
    seen[0] = True
    stack = [0]
    while stack:
        u = stack.pop()
        for v in neigh[u]:
            if not seen[v]:
                seen[v] = True
                stack.append(v)
    return bool(seen.all())


def edit_link(t, u, v, action):
    """Return a copy of t with edge (u, v) added or removed."""
    if u == v:
        raise EdgeEditError("self-loops are not allowed")
    e = _norm_edge(u, v)
    if action == "add":
        if e in t.edges:
            raise EdgeEditError(f"edge {e} already present")
        edges = t.edges | {e}
    elif action == "remove":
        if e not in t.edges:
            raise EdgeEditError(f"edge {e} not present")
        edges = t.edges - {e}
    else:
        raise ValueError(f"unknown action {action!r}")
    return Topology(t.n_nodes, edges, t.community_of)


@dataclass(frozen=True)
class LinkCensus:
    """Edge partition into internal and inter-community links."""

    internal: tuple
    inter_community: tuple = field(default=())  # ((u, v), (cu, cv)) pairs

    @property
    def n_internal(self):
        return len(self.internal)

    @property
    def n_inter(self):
        return len(self.inter_community)


def link_census(t):
    internal = []
    inter = []
    for u, v in sorted(t.edges):
        cu, cv = t.community_of[u], t.community_of[v]
        if cu == cv:
            internal.append((u, v))
        else:
            inter.append(((u, v), (min(cu, cv), max(cu, cv))))
    return LinkCensus(tuple(internal), tuple(inter))


def export_edge_list(t, path):
    """Debug export: community labels in a comment header, then one edge per line."""
    lines = [f"# n_nodes {t.n_nodes}"]
    lines.append("# communities " + " ".join(str(c) for c in t.community_of))
    for u, v in sorted(t.edges):
        lines.append(f"{u} {v}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
