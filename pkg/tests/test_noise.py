"""Link loss, detuning, and their compensation moves."""

import numpy as np
import pytest

from oscnet import (
    ConnectivityError,
    SbmParams,
    apply_detuning,
    apply_link_loss,
    compensate_detuning,
    compensate_link_loss,
    generate_sbm,
    homogeneous_spec,
    is_connected,
)
from oscnet.noise import absent_pairs_between
from oscnet.topology import Topology

DEFAULT = SbmParams(4, 10)


def two_triangles():
    """Two 3-cliques in separate communities joined by one bridge."""
    edges = {(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)}
    return Topology(6, frozenset(edges), (0, 0, 0, 1, 1, 1))


def test_link_loss_inter_community():
    t = generate_sbm(DEFAULT, np.random.default_rng(3))
    lost, event = apply_link_loss(t, np.random.default_rng(10))
    u, v = event.u, event.v
    assert t.has_edge(u, v) and not lost.has_edge(u, v)
    assert t.community_of[u] != t.community_of[v]
    assert event.community_pair == tuple(
        sorted((t.community_of[u], t.community_of[v]))
    )
    assert is_connected(lost)


def test_link_loss_internal():
    t = generate_sbm(DEFAULT, np.random.default_rng(4))
    lost, event = apply_link_loss(t, np.random.default_rng(11), kind="internal")
    assert t.community_of[event.u] == t.community_of[event.v]
    assert is_connected(lost)


def test_link_loss_explicit_pair():
    t = two_triangles()
    lost, event = apply_link_loss(t, np.random.default_rng(0), kind=(1, 0))
    assert (event.u, event.v) == (0, 1)
    assert not lost.has_edge(0, 1)


def test_link_loss_preserves_connectivity_or_raises():
    # the only inter-community edge is a bridge: removal must fail
    with pytest.raises(ConnectivityError):
        apply_link_loss(two_triangles(), np.random.default_rng(1))


def test_link_loss_any_kind():
    t = generate_sbm(DEFAULT, np.random.default_rng(6))
    lost, event = apply_link_loss(t, np.random.default_rng(12), kind="any")
    assert len(lost.edges) == len(t.edges) - 1
    assert is_connected(lost)


def test_link_loss_deterministic():
    t = generate_sbm(DEFAULT, np.random.default_rng(7))
    _, e1 = apply_link_loss(t, np.random.default_rng(42))
    _, e2 = apply_link_loss(t, np.random.default_rng(42))
    assert (e1.u, e1.v) == (e2.u, e2.v)


def test_apply_detuning():
    spec = homogeneous_spec(generate_sbm(DEFAULT, np.random.default_rng(8)))
    noisy, event = apply_detuning(spec, node=7, delta_omega=-0.3)
    assert noisy.frequencies[7] == pytest.approx(0.7)
    assert event.node == 7
    assert event.omega_new == pytest.approx(0.7)
    untouched = np.delete(noisy.frequencies, 7)
    assert (untouched == 1.0).all()
    assert spec.frequencies[7] == 1.0  # original untouched


def test_absent_pairs_between():
    t = two_triangles()
    absent = absent_pairs_between(t, 0, 1)
    assert (2, 3) not in absent  # that edge exists
    assert (0, 3) in absent and (2, 5) in absent
    assert len(absent) == 8
    assert absent_pairs_between(t, 0, 1, exclude=(0, 3)) == [
        p for p in absent if p != (0, 3)
    ]


def test_compensate_link_loss():
    t = two_triangles()
    rng = np.random.default_rng(5)
    patched, added = compensate_link_loss(t, (0, 1), rng)
    assert patched.has_edge(*added)
    ca, cb = sorted((t.community_of[added[0]], t.community_of[added[1]]))
    assert (ca, cb) == (0, 1)
    assert len(patched.edges) == len(t.edges) + 1


def test_compensate_link_loss_excludes_pair():
    t = two_triangles()
    seen = set()
    for seed in range(40):
        _, added = compensate_link_loss(t, (0, 1), np.random.default_rng(seed), exclude=(0, 3))
        seen.add(added)
    assert (0, 3) not in seen
    assert seen  # something was always added


def test_compensate_detuning_direct_hit_restores_homogeneity():
    t = generate_sbm(DEFAULT, np.random.default_rng(9))
    spec = homogeneous_spec(t)
    noisy, _ = apply_detuning(spec, node=12, delta_omega=0.2)
    # community of node 12 is 1; estimator happened to pick the right node
    fixed, node = compensate_detuning(noisy, 1, 0.2, np.random.default_rng(13), exclude=None)
    if node == 12:
        assert np.allclose(fixed.frequencies, 1.0)
    assert fixed.frequencies[node] == pytest.approx(noisy.frequencies[node] - 0.2)


def test_compensate_detuning_exclude_forces_bystander():
    t = generate_sbm(DEFAULT, np.random.default_rng(14))
    spec = homogeneous_spec(t)
    noisy, _ = apply_detuning(spec, node=12, delta_omega=0.2)
    for seed in range(20):
        _, node = compensate_detuning(noisy, 1, 0.2, np.random.default_rng(seed), exclude=12)
        assert node != 12
        assert 10 <= node < 20  # stays inside community 1
