"""Window-evolution kernels: backend agreement and a dense oracle."""

import os
import subprocess
import sys

import numpy as np
import pytest

from oscnet import _kernels
from oscnet._kernels import reference
from oscnet.gaussian import evolve, reduce_modes, symplectic_propagator

try:
    from oscnet._kernels import _compiled
except ImportError:
    _compiled = None


def random_problem(rng, n, nodes, n_times):
    q, _ = np.linalg.qr(rng.normal(size=(n, n)))
    omega = np.sort(rng.uniform(0.6, 3.0, n))
    V = (q * omega**2) @ q.T
    # any symmetric positive matrix exercises the algebra
    m = rng.normal(size=(2 * n, 2 * n))
    sigma = m @ m.T / (2 * n) + 0.1 * np.eye(2 * n)
    a = q.T @ sigma[:n, :n] @ q
    b = q.T @ sigma[n:, n:] @ q
    c = q.T @ sigma[:n, n:] @ q
    times = np.sort(rng.uniform(0.0, 30.0, n_times))
    urows = q[nodes, :]
    return V, sigma, (urows, omega, a, b, c, times)


def dense_oracle(V, sigma, nodes, times):
    out = []
    for t in times:
        full = evolve(sigma, symplectic_propagator(V, t))
        out.append(reduce_modes(full, nodes))
    return np.array(out)


def test_reference_matches_dense_propagator():
    rng = np.random.default_rng(55)
    nodes = [2, 5]
    V, sigma, args = random_problem(rng, 7, nodes, 9)
    got = reference.reduced_window_covariances(*args)
    want = dense_oracle(V, sigma, nodes, args[-1])
    assert got.shape == (9, 4, 4)
    assert np.max(np.abs(got - want)) < 1e-10


def test_reference_single_node_reduction():
    rng = np.random.default_rng(56)
    V, sigma, args = random_problem(rng, 5, [3], 4)
    got = reference.reduced_window_covariances(*args)
    want = dense_oracle(V, sigma, [3], args[-1])
    assert got.shape == (4, 2, 2)
    assert np.max(np.abs(got - want)) < 1e-10


@pytest.mark.skipif(_compiled is None, reason="compiled backend not built")
def test_compiled_matches_reference():
    rng = np.random.default_rng(57)
    for n, nodes in ((4, [0, 2]), (9, [1, 4, 7]), (12, [5])):
        _, _, args = random_problem(rng, n, nodes, 6)
        ref = reference.reduced_window_covariances(*args)
        com = _compiled.reduced_window_covariances(*args)
        assert np.max(np.abs(ref - com)) < 1e-11


def test_outputs_are_symmetric():
    rng = np.random.default_rng(58)
    _, _, args = random_problem(rng, 6, [1, 3], 5)
    for backend in filter(None, (reference, _compiled)):
        out = backend.reduced_window_covariances(*args)
        assert np.max(np.abs(out - np.transpose(out, (0, 2, 1)))) < 1e-12


def test_backend_name_exposed():
    assert _kernels.BACKEND in ("reference", "compiled")


def test_env_var_forces_reference():
    code = "import oscnet; print(oscnet.kernel_backend)"
    env = dict(os.environ, OSCNET_KERNEL="reference")
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )
    assert out.returncode == 0
    assert out.stdout.strip() == "reference"


def test_env_var_rejects_unknown():
    code = "import oscnet"
    env = dict(os.environ, OSCNET_KERNEL="gpu")
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )
    assert out.returncode != 0
