"""Compare the compiled window kernel against the numpy reference.

The hot path of a transfer simulation reduces the evolved covariance to the
receiver at every sample of the readout window. This script times that
kernel for a few network sizes at the study's usual 200-sample window.

    python3 benchmarks/bench_kernels.py [--sizes 12 42 80] [--times 200]
"""

import argparse
import time

import numpy as np

from oscnet._kernels import reference

try:
    from oscnet._kernels import _compiled
except ImportError:
    _compiled = None


def make_problem(rng, n, n_times, n_out=1):
    q, _ = np.linalg.qr(rng.normal(size=(n, n)))
    omega = np.sort(rng.uniform(0.6, 3.0, n))
    m = rng.normal(size=(2 * n, 2 * n))
    sigma = m @ m.T / (2 * n) + 0.1 * np.eye(2 * n)
    a = q.T @ sigma[:n, :n] @ q
    b = q.T @ sigma[n:, n:] @ q
    c = q.T @ sigma[:n, n:] @ q
    times = np.linspace(300.0, 310.0, n_times)
    urows = q[:n_out, :]
    return urows, omega, a, b, c, times


def time_backend(fn, args, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[12, 42, 80, 160])
    parser.add_argument("--times", type=int, default=200)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    print(f"window samples: {args.times}, best of {args.repeats} runs")
    header = f"{'n':>5} {'reference':>12} {'compiled':>12} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for n in args.sizes:
        problem = make_problem(rng, n, args.times)
        t_ref = time_backend(reference.reduced_window_covariances, problem, args.repeats)
        if _compiled is None:
            print(f"{n:>5} {t_ref * 1e3:>10.2f}ms {'missing':>12} {'-':>8}")
            continue
        t_com = time_backend(_compiled.reduced_window_covariances, problem, args.repeats)
        out_ref = reference.reduced_window_covariances(*problem)
        out_com = _compiled.reduced_window_covariances(*problem)
        err = np.max(np.abs(out_ref - out_com))
        print(
            f"{n:>5} {t_ref * 1e3:>10.2f}ms {t_com * 1e3:>10.2f}ms "
            f"{t_ref / t_com:>7.1f}x  (max |diff| {err:.1e})"
        )


if __name__ == "__main__":
    main()
