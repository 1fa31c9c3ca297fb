"""Pure numpy implementation of the window-scan kernel.

The dynamics of H = p^T p/2 + q^T V q/2 decouple in the eigenbasis of
V = U diag(omega^2) U^T. Rotating the initial covariance once into that
basis (blocks a = U^T S_qq U, b = U^T S_pp U, c = U^T S_qp U), the reduced
covariance of a small set of output oscillators at any time follows from
the mode phases alone, with no repeated propagator builds:

    q_i(t) = sum_j U_ij (cos(w_j t) q~_j + sin(w_j t)/w_j p~_j)
    p_i(t) = sum_j U_ij (-w_j sin(w_j t) q~_j + cos(w_j t) p~_j)

This is the hot loop of every transfer simulation: one call scans the whole
sampling window.
"""

import numpy as np


def reduced_window_covariances(urows, omega, a, b, c, times):
    """Reduced covariances (T, 2k, 2k) of k output oscillators at T times.

    urows: (k, m) rows of the eigenvector matrix for the outputs.
    omega: (m,) mode frequencies.
    a, b, c: (m, m) mode-basis covariance blocks (qq, pp, qp).
    times: (T,) sample times.
    """
    urows = np.ascontiguousarray(urows, dtype=float)
    omega = np.ascontiguousarray(omega, dtype=float)
    times = np.ascontiguousarray(times, dtype=float)
    k = urows.shape[0]
    phases = np.outer(times, omega)
    cos_r = urows[None, :, :] * np.cos(phases)[:, None, :]
    sin_r = urows[None, :, :] * (np.sin(phases) / omega)[:, None, :]
    dsin_r = urows[None, :, :] * (np.sin(phases) * omega)[:, None, :]

    def quad(x, mat, y):
        return np.einsum("tim,mn,tjn->tij", x, mat, y, optimize=True)

    qq = quad(cos_r, a, cos_r) + quad(cos_r, c, sin_r) + quad(sin_r, c.T, cos_r) + quad(sin_r, b, sin_r)
    qp = -quad(cos_r, a, dsin_r) + quad(cos_r, c, cos_r) - quad(sin_r, c.T, dsin_r) + quad(sin_r, b, cos_r)
    pp = quad(dsin_r, a, dsin_r) - quad(dsin_r, c, cos_r) - quad(cos_r, c.T, dsin_r) + quad(cos_r, b, cos_r)

    out = np.empty((len(times), 2 * k, 2 * k))
    out[:, :k, :k] = qq
    out[:, :k, k:] = qp
    out[:, k:, :k] = np.transpose(qp, (0, 2, 1))
    out[:, k:, k:] = pp
    return (out + np.transpose(out, (0, 2, 1))) / 2.0
