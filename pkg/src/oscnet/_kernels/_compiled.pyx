# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled window-scan kernel; same contract as the reference module.

See reference.py for the derivation. Identical math, typed loops instead of
einsum, so the per-sample temporaries never touch the Python layer.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, sin

cnp.import_array()


def reduced_window_covariances(urows, omega, a, b, c, times):
    """Reduced covariances (T, 2k, 2k) of k output oscillators at T times."""
    cdef double[:, ::1] u = np.ascontiguousarray(urows, dtype=np.float64)
    cdef double[::1] w = np.ascontiguousarray(omega, dtype=np.float64)
    cdef double[:, ::1] av = np.ascontiguousarray(a, dtype=np.float64)
    cdef double[:, ::1] bv = np.ascontiguousarray(b, dtype=np.float64)
    cdef double[:, ::1] cv = np.ascontiguousarray(c, dtype=np.float64)
    cdef double[::1] ts = np.ascontiguousarray(times, dtype=np.float64)

    cdef Py_ssize_t k = u.shape[0]
    cdef Py_ssize_t m = u.shape[1]
    cdef Py_ssize_t T = ts.shape[0]

    out_arr = np.empty((T, 2 * k, 2 * k), dtype=np.float64)
    cdef double[:, :, ::1] out = out_arr

    # Phase rows per output oscillator (cos, sin/w, w*sin) and their images
    # under the mode-basis covariance blocks.
    scratch = np.empty((9, k, m))
    cdef double[:, ::1] rc = scratch[0], rs = scratch[1], rd = scratch[2]
    cdef double[:, ::1] ya = scratch[3], yc = scratch[4], yb = scratch[5]
    cdef double[:, ::1] yct = scratch[6], za = scratch[7], zc = scratch[8]
    extra = np.empty((2, k, m))
    cdef double[:, ::1] wct = extra[0], wb = extra[1]

    cdef Py_ssize_t it, i, j, n
    cdef double t, ph, cj, sj
    cdef double acc_a, acc_b, acc_c, acc_ct, acc_wct, acc_wb, qq, qp, pp, val

    for it in range(T):
        t = ts[it]
        for j in range(m):
            ph = w[j] * t
            cj = cos(ph)
            sj = sin(ph)
            for i in range(k):
                rc[i, j] = u[i, j] * cj
                rs[i, j] = u[i, j] * sj / w[j]
                rd[i, j] = u[i, j] * sj * w[j]
        for i in range(k):
            for n in range(m):
                acc_a = 0.0; acc_b = 0.0; acc_c = 0.0
                acc_ct = 0.0; acc_wct = 0.0; acc_wb = 0.0
                for j in range(m):
                    acc_a += rc[i, j] * av[j, n]       # ya = rc a
                    acc_c += rc[i, j] * cv[j, n]       # yc = rc c
                    acc_b += rs[i, j] * bv[j, n]       # yb = rs b
                    acc_ct += rs[i, j] * cv[n, j]      # yct = rs c^T
                    acc_wct += rc[i, j] * cv[n, j]     # wct = rc c^T
                    acc_wb += rc[i, j] * bv[j, n]      # wb = rc b
                ya[i, n] = acc_a
                yc[i, n] = acc_c
                yb[i, n] = acc_b
                yct[i, n] = acc_ct
                wct[i, n] = acc_wct
                wb[i, n] = acc_wb
                acc_a = 0.0; acc_c = 0.0
                for j in range(m):
                    acc_a += rd[i, j] * av[j, n]       # za = rd a
                    acc_c += rd[i, j] * cv[j, n]       # zc = rd c
                za[i, n] = acc_a
                zc[i, n] = acc_c
        for i in range(k):
            for n in range(k):
                qq = 0.0; qp = 0.0; pp = 0.0
                for j in range(m):
                    qq += (ya[i, j] + yct[i, j]) * rc[n, j] + (yc[i, j] + yb[i, j]) * rs[n, j]
                    qp += (yc[i, j] + yb[i, j]) * rc[n, j] - (ya[i, j] + yct[i, j]) * rd[n, j]
                    pp += (za[i, j] - wct[i, j]) * rd[n, j] + (wb[i, j] - zc[i, j]) * rc[n, j]
                out[it, i, n] = qq
                out[it, i, k + n] = qp
                out[it, k + i, k + n] = pp
        for i in range(k):
            for n in range(k):
                out[it, k + i, n] = out[it, n, k + i]
        for i in range(2 * k):
            for n in range(i):
                val = 0.5 * (out[it, i, n] + out[it, n, i])
                out[it, i, n] = val
                out[it, n, i] = val
    return out_arr
