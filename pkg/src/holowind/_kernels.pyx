# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: winding-step accumulation and the all-roots solver.

Same contracts as holowind._kernels_numpy; see the docstrings there.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport atan2, fabs, sqrt

cnp.import_array()

cdef double _TINY = 1e-300


def curve_steps(const cnp.complex128_t[::1] v):
    cdef Py_ssize_t n = v.shape[0]
    cdef Py_ssize_t j, jn
    cdef double total = 0.0
    cdef double max_step = 0.0
    cdef double min_mod = 0.0
    cdef double max_mod = 0.0
    cdef double step, mod, rre, rim
    cdef double complex a, b
    if n == 0:
        raise ValueError("empty curve")
    for j in range(n):
        a = v[j]
        mod = sqrt(a.real * a.real + a.imag * a.imag)
        if j == 0:
            min_mod = mod
            max_mod = mod
        else:
            if mod < min_mod:
                min_mod = mod
            if mod > max_mod:
                max_mod = mod
        jn = j + 1
        if jn == n:
            jn = 0
        b = v[jn]
        # arg(b/a) = arg(b * conj(a)); avoids the division
        rre = b.real * a.real + b.imag * a.imag
        rim = b.imag * a.real - b.real * a.imag
        step = atan2(rim, rre)
        total += step
        if fabs(step) > max_step:
            max_step = fabs(step)
    return total, max_step, min_mod, max_mod


def aberth(const cnp.complex128_t[::1] coeffs, const cnp.complex128_t[::1] z0,
           int maxiter, double corr_tol, double resid_tol):
    cdef Py_ssize_t m = coeffs.shape[0]
    cdef Py_ssize_t d = z0.shape[0]
    cdef Py_ssize_t i, j, k
    z_arr = np.array(z0, dtype=np.complex128)
    cdef cnp.complex128_t[::1] z = z_arr
    abs_b_arr = np.abs(np.asarray(coeffs))
    cdef double[::1] abs_b = abs_b_arr
    cdef double complex p, dp, s, diff, newton, denom, corr, zj
    cdef double bound, az, resid, acorr
    cdef bint converged, resid_ok
    cdef int iters = 0
    cdef int it
    for it in range(1, maxiter + 1):
        iters = it
        converged = True
        resid_ok = True
        for j in range(d):
            zj = z[j]
            # Horner for p, p' and the coefficient-magnitude bound
            p = coeffs[m - 1]
            dp = 0
            for i in range(m - 2, -1, -1):
                dp = dp * zj + p
                p = p * zj + coeffs[i]
            az = sqrt(zj.real * zj.real + zj.imag * zj.imag)
            bound = abs_b[m - 1]
            for i in range(m - 2, -1, -1):
                bound = bound * az + abs_b[i]
            if bound < _TINY:
                bound = _TINY
            resid = sqrt(p.real * p.real + p.imag * p.imag) / bound
            if resid > resid_tol:
                resid_ok = False
            if dp == 0:
                dp = _TINY
            newton = p / dp
            s = 0
            for k in range(d):
                if k != j:
                    diff = zj - z[k]
                    if diff == 0:
                        diff = _TINY
                    s = s + 1.0 / diff
            denom = 1.0 - newton * s
            if denom == 0:
                denom = 1.0
            corr = newton / denom
            z[j] = zj - corr
            acorr = sqrt(corr.real * corr.real + corr.imag * corr.imag)
            az = sqrt(z[j].real * z[j].real + z[j].imag * z[j].imag)
            if acorr > corr_tol * (1.0 + az):
                converged = False
        if converged or resid_ok:
            break
    return z_arr, iters
