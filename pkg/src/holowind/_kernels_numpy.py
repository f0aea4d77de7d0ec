"""Pure numpy implementations of the hot kernels.

Drop-in fallback for the compiled module ``holowind._kernels``; both expose
``curve_steps`` and ``aberth`` with identical signatures and semantics.
"""

import numpy as np

_TINY = 1e-300


def curve_steps(values):
    """One pass over a sampled closed curve.

    Returns ``(raw_total, max_step_turn, min_modulus, max_modulus)`` where
    raw_total is the sum of principal-argument increments between consecutive
    samples (the closing step back to values[0] included) and max_step_turn
    is the largest increment in absolute value.
    """
    v = np.asarray(values, dtype=np.complex128)
    mods = np.abs(v)
    ratios = np.roll(v, -1) * np.conj(v)
    steps = np.arctan2(ratios.imag, ratios.real)
    return (
        float(np.sum(steps)),
        float(np.max(np.abs(steps))),
        float(np.min(mods)),
        float(np.max(mods)),
    )


def _polyval(coeffs, z):
    # Horner, coefficients lowest degree first.
    acc = np.full_like(z, coeffs[-1])
    for c in coeffs[-2::-1]:
        acc = acc * z + c
    return acc


def aberth(coeffs, z0, maxiter, corr_tol, resid_tol):
    """Aberth-Ehrlich simultaneous root iteration.

    coeffs: polynomial coefficients lowest degree first, leading entry
    nonzero, degree >= 2.  z0: initial root configuration.  Stops when every
    correction falls below corr_tol*(1+|z|), when every backward-error
    residual falls below resid_tol, or at maxiter.  Returns (roots,
    iterations).  This variant updates all roots simultaneously (Jacobi
    sweep); the compiled kernel sweeps in place (Gauss-Seidel), so the two
    backends agree to convergence tolerance, not bitwise.
    """
    b = np.asarray(coeffs, dtype=np.complex128)
    z = np.array(z0, dtype=np.complex128)
    db = b[1:] * np.arange(1, b.size)
    abs_b = np.abs(b)
    iters = 0
    for iters in range(1, maxiter + 1):
        p = _polyval(b, z)
        dp = _polyval(db, z)
        bound = _polyval(abs_b, np.abs(z))
        resid = np.abs(p) / np.maximum(bound, _TINY)
        if np.all(resid <= resid_tol):
            break
        dp = np.where(dp == 0, _TINY, dp)
        newton = p / dp
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        diff = np.where(diff == 0, _TINY, diff)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        s = inv.sum(axis=1)
        denom = 1.0 - newton * s
        denom = np.where(denom == 0, 1.0, denom)
        corr = newton / denom
        z = z - corr
        if np.all(np.abs(corr) <= corr_tol * (1.0 + np.abs(z))):
            break
    return z, iters
