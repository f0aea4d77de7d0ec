"""Three independent extendibility criteria and their combined verdict.

A function on the circle extends holomorphically through the disc exactly
when its negative-frequency content vanishes; equivalently when every moment
(1/2pi*i) * integral of z**n f(z) dz vanishes, and equivalently when the
exterior Cauchy transform vanishes off the closed disc.  All three are
computed and must agree; a split between them is reported as Inconclusive.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .boundary import (
    BoundarySamples,
    FourierCoefficients,
    circle_grid,
    resample,
    _cpair,
)
from .errors import PoleTooClose

logger = logging.getLogger(__name__)

EXTENDIBLE = "Extendible"
NOT_EXTENDIBLE = "NotExtendible"
INCONCLUSIVE = "Inconclusive"

DEFAULT_TOL = 1e-8
GAP = 10.0
MOMENT_CAP = 64
MIN_POLE_RADIUS = 1.05
QUADRATURE_FLOOR = 1024

# Exterior evaluation grid: radii ascending, then 8 equispaced angles each.
# Iteration order doubles as the tie-break (smallest |w|, then angle index).
W_GRID_RADII = (1.25, 1.5, 2.0, 4.0)
W_GRID = tuple(
    r * np.exp(2j * np.pi * a / 8) for r in W_GRID_RADII for a in range(8)
)


@dataclass(frozen=True)
class Verdict:
    status: str
    negative_energy: float
    worst_moment: tuple  # (index n, modulus)
    worst_cauchy: tuple  # (point w, modulus)
    tol: float
    criteria: tuple = ()  # per-criterion classification, not serialized

    @property
    def split(self) -> bool:
        return "pass" in self.criteria and "fail" in self.criteria

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "negative_energy": self.negative_energy,
            "worst_moment": [int(self.worst_moment[0]), float(self.worst_moment[1])],
            "worst_cauchy": [_cpair(self.worst_cauchy[0]), float(self.worst_cauchy[1])],
            "tol": self.tol,
        }


def negative_energy(coeffs: FourierCoefficients) -> float:
    """sqrt of the energy at frequencies k <= -1."""
    neg = coeffs.band(coeffs.k_min, -1)
    return float(np.sqrt(np.sum(np.abs(neg) ** 2)))


def moment(f: BoundarySamples, n: int) -> complex:
    """(1/2pi*i) * integral of z**n f(z) dz, by the grid trapezoid rule.

    On this grid the quadrature equals the Fourier coefficient c_{-n-1}
    identically; the agreement is checked as an internal consistency
    contract whenever -n-1 lies in the stored band.
    """
    if n < 0:
        raise ValueError("moment index must be >= 0")
    grid = circle_grid(f.n)
    quad = complex(np.mean(grid ** (n + 1) * f.values))
    if n + 1 <= f.n // 2:
        ck = f.coeffs.get(-n - 1)
        if abs(quad - ck) > 1e-10 * max(f.rms, 1e-30):
            raise RuntimeError(
                f"moment/coefficient identity violated at n={n}: "
                f"{quad} vs c_{-n-1} = {ck}"
            )
    return quad


def cauchy_outside(f: BoundarySamples, w: complex) -> complex:
    """Exterior Cauchy transform G(w) = (1/2pi*i) * integral of f(z)/(z-w) dz.

    Computed by quadrature on a grid of at least 1024 points (the integrand
    is not band-limited, so small grids are refined first) and cross-checked
    against the negative-coefficient series -sum_{m>=1} c_{-m} w**-m.
    """
    w = complex(w)
    if abs(w) < MIN_POLE_RADIUS:
        raise PoleTooClose(f"|w| = {abs(w):.4f} < {MIN_POLE_RADIUS}")
    fu = f if f.n >= QUADRATURE_FLOOR else resample(f, QUADRATURE_FLOOR)
    grid = circle_grid(fu.n)
    quad = complex(np.mean(fu.values * grid / (grid - w)))
    c = fu.coeffs
    ms = np.arange(1, fu.n // 2 + 1)
    neg = np.array([c.get(-int(m)) for m in ms])
    series = complex(-np.sum(neg * w ** (-ms.astype(float))))
    if abs(quad - series) > 1e-9 * max(f.rms, 1e-30):
        raise RuntimeError(
            f"Cauchy quadrature/series identity violated at w={w}: "
            f"{quad} vs {series}"
        )
    return quad


def _classify(value: float, lo: float, hi: float) -> str:
    if value <= lo:
        return "pass"
    if value > hi:
        return "fail"
    return "band"


def verdict(f: BoundarySamples, tol: float = DEFAULT_TOL) -> Verdict:
    """Run all three criteria and combine them.

    Thresholds are relative to the grid RMS of f: a criterion passes at
    tol * rms, fails above 10 * tol * rms, and anything between (or any
    disagreement between criteria) yields Inconclusive.
    """
    if not 1e-12 <= tol <= 1e-2:
        raise ValueError("tol must lie in [1e-12, 1e-2]")
    scale = f.rms
    lo, hi = tol * scale, GAP * tol * scale

    energy = negative_energy(f.coeffs)

    n_max = min(f.n // 2 - 1, MOMENT_CAP)
    worst_m_idx, worst_m = 0, 0.0
    for n in range(n_max + 1):
        m = abs(moment(f, n))
        if m > worst_m:
            worst_m_idx, worst_m = n, m

    worst_w, worst_c = W_GRID[0], 0.0
    for w in W_GRID:
        g = abs(cauchy_outside(f, w))
        if g > worst_c:
            worst_w, worst_c = w, g

    criteria = (
        _classify(energy, lo, hi),
        _classify(worst_m, lo, hi),
        _classify(worst_c, lo, hi),
    )
    if all(c == "pass" for c in criteria):
        status = EXTENDIBLE
    elif all(c == "fail" for c in criteria):
        status = NOT_EXTENDIBLE
    else:
        status = INCONCLUSIVE
        if "pass" in criteria and "fail" in criteria:
            logger.warning(
                "criteria split on %s: energy=%s moment=%s cauchy=%s",
                f.label or "<unlabeled>", *criteria,
            )

    return Verdict(
        status=status,
        negative_energy=energy,
        worst_moment=(worst_m_idx, worst_m),
        worst_cauchy=(worst_w, worst_c),
        tol=tol,
        criteria=criteria,
    )
