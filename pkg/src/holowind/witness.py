"""Certificates of non-extendibility: a polynomial W with winding(f+W) < 0.

The direct route transcribes the splitting z*f(z)/c - 1 = z*P(z) +
conj(z*Q(z)) + g(z) with |g| kept <= 0.45 on the circle, which pins
Re(z*(f/c - P - Q)) to [0.55, 1.45] and hence forces winding(f+W) = -1 for
W = -c*(P+Q).  When the mean c vanishes, the pole-lift route divides by
(z - w) for an exterior point w where the Cauchy transform is largest and
applies the direct route there; multiplying the witness back by (z - w)
preserves the winding since 1/(z - w) has winding zero on the circle.
Every certificate is re-verified by the winding module before it is
returned.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .boundary import (
    BoundarySamples,
    ComplexPolynomial,
    LaurentExpression,
    _cpair,
    circle_grid,
    dft,
)
from .errors import (
    AverageTooSmall,
    ConstructionFailed,
    NoUsablePole,
    TailNotBounded,
)
from .extend import NOT_EXTENDIBLE, W_GRID, Verdict, cauchy_outside, moment, verdict
from .winding import winding_of_sum

TAIL_BUDGET = 0.45
MEAN_THRESHOLD = 1e-6

ROUTE_DIRECT = "direct"
ROUTE_POLE_LIFT = "pole_lift"


@dataclass(frozen=True)
class WitnessTrace:
    """Construction record: normalizer, truncation degree, tail bound, grid size."""

    c: complex
    truncation_degree: int
    l1_tail: float
    n_used: int

    def to_json(self) -> dict:
        return {
            "c": _cpair(self.c),
            "truncation_degree": self.truncation_degree,
            "l1_tail": self.l1_tail,
            "n_used": self.n_used,
        }


@dataclass(frozen=True)
class WitnessCertificate:
    witness: ComplexPolynomial
    winding: int
    pole: complex | None  # None for the direct route
    trace: WitnessTrace

    @property
    def route(self) -> str:
        return ROUTE_DIRECT if self.pole is None else ROUTE_POLE_LIFT

    def to_json(self) -> dict:
        route = "direct" if self.pole is None else {"pole_lift": _cpair(self.pole)}
        return {
            "witness": self.witness.coefficient_pairs(),
            "winding": self.winding,
            "route": route,
            "trace": self.trace.to_json(),
        }


def _tail_by_radius(abs_coeffs: np.ndarray, frequencies: np.ndarray) -> np.ndarray:
    """tails[m] = sum of |c_k| over |k| > m, for m = 0..max|k|."""
    kabs = np.abs(frequencies)
    m_max = int(kabs.max())
    per_radius = np.zeros(m_max + 1)
    np.add.at(per_radius, kabs, abs_coeffs)
    inner = np.cumsum(per_radius)
    return inner[-1] - inner


def construct_direct(f: BoundarySamples, expr: LaurentExpression | None = None) -> WitnessCertificate:
    """Witness via the splitting of z*f/c - 1 into polynomial parts plus a small tail."""
    scale = f.rms
    c = moment(f, 0)
    if abs(c) <= MEAN_THRESHOLD * scale:
        raise AverageTooSmall(
            f"|mean| = {abs(c):.3e} <= {MEAN_THRESHOLD:.0e} * rms ({scale:.3e})"
        )
    grid = circle_grid(f.n)
    h = BoundarySamples(grid * f.values / c - 1.0)
    hc = dft(h)

    tails = _tail_by_radius(np.abs(hc.c), hc.frequencies)
    hits = np.nonzero(tails <= TAIL_BUDGET)[0]
    if hits.size == 0:
        raise TailNotBounded(
            f"no truncation keeps the coefficient tail under {TAIL_BUDGET}"
        )
    m_trunc = int(hits[0])
    tail = float(tails[m_trunc])

    k_hi = min(m_trunc, hc.k_max)
    p_part = ComplexPolynomial(
        np.array([hc.get(k) for k in range(1, k_hi + 1)]) if k_hi >= 1 else [0]
    )
    q_part = ComplexPolynomial(
        np.array([np.conj(hc.get(-m)) for m in range(1, m_trunc + 1)])
        if m_trunc >= 1
        else [0]
    )
    witness_poly = (-c) * (p_part + q_part)

    # The proof's guarantee, checked on the grid before any winding is run.
    re_vals = np.real(grid * (f.values / c - p_part(grid) - q_part(grid)))
    deviation = float(np.max(np.abs(re_vals - 1.0)))
    if deviation > TAIL_BUDGET + 1e-9:
        raise ConstructionFailed(
            f"real-part bound violated: max |Re - 1| = {deviation:.3f} > {TAIL_BUDGET}"
        )

    result = winding_of_sum(f, witness_poly, expr=expr)
    if result.winding != -1:
        raise ConstructionFailed(
            f"re-verified winding is {result.winding}, expected -1"
        )
    return WitnessCertificate(
        witness=witness_poly,
        winding=result.winding,
        pole=None,
        trace=WitnessTrace(c=c, truncation_degree=m_trunc, l1_tail=tail, n_used=f.n),
    )


def construct_lifted(f: BoundarySamples, expr: LaurentExpression | None = None) -> WitnessCertificate:
    """Witness via division by (z - w) for an exterior pole point w.

    Picks the w-grid point maximizing |G(w)| (ties: smallest |w|, then
    smallest angle index, by iteration order), certifies f/(z-w) directly,
    and multiplies the inner witness back by (z - w).
    """
    scale = f.rms
    best_w, best_g = None, 0.0
    for w in W_GRID:
        g = abs(cauchy_outside(f, w))
        # strict improvement beyond rounding noise, so numerically tied
        # points resolve to the smallest |w|, then the smallest angle index
        if g > best_g * (1.0 + 1e-12):
            best_w, best_g = complex(w), g
    if best_w is None or best_g <= MEAN_THRESHOLD * scale:
        raise NoUsablePole(
            f"max |G(w)| = {best_g:.3e} <= {MEAN_THRESHOLD:.0e} * rms ({scale:.3e})"
        )

    grid = circle_grid(f.n)
    lifted = BoundarySamples(f.values / (grid - best_w))
    inner = construct_direct(lifted)
    witness_poly = ComplexPolynomial([-best_w, 1.0]) * inner.witness

    result = winding_of_sum(f, witness_poly, expr=expr)
    if result.winding > -1:
        raise ConstructionFailed(
            f"re-verified winding is {result.winding}, expected <= -1"
        )
    return WitnessCertificate(
        witness=witness_poly,
        winding=result.winding,
        pole=best_w,
        trace=inner.trace,
    )


@dataclass(frozen=True)
class PipelineResult:
    verdict: Verdict
    certificate: WitnessCertificate | None
    failure: str | None

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.to_json(),
            "certificate": None if self.certificate is None else self.certificate.to_json(),
            "failure": self.failure,
        }


def pipeline(
    f: BoundarySamples,
    tol: float = 1e-8,
    expr: LaurentExpression | None = None,
) -> PipelineResult:
    """Verdict plus, when non-extendible, a verified witness certificate.

    Construction failures are returned as data, never as a certificate with
    non-negative winding.
    """
    v = verdict(f, tol)
    if v.status != NOT_EXTENDIBLE:
        return PipelineResult(v, None, None)
    reasons = []
    try:
        return PipelineResult(v, construct_direct(f, expr=expr), None)
    except (AverageTooSmall, TailNotBounded, ConstructionFailed) as exc:
        reasons.append(f"direct: {exc}")
    try:
        return PipelineResult(v, construct_lifted(f, expr=expr), None)
    except (AverageTooSmall, TailNotBounded, NoUsablePole, ConstructionFailed) as exc:
        reasons.append(f"{ROUTE_POLE_LIFT}: {exc}")
    return PipelineResult(v, None, "; ".join(reasons))
