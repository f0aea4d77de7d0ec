"""Independent ground truth via polynomial roots and the argument principle.

The root finder is an Aberth-Ehrlich simultaneous iteration with a
deterministic initial configuration (roots of unity on a coefficient-bound
circle, phase-offset to break symmetry) followed by Newton polishing, so the
same coefficients always give the same certified root multiset.  Counting
roots inside the disc then gives winding numbers without ever sampling a
curve, which is what makes this module an oracle for the winding module.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._backend import aberth
from .boundary import BoundarySamples, ComplexPolynomial, LaurentExpression, _cpair, sample
from .errors import CampaignFailure, NoConvergence, RootNearCircle, Unresolved, ZeroOnCurve
from .winding import winding_of_sum

RESIDUAL_TOL = 1e-8
INSIDE_MARGIN = 1e-9
CIRCLE_MARGIN = 1e-6
NUMERIC_CHECK_MARGIN = 1e-3
VIETA_TOL = 1e-6
_TINY = 1e-300


@dataclass(frozen=True)
class RationalFunction:
    """Ratio of two polynomials; reduced only by coefficient trimming."""

    numerator: ComplexPolynomial
    denominator: ComplexPolynomial

    def __post_init__(self):
        if self.denominator.is_zero:
            raise ValueError("denominator must not be identically zero")

    def __call__(self, z):
        return self.numerator(z) / self.denominator(z)

    @classmethod
    def from_laurent(cls, expr: LaurentExpression) -> "RationalFunction":
        shift = max(0, -expr.min_exponent)
        shifted = expr.shifted(shift)
        num = np.zeros(shifted.max_exponent + 1, dtype=np.complex128)
        for m, c in shifted.terms:
            num[m] = c
        return cls(ComplexPolynomial(num), ComplexPolynomial.monomial(shift))


@dataclass(frozen=True)
class RootSet:
    """All roots with multiplicity, plus the worst scaled residual."""

    roots: np.ndarray
    residual: float

    def __post_init__(self):
        r = np.asarray(self.roots, dtype=np.complex128).copy()
        r.setflags(write=False)
        object.__setattr__(self, "roots", r)

    def count_inside_disc(self) -> int:
        return int(np.sum(np.abs(self.roots) < 1.0 - INSIDE_MARGIN))

    def min_circle_distance(self) -> float:
        if self.roots.size == 0:
            return np.inf
        return float(np.min(np.abs(np.abs(self.roots) - 1.0)))


def _polyval(coeffs: np.ndarray, z: np.ndarray) -> np.ndarray:
    acc = np.full_like(z, coeffs[-1])
    for c in coeffs[-2::-1]:
        acc = acc * z + c
    return acc


def _scaled_residual(coeffs: np.ndarray, rts: np.ndarray) -> float:
    """max |p(r)| relative to the coefficient magnitude sum_i |a_i| |r|**i."""
    if rts.size == 0:
        return 0.0
    p = np.abs(_polyval(coeffs, rts))
    bound = _polyval(np.abs(coeffs).astype(complex), np.abs(rts).astype(complex)).real
    return float(np.max(p / np.maximum(bound, _TINY)))


def _polish(coeffs: np.ndarray, rts: np.ndarray, steps: int = 3) -> np.ndarray:
    dcoeffs = coeffs[1:] * np.arange(1, coeffs.size)
    for _ in range(steps):
        p = _polyval(coeffs, rts)
        dp = _polyval(dcoeffs, rts)
        dp = np.where(dp == 0, _TINY, dp)
        cand = rts - p / dp
        # accept a Newton step only where it actually reduces |p|
        better = np.abs(_polyval(coeffs, cand)) < np.abs(p)
        rts = np.where(better, cand, rts)
    return rts


def roots(p: ComplexPolynomial, maxiter: int = 500) -> RootSet:
    """All complex roots of p, deterministically, with a residual certificate."""
    if p.degree < 1:
        raise ValueError("polynomial degree must be >= 1")
    c = np.asarray(p.coeffs, dtype=np.complex128)
    # exact zero roots at the origin come off first
    n_zero = 0
    while c.size > 1 and c[0] == 0:
        n_zero += 1
        c = c[1:]
    d = c.size - 1
    if d == 0:
        found = np.zeros(0, dtype=np.complex128)
    elif d == 1:
        found = np.array([-c[0] / c[1]])
    else:
        b = c / c[-1]
        radius = 1.0 + float(np.max(np.abs(b[:-1])))
        z0 = 0.5 * radius * np.exp(1j * (2 * np.pi * np.arange(d) / d + 0.4))
        z, _ = aberth(np.ascontiguousarray(b), np.ascontiguousarray(z0),
                      maxiter, 1e-13, 1e-14)
        found = _polish(c, np.asarray(z))
    allr = np.concatenate([np.zeros(n_zero, dtype=np.complex128), found])
    order = np.lexsort((allr.imag, allr.real))
    allr = allr[order]
    residual = _scaled_residual(np.asarray(p.coeffs, dtype=np.complex128), allr)
    if residual > RESIDUAL_TOL:
        raise NoConvergence(
            f"root residual {residual:.3e} above {RESIDUAL_TOL:.0e} "
            f"after {maxiter} iterations",
            residual=residual,
        )
    return RootSet(allr, residual)


def rational_winding(r: RationalFunction) -> int:
    """(zeros inside the disc) - (poles inside the disc), with multiplicity."""
    counts = []
    for poly in (r.numerator, r.denominator):
        if poly.degree < 1:
            counts.append(0)
            continue
        rs = roots(poly)
        if rs.min_circle_distance() < CIRCLE_MARGIN:
            raise RootNearCircle(
                f"root within {CIRCLE_MARGIN:.0e} of |z|=1: "
                f"distance {rs.min_circle_distance():.3e}"
            )
        counts.append(rs.count_inside_disc())
    return counts[0] - counts[1]


@dataclass(frozen=True)
class TrialRecord:
    """One randomized trial of the degree-bounded nonnegativity statement."""

    skipped: bool
    min_circle_distance: float
    zeros_inside: int | None = None
    winding: int | None = None
    min_root_modulus: float | None = None
    vieta_product: float | None = None
    vieta_rel_err: float | None = None
    numeric_winding: int | None = None
    failure: str | None = None


def _shifted_family_poly(n: int, p: ComplexPolynomial) -> ComplexPolynomial:
    """z**(n+1) + z*P(z) + 1/2, whose zeros are the zeros of f + P for
    f = z**n + 1/(2z)."""
    coeffs = np.zeros(n + 2, dtype=np.complex128)
    coeffs[0] = 0.5
    pz = p.coeffs
    coeffs[1 : 1 + pz.size] += pz
    coeffs[n + 1] += 1.0
    return ComplexPolynomial(coeffs)


def family_expression(n: int) -> LaurentExpression:
    """The counterexample family z**n + (1/2) z**-1."""
    return LaurentExpression(((n, 1.0), (-1, 0.5)))


def prop41_trial(n0: int, n: int, p: ComplexPolynomial) -> TrialRecord:
    """Check one perturbation P (deg <= n0) of the family with n >= n0 + 1.

    Verifies the Vieta product of root moduli (= 1/2), the forced root inside
    the disc, and that the argument-principle winding (zeros inside minus the
    single pole) is nonnegative; cross-checks the sampled winding when every
    root stays comfortably away from the circle.
    """
    if n < n0 + 1:
        raise ValueError(f"need n >= n0 + 1, got n0={n0}, n={n}")
    if p.degree > n0:
        raise ValueError(f"deg P = {p.degree} exceeds n0 = {n0}")
    q = _shifted_family_poly(n, p)
    rs = roots(q)
    dist = rs.min_circle_distance()
    if dist < CIRCLE_MARGIN:
        return TrialRecord(skipped=True, min_circle_distance=dist)

    failure = None
    mods = np.abs(rs.roots)
    vieta = float(np.prod(mods))
    vieta_err = abs(vieta - 0.5) / 0.5
    if vieta_err > VIETA_TOL:
        failure = f"vieta product {vieta} off 1/2 by {vieta_err:.3e}"
    min_mod = float(np.min(mods))
    bound = 0.5 ** (1.0 / (n + 1))
    if min_mod > bound + 1e-9:
        failure = failure or f"min root modulus {min_mod} exceeds {bound}"
    nu = rs.count_inside_disc()
    wind = nu - 1
    if wind < 0:
        failure = failure or f"negative oracle winding {wind}"

    numeric = None
    if failure is None and dist >= NUMERIC_CHECK_MARGIN:
        expr = family_expression(n)
        try:
            res = winding_of_sum(sample(expr, 1024), p, expr=expr)
            numeric = res.winding
            if numeric != wind:
                failure = f"numeric winding {numeric} != oracle {wind}"
        except (ZeroOnCurve, Unresolved) as exc:
            failure = f"numeric winding unavailable: {exc}"

    return TrialRecord(
        skipped=False,
        min_circle_distance=dist,
        zeros_inside=nu,
        winding=wind,
        min_root_modulus=min_mod,
        vieta_product=vieta,
        vieta_rel_err=vieta_err,
        numeric_winding=numeric,
        failure=failure,
    )


@dataclass(frozen=True)
class CampaignReport:
    n0: int
    n: int
    trials: int
    seed: int
    radius: float
    failures: list = field(default_factory=list)
    skipped_trials: list = field(default_factory=list)
    winding_histogram: dict = field(default_factory=dict)
    min_root_modulus: dict = field(default_factory=dict)
    vieta_max_rel_err: float = 0.0
    numeric_checked: int = 0

    def to_json(self) -> dict:
        return {
            "n0": self.n0,
            "n": self.n,
            "trials": self.trials,
            "seed": self.seed,
            "radius": self.radius,
            "sampler": {
                "scheme": "per-trial seed streams; even trials uniform in the "
                          "disc of the given radius, odd trials log-uniform "
                          "magnitude stress variant",
                "log_magnitude_range": [1e-3, 1e3],
            },
            "failures": self.failures,
            "skipped_trials": self.skipped_trials,
            "winding_histogram": {str(k): v for k, v in sorted(self.winding_histogram.items())},
            "min_root_modulus": self.min_root_modulus,
            "vieta_max_rel_err": self.vieta_max_rel_err,
            "numeric_checked": self.numeric_checked,
        }


def _sample_perturbation(rng: np.random.Generator, n0: int, radius: float,
                         stress: bool) -> ComplexPolynomial:
    size = n0 + 1
    theta = rng.uniform(0.0, 2 * np.pi, size)
    if stress:
        mags = 10.0 ** rng.uniform(-3.0, 3.0, size)
    else:
        mags = radius * np.sqrt(rng.uniform(0.0, 1.0, size))
    return ComplexPolynomial(mags * np.exp(1j * theta))


def prop41_campaign(n0: int, n: int, trials: int, seed: int,
                    radius: float) -> CampaignReport:
    """Seeded randomized verification campaign over perturbations of deg <= n0.

    Per-trial RNG streams are derived by spawning the seed sequence, so trials
    are order-independent and exactly replayable.  A trial with negative
    winding aborts with the offending coefficients (that would falsify the
    implementation, not the theorem).
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if n < n0 + 1:
        raise ValueError(f"need n >= n0 + 1, got n0={n0}, n={n}")
    children = np.random.SeedSequence(seed).spawn(trials)
    failures = []
    skipped = []
    hist: dict = {}
    mods = []
    vieta_worst = 0.0
    numeric_checked = 0
    for i in range(trials):
        rng = np.random.default_rng(children[i])
        p = _sample_perturbation(rng, n0, radius, stress=(i % 2 == 1))
        rec = prop41_trial(n0, n, p)
        if rec.skipped:
            skipped.append(i)
            continue
        if rec.winding is not None and rec.winding < 0:
            raise CampaignFailure(
                f"trial {i}: negative winding {rec.winding} for "
                f"P = {list(p.coeffs)}",
                coefficients=list(p.coeffs),
            )
        if rec.failure is not None:
            failures.append({"trial": i, "reason": rec.failure,
                             "coefficients": [_cpair(a) for a in p.coeffs]})
        hist[rec.winding] = hist.get(rec.winding, 0) + 1
        mods.append(rec.min_root_modulus)
        vieta_worst = max(vieta_worst, rec.vieta_rel_err)
        if rec.numeric_winding is not None:
            numeric_checked += 1
    stats = {}
    if mods:
        stats = {"min": float(np.min(mods)), "max": float(np.max(mods)),
                 "mean": float(np.mean(mods))}
    return CampaignReport(
        n0=n0, n=n, trials=trials, seed=seed, radius=radius,
        failures=failures, skipped_trials=skipped, winding_histogram=hist,
        min_root_modulus=stats, vieta_max_rel_err=vieta_worst,
        numeric_checked=numeric_checked,
    )
