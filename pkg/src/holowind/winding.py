"""Change of argument (winding number) of sampled nonvanishing closed curves.

The winding is only reported when the sampling certifies it: every per-step
turn must stay below pi/2 (a 2x margin against silently completing an extra
loop) and the accumulated total must land within 0.1 turns of an integer.
Anything else raises rather than guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from ._backend import curve_steps
from .boundary import (
    MAX_SAMPLES,
    BoundarySamples,
    ComplexPolynomial,
    LaurentExpression,
    circle_grid,
    is_power_of_two,
    resample,
    sample,
)
from .errors import Unresolved, ZeroOnCurve

TURN_LIMIT = np.pi / 2
ZERO_REL = 1e-9
AGREEMENT_SLACK = 0.1
TWO_PI = 2.0 * np.pi

Resampler = Callable[[int], BoundarySamples]


@dataclass(frozen=True)
class WindingResult:
    """Integer change of argument plus the diagnostics that certify it."""

    winding: int
    min_modulus: float
    max_step_turn: float
    n_used: int
    raw_total: float


def change_of_argument(samples: BoundarySamples) -> WindingResult:
    """Winding of the sampled curve around the origin.

    Raises ZeroOnCurve when the curve (numerically) vanishes, Unresolved when
    the sampling is too coarse to certify an integer.
    """
    raw_total, max_step, min_mod, max_mod = curve_steps(samples.values)
    if max_mod == 0.0 or min_mod <= ZERO_REL * max_mod:
        raise ZeroOnCurve(
            f"curve modulus drops to {min_mod:.3e} (max {max_mod:.3e})",
            min_modulus=min_mod,
            max_modulus=max_mod,
        )
    if max_step >= TURN_LIMIT:
        raise Unresolved(
            f"per-step turn {max_step:.3f} rad exceeds pi/2 at N={samples.n}",
            n_used=samples.n,
            max_step_turn=max_step,
        )
    turns = raw_total / TWO_PI
    winding = int(round(turns))
    if abs(turns - winding) >= AGREEMENT_SLACK:
        raise Unresolved(
            f"accumulated argument {turns:.4f} turns is not near an integer",
            n_used=samples.n,
            max_step_turn=max_step,
        )
    return WindingResult(
        winding=winding,
        min_modulus=min_mod,
        max_step_turn=max_step,
        n_used=samples.n,
        raw_total=raw_total,
    )


def _as_resampler(source: Union[LaurentExpression, BoundarySamples, Resampler]) -> Resampler:
    if isinstance(source, LaurentExpression):
        return lambda n: sample(source, n)
    if isinstance(source, BoundarySamples):
        return lambda n: resample(source, n)
    return source


def winding_with_refinement(
    source: Union[LaurentExpression, BoundarySamples, Resampler],
    n_start: int = 1024,
) -> WindingResult:
    """Double the grid until the winding is certified and stable.

    Accepts when two consecutive refinements both pass change_of_argument and
    agree on the integer; gives up (Unresolved) at the 2**20 cap.
    """
    fn = _as_resampler(source)
    n = max(16, n_start)
    if not is_power_of_two(n):
        n = 1 << int(np.ceil(np.log2(n)))
    prev: WindingResult | None = None
    last_error: Unresolved | None = None
    while n <= MAX_SAMPLES:
        try:
            result = change_of_argument(fn(n))
        except Unresolved as exc:
            prev = None
            last_error = exc
        else:
            if prev is not None and prev.winding == result.winding:
                return result
            prev = result
        n *= 2
    if last_error is not None:
        raise Unresolved(
            f"winding unresolved at the refinement cap {MAX_SAMPLES}: {last_error}",
            n_used=last_error.n_used,
            max_step_turn=last_error.max_step_turn,
        )
    raise Unresolved(
        f"winding did not stabilize below the refinement cap {MAX_SAMPLES}",
        n_used=MAX_SAMPLES,
    )


def winding_of_sum(
    f: BoundarySamples,
    p: ComplexPolynomial,
    expr: LaurentExpression | None = None,
) -> WindingResult:
    """Winding of f + P, with refinement.

    Refinement resamples the exact expression when one is supplied, otherwise
    the band-limited interpolant of the given samples.
    """
    if expr is not None:
        base = _as_resampler(expr)
    else:
        base = _as_resampler(f)

    def source(n: int) -> BoundarySamples:
        s = base(n)
        return BoundarySamples(s.values + p(circle_grid(n)), label=s.label)

    return winding_with_refinement(source, n_start=f.n)
