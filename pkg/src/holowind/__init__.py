"""Holomorphic extendibility tests and winding-number witness certificates.

A sampled function on the unit circle either extends holomorphically through
the disc (all three boundary criteria vanish) or admits a polynomial witness
W making the change of argument of f + W negative; this package computes
both sides and cross-validates every winding number against an independent
root-counting oracle.
"""

from ._backend import BACKEND
from .boundary import (
    BoundarySamples,
    ComplexPolynomial,
    FourierCoefficients,
    LaurentExpression,
    circle_grid,
    dft,
    l1_tail,
    resample,
    sample,
    truncated_eval,
)
from .extend import Verdict, cauchy_outside, moment, negative_energy, verdict
from .oracle import (
    CampaignReport,
    RationalFunction,
    RootSet,
    prop41_campaign,
    prop41_trial,
    rational_winding,
    roots,
)
from .winding import (
    WindingResult,
    change_of_argument,
    winding_of_sum,
    winding_with_refinement,
)
from .witness import (
    PipelineResult,
    WitnessCertificate,
    construct_direct,
    construct_lifted,
    pipeline,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BoundarySamples",
    "CampaignReport",
    "ComplexPolynomial",
    "FourierCoefficients",
    "LaurentExpression",
    "PipelineResult",
    "RationalFunction",
    "RootSet",
    "Verdict",
    "WindingResult",
    "WitnessCertificate",
    "cauchy_outside",
    "change_of_argument",
    "circle_grid",
    "construct_direct",
    "construct_lifted",
    "dft",
    "l1_tail",
    "moment",
    "negative_energy",
    "pipeline",
    "prop41_campaign",
    "prop41_trial",
    "rational_winding",
    "resample",
    "roots",
    "sample",
    "truncated_eval",
    "verdict",
    "winding_of_sum",
    "winding_with_refinement",
]
