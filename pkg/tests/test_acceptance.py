"""Top-level acceptance suite.

Each test prints a single PASS/FAIL line for its criterion; pytest enforces
the same condition through assertions.
"""

import json
import subprocess
import sys
import time

import numpy as np
import pytest

from holowind import (
    BoundarySamples,
    ComplexPolynomial,
    LaurentExpression,
    RationalFunction,
    cauchy_outside,
    circle_grid,
    construct_direct,
    construct_lifted,
    pipeline,
    prop41_campaign,
    rational_winding,
    sample,
    verdict,
    winding_of_sum,
    winding_with_refinement,
)
from holowind.extend import W_GRID

from conftest import make_laurent, roots_off_circle

FAMILY = LaurentExpression(((3, 1.0), (-1, 0.5)))


def _report(name, ok, detail=""):
    tag = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"[{tag}] {name}{suffix}")
    assert ok, f"{name}{suffix}"


def test_acceptance_1_winding_exactness():
    start = time.perf_counter()
    exact = True
    for k in range(-8, 9):
        expr = LaurentExpression(((k, 1.0),))
        res = winding_with_refinement(expr, n_start=256)
        exact = exact and res.winding == k
    elapsed = time.perf_counter() - start
    _report(
        "winding exactness k in [-8, 8]",
        exact and elapsed < 1.0,
        f"{elapsed:.3f}s",
    )


def test_acceptance_2_argument_principle_equivalence():
    start = time.perf_counter()
    rng = np.random.default_rng(2024)
    agree = 0
    total = 100
    for _ in range(total):
        n_zeros = int(rng.integers(1, 9))
        n_poles = int(rng.integers(0, min(3, 9 - n_zeros)))
        rat = RationalFunction(
            ComplexPolynomial.from_roots(
                roots_off_circle(rng, n_zeros), leading=1.0 + 0.5j
            ),
            ComplexPolynomial.from_roots(roots_off_circle(rng, n_poles)),
        )
        oracle = rational_winding(rat)
        numeric = winding_with_refinement(
            lambda n: BoundarySamples(rat(circle_grid(n)))
        )
        agree += int(numeric.winding == oracle)
    elapsed = time.perf_counter() - start
    _report(
        "argument-principle equivalence on 100 seeded rationals",
        agree == total and elapsed < 30.0,
        f"{agree}/{total}, {elapsed:.1f}s",
    )


def test_acceptance_3_direct_certificates():
    rng = np.random.default_rng(303)
    successes = 0
    total = 20
    for _ in range(total):
        phase = np.exp(2j * np.pi * rng.uniform())
        expr = make_laurent(
            rng, band=6, force={-1: (1.0 + rng.uniform()) * phase}
        )
        f = sample(expr, 1024)
        cert = construct_direct(f, expr=expr)
        reverified = winding_of_sum(f, cert.witness, expr=expr).winding
        grid = circle_grid(f.n)
        re = np.real(grid * (f.values + cert.witness(grid)) / cert.trace.c)
        in_band = 0.55 - 1e-9 <= re.min() and re.max() <= 1.45 + 1e-9
        successes += int(cert.winding == -1 and reverified == -1 and in_band)
    _report(
        "direct witness certificates for mean-bearing functions",
        successes == total,
        f"{successes}/{total}",
    )


def test_acceptance_4_pole_lift_certificates():
    rng = np.random.default_rng(404)
    cases = [
        LaurentExpression(((-2, 1.0),)),
        LaurentExpression(((-5, 1.0), (2, 1.0))),
    ]
    for _ in range(18):
        m = int(rng.integers(2, 7))
        phase = np.exp(2j * np.pi * rng.uniform())
        cases.append(
            make_laurent(
                rng,
                band=6,
                exclude=(-1,),
                force={-m: (1.0 + rng.uniform()) * phase},
            )
        )
    successes = 0
    identity_holds = True
    for expr in cases:
        f = sample(expr, 1024)
        cert = construct_lifted(f, expr=expr)
        successes += int(cert.winding <= -1)
        # proof identity: lifting the witness back preserves the winding
        w = cert.pole
        grid = circle_grid(f.n)
        lifted = BoundarySamples(f.values / (grid - w))
        inner = construct_direct(lifted)
        outer = winding_of_sum(f, ComplexPolynomial([-w, 1.0]) * inner.witness)
        inner_res = winding_of_sum(lifted, inner.witness)
        identity_holds = identity_holds and outer.winding == inner_res.winding
    _report(
        "pole-lift certificates for zero-mean functions",
        successes == len(cases) and identity_holds,
        f"{successes}/{len(cases)}, lift identity {'exact' if identity_holds else 'broken'}",
    )


def test_acceptance_5_worked_example():
    f = sample(FAMILY, 1024)
    res = pipeline(f, expr=FAMILY)
    n, mag = res.verdict.worst_moment
    verdict_ok = (
        res.verdict.status == "NotExtendible"
        and n == 0
        and abs(mag - 0.5) <= 1e-9
    )
    cert_ok = res.certificate is not None and res.certificate.winding == -1
    specific = winding_of_sum(
        f, ComplexPolynomial([0, 0, 0, -1.0]), expr=FAMILY
    )
    _report(
        "worked example z^3 + 0.5/z",
        verdict_ok and cert_ok and specific.winding == -1,
        f"worst moment ({n}, {mag:.12f}), witness -z^3 winding {specific.winding}",
    )


def test_acceptance_6_perturbation_campaigns():
    start = time.perf_counter()
    ok = True
    detail = []
    for n0, n in ((0, 1), (1, 2), (2, 3), (3, 5)):
        rep = prop41_campaign(n0, n, trials=1000, seed=1000 + n0, radius=5.0)
        bound = 0.5 ** (1.0 / (n + 1)) + 1e-9
        ok = (
            ok
            and rep.failures == []
            and rep.vieta_max_rel_err <= 1e-6
            and rep.min_root_modulus["max"] <= bound
        )
        detail.append(f"({n0},{n}):{len(rep.failures)} fail")
    elapsed = time.perf_counter() - start
    _report(
        "perturbation campaigns 4x1000 trials",
        ok and elapsed < 120.0,
        f"{', '.join(detail)}, {elapsed:.1f}s",
    )


def test_acceptance_7_exterior_transform_sanity():
    rng = np.random.default_rng(707)
    ok = True
    for _ in range(20):
        degree = int(rng.integers(0, 11))
        expr = make_laurent(
            rng, band=degree, exclude=range(-degree - 1, 0), min_terms=1
        )
        f = sample(expr, 1024)
        bound = 1e-9 * max(f.rms, 1e-30)
        ok = ok and all(abs(cauchy_outside(f, w)) <= bound for w in W_GRID)
    g = cauchy_outside(sample(LaurentExpression(((-1, 1.0),)), 1024), 2.0)
    ok = ok and abs(g - (-0.5)) <= 1e-9
    _report(
        "exterior Cauchy transform sanity",
        ok,
        f"G(2) for conj(z) = {g.real:.12f}",
    )


def test_acceptance_8_criterion_concordance():
    rng = np.random.default_rng(808)
    functions = [sample(make_laurent(rng), 1024) for _ in range(40)]
    functions.append(sample(FAMILY, 1024))
    functions.append(sample(LaurentExpression(((-2, 1.0),)), 1024))
    functions.append(sample(LaurentExpression(((7, 1.0), (0, 2.0))), 1024))
    splits = sum(int(verdict(f).split) for f in functions)
    _report(
        "criterion concordance across the suite",
        splits == 0,
        f"{len(functions)} functions, {splits} split verdicts",
    )


def test_acceptance_9_cli_determinism(tmp_path):
    sample_path = tmp_path / "family.json"

    def invoke(*args):
        return subprocess.run(
            [sys.executable, "-m", "holowind", *args],
            capture_output=True,
            check=False,
        )

    commands = [
        ("synth", "z^3 + 0.5*z^-1", "--n", "512", "--out", str(sample_path)),
        ("analyze", str(sample_path)),
        ("witness", str(sample_path)),
        ("prop41", "1", "2", "--trials", "50", "--seed", "99"),
        ("oracle", "(z^4+0.5)/z"),
    ]
    ok = True
    for cmd in commands:
        first = invoke(*cmd)
        second = invoke(*cmd)
        ok = (
            ok
            and first.stdout == second.stdout
            and first.returncode == second.returncode
            and json.loads(first.stdout)
        )
    _report("CLI byte-identical determinism", bool(ok), f"{len(commands)} commands x2")
