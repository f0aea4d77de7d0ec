"""Command-line interface.

Subcommands: synth, analyze, witness, prop41, oracle.  Machine-readable JSON
goes to stdout (indented with --pretty); diagnostics go to stderr.  Exit
statuses: 0 success/Extendible, 2 I/O, schema or argument errors, 3
NotExtendible, 4 Inconclusive, 5 nothing to witness (Extendible input), 6
witness construction failure, 7 oracle/numeric winding disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import expressions
from .boundary import DEFAULT_SAMPLES, BoundarySamples, LaurentExpression, circle_grid, sample
from .errors import (
    CampaignFailure,
    HolowindError,
    ParseError,
    RootNearCircle,
    Unresolved,
    ZeroOnCurve,
)
from .extend import EXTENDIBLE, INCONCLUSIVE, NOT_EXTENDIBLE, verdict
from .oracle import RationalFunction, prop41_campaign, rational_winding, roots
from .winding import winding_with_refinement
from .witness import pipeline

EXIT_OK = 0
EXIT_ERROR = 2
EXIT_NOT_EXTENDIBLE = 3
EXIT_INCONCLUSIVE = 4
EXIT_NOTHING_TO_WITNESS = 5
EXIT_CONSTRUCTION_FAILED = 6
EXIT_DISAGREEMENT = 7


def _emit(doc, pretty: bool) -> None:
    print(json.dumps(doc, indent=2 if pretty else None))


def _fail(message: str) -> int:
    print(message, file=sys.stderr)
    return EXIT_ERROR


def _load_samples(path: str) -> BoundarySamples:
    with open(path) as fh:
        return BoundarySamples.from_json(json.load(fh))


def _rational_pole_check(rat: RationalFunction) -> None:
    if rat.denominator.degree >= 1:
        rs = roots(rat.denominator)
        if rs.min_circle_distance() < 1e-6:
            raise ValueError("rational expression has a pole on the unit circle")


def cmd_synth(args) -> int:
    parsed = expressions.parse(args.expr)
    if isinstance(parsed, LaurentExpression):
        samples = sample(parsed, args.n, label=args.expr)
    else:
        _rational_pole_check(parsed)
        samples = BoundarySamples(parsed(circle_grid(args.n)), label=args.expr)
    samples.save(args.out)
    _emit({"out": args.out, "n": args.n, "label": args.expr}, args.pretty)
    return EXIT_OK


def cmd_analyze(args) -> int:
    f = _load_samples(args.path)
    v = verdict(f, args.tol)
    _emit(v.to_json(), args.pretty)
    return {EXTENDIBLE: EXIT_OK,
            NOT_EXTENDIBLE: EXIT_NOT_EXTENDIBLE,
            INCONCLUSIVE: EXIT_INCONCLUSIVE}[v.status]


def cmd_witness(args) -> int:
    f = _load_samples(args.path)
    result = pipeline(f, args.tol)
    doc = result.to_json()
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(doc, fh)
            fh.write("\n")
    _emit(doc, args.pretty)
    if result.certificate is not None:
        return EXIT_OK
    if result.verdict.status == EXTENDIBLE:
        return EXIT_NOTHING_TO_WITNESS
    return EXIT_CONSTRUCTION_FAILED


def cmd_prop41(args) -> int:
    report = prop41_campaign(args.n0, args.n_degree, args.trials, args.seed,
                             args.radius)
    _emit(report.to_json(), args.pretty)
    return EXIT_OK if not report.failures else 1


def cmd_oracle(args) -> int:
    parsed = expressions.parse(args.expr)
    if isinstance(parsed, LaurentExpression):
        rat = RationalFunction.from_laurent(parsed)
    else:
        rat = parsed
    _rational_pole_check(rat)
    oracle_w = rational_winding(rat)
    grid_source = lambda n: BoundarySamples(rat(circle_grid(n)))
    numeric = winding_with_refinement(grid_source, n_start=args.n)
    agree = numeric.winding == oracle_w
    _emit({
        "expression": args.expr,
        "oracle_winding": oracle_w,
        "numeric_winding": numeric.winding,
        "n_used": numeric.n_used,
        "agree": agree,
    }, args.pretty)
    return EXIT_OK if agree else EXIT_DISAGREEMENT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="holowind",
        description="Holomorphic extendibility tests and winding witnesses on the unit circle",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="sample an expression on the circle into a JSON file")
    p.add_argument("expr", help="Laurent or rational expression, e.g. 'z^3 + 0.5*z^-1'")
    p.add_argument("--n", type=int, default=DEFAULT_SAMPLES, help="sample count (power of two)")
    p.add_argument("--out", required=True, help="output sample file path")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("analyze", help="extendibility verdict for a sample file")
    p.add_argument("path")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("witness", help="construct a negative-winding witness certificate")
    p.add_argument("path")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--out", help="also write the result JSON here")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("prop41", help="randomized degree-bound verification campaign")
    p.add_argument("n0", type=int, help="perturbation degree bound")
    p.add_argument("n_degree", metavar="n", type=int, help="family exponent, n >= n0 + 1")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--radius", type=float, default=5.0)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_prop41)

    p = sub.add_parser("oracle", help="compare sampled winding with root counting")
    p.add_argument("expr")
    p.add_argument("--n", type=int, default=DEFAULT_SAMPLES, help="initial sample count")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        return _fail(f"parse error at offset {exc.position}: {exc}")
    except (OSError, json.JSONDecodeError) as exc:
        return _fail(f"i/o error: {exc}")
    except ValueError as exc:
        return _fail(f"invalid argument: {exc}")
    except (ZeroOnCurve, Unresolved, RootNearCircle, CampaignFailure, HolowindError) as exc:
        return _fail(f"{type(exc).__name__}: {exc}")


if __name__ == "__main__":
    sys.exit(main())
