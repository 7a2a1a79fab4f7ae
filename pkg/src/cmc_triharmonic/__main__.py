'''
Created on 16 Oct 2026

@author: ante
'''
import argparse
import logging.config
import os
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Dict, List

import yaml

from cmc_triharmonic import __version__
from cmc_triharmonic.checks import CheckResult
from cmc_triharmonic.conditions.triharmonic import Verdict, classify
from cmc_triharmonic.corollary.torus import corollary_crosscheck, torus_residual_resultant
from cmc_triharmonic.errors import UsageError, VerificationError
from cmc_triharmonic.exactnum.rational import DEFAULT_DIGITS, MIN_DIGITS, parse_rational
from cmc_triharmonic.geometry.catalog import Family, FamilyId, build, family_help
from cmc_triharmonic.geometry.spaceform import SpaceForm, gauss_scalar_check, render_scalar
from cmc_triharmonic.moments.suites import DEFAULT_CASES, DEFAULT_QMAX, DEFAULT_SEED, SUITES, run_suite
from cmc_triharmonic.report.report import RunReport, render
from cmc_triharmonic.report.scan import ParamRange, render_csv, render_scan_json, run_scan

log = logging.getLogger(__name__)

LOGGING_ENV = "CMC_TRIHARMONIC_LOGGING"


def configure_logging() -> None:
    candidates = [os.environ.get(LOGGING_ENV), "logging.yaml", Path(__file__).with_name("logging.yaml")]
    for candidate in candidates:
        if candidate and Path(candidate).is_file():
            with open(candidate) as f:
                config = yaml.safe_load(f)
            logging.config.dictConfig(config)
            return
    logging.basicConfig(level=logging.WARNING, stream=sys.stderr)


class Parser(argparse.ArgumentParser):
    """Usage problems become UsageError; main() owns the exit codes."""

    def error(self, message):
        raise UsageError(message)


def build_parser() -> Parser:
    parser = Parser(prog="cmc-triharmonic", description="Verification engine for CMC triharmonic hypersurfaces in space forms.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    families = [f.value for f in Family]

    check = sub.add_parser("check", help="classify one catalog hypersurface",
                           epilog=family_help(), formatter_class=argparse.RawDescriptionHelpFormatter)
    check.add_argument("--curvature", type=int, choices=(-1, 0, 1), required=True)
    check.add_argument("--n", type=int, required=True)
    check.add_argument("--family", choices=families, required=True)
    check.add_argument("--param", action="append", default=[], metavar="KEY=P/Q")
    check.add_argument("--format", choices=("json", "text"), default="json")
    check.add_argument("--expect", choices=("proper", "minimal", "not"))

    cor = sub.add_parser("corollary", help="torus root, radius and resultant checks")
    cor.add_argument("--n", type=int, required=True)
    cor.add_argument("--digits", type=int, default=DEFAULT_DIGITS)
    cor.add_argument("--format", choices=("json", "text"), default="json")

    ident = sub.add_parser("identities", help="replay the formal identities")
    ident.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    ident.add_argument("--qmax", type=int, default=DEFAULT_QMAX)
    ident.add_argument("--cases", type=int, default=DEFAULT_CASES)
    ident.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ident.add_argument("--format", choices=("json", "text"), default="json")

    scan = sub.add_parser("scan", help="sweep one family parameter",
                          epilog=family_help(), formatter_class=argparse.RawDescriptionHelpFormatter)
    scan.add_argument("--curvature", type=int, choices=(-1, 0, 1), required=True)
    scan.add_argument("--n", type=int, required=True)
    scan.add_argument("--family", choices=families, required=True)
    scan.add_argument("--param", action="append", default=[], metavar="KEY=P/Q")
    scan.add_argument("--param-range", required=True, metavar="KEY=LO:HI:STEPS")
    scan.add_argument("--out", choices=("csv", "json"), default="csv")
    scan.add_argument("--output", metavar="PATH")
    scan.add_argument("--workers", type=int, default=1)
    return parser


def parse_params(items: List[str]) -> Dict[str, Fraction]:
    params: Dict[str, Fraction] = {}
    for item in items:
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or not key:
            raise UsageError(f"malformed parameter {item!r} (expected key=value)")
        if key in params:
            raise UsageError(f"parameter {key} given twice")
        params[key] = parse_rational(value)
    return params


# -------------------------
# Commands
# -------------------------

def cmd_check(args, argv: List[str]) -> RunReport:
    sf = SpaceForm(args.n, Fraction(args.curvature))
    fam = FamilyId.from_mapping(args.family, parse_params(args.param))
    spec = build(sf, fam)
    result = classify(sf, spec)

    report = RunReport(command=argv[1:], space=sf.to_dict(), family=fam.tag.value, params=fam.to_dict())
    report.spectrum = spec.to_list()
    report.invariants = result.invariants.to_dict()
    report.residual = render_scalar(result.T1)
    report.verdict = result.verdict.value

    gap = gauss_scalar_check(sf, spec)
    report.add_check(CheckResult("gauss scalar curvature", gap == 0, detail="" if gap == 0 else f"gap {gap}"))
    if args.expect:
        expected = Verdict.from_flag(args.expect)
        report.add_check(CheckResult(f"expect {expected.value}", result.verdict is expected,
                                     detail=f"got {result.verdict.value}"))
    return report


def cmd_corollary(args, argv: List[str]) -> RunReport:
    if args.digits < MIN_DIGITS:
        raise UsageError(f"--digits must be at least {MIN_DIGITS}, got {args.digits}")
    n = args.n
    sf = SpaceForm(n, Fraction(1))
    report = RunReport(command=argv[1:], space=sf.to_dict(), family=Family.CLIFFORD_TORUS.value,
                       params={"p": str(n - 1), "q": "1"})

    result = corollary_crosscheck(n, args.digits)
    report.add_check(CheckResult("t0 unique in (0, 2)", result.sturm_unique))
    data = result.to_dict()
    report.add_check(CheckResult("torus mean curvature equals t0", result.mean_curvature_matches,
                                 detail=f"|H2 - t0| = {data['gap']}"))
    report.add_check(CheckResult("torus triharmonic residual vanishes", result.residual_vanishes,
                                 detail=f"|T1| = {data['residual']}"))
    report.residual = result.residual.to_dict()["value"]

    verdict = torus_residual_resultant(n)
    report.add_check(CheckResult("f_n divides the radius resultant", verdict.divisible))

    sphere = classify(sf, build(sf, FamilyId.of(Family.SMALL_SPHERE, r2=Fraction(1, 3))))
    report.add_check(CheckResult(
        "small sphere r2=1/3 is proper with H2=2",
        sphere.verdict is Verdict.PROPER and sphere.invariants.H2 == 2,
        detail=f"got {sphere.verdict.value}, H2={sphere.invariants.H2}",
    ))

    report.verdict = Verdict.PROPER.value if report.passed else None
    report.data = {"corollary": data, "resultant": verdict.to_dict()}
    return report


def cmd_identities(args, argv: List[str]) -> RunReport:
    report = RunReport(command=argv[1:])
    for check in run_suite(args.suite, args.qmax, args.cases, args.seed):
        report.add_check(check)
    report.data = {"suite": args.suite, "qmax": args.qmax, "cases": args.cases, "seed": args.seed}
    return report


def cmd_scan(args, argv: List[str]) -> int:
    sf = SpaceForm(args.n, Fraction(args.curvature))
    prange = ParamRange.parse(args.param_range)
    fixed = parse_params(args.param)
    if prange.key in fixed:
        raise UsageError(f"{prange.key} is both fixed and swept")
    if args.workers < 1:
        raise UsageError(f"--workers must be positive, got {args.workers}")
    result = run_scan(sf, args.family, fixed, prange, workers=args.workers)

    if args.out == "csv":
        text = render_csv(result)
    else:
        header = {
            "command": argv[1:], "version": __version__, "space": sf.to_dict(),
            "family": args.family, "params": {k: str(v) for k, v in fixed.items()},
            "range": {"key": prange.key, "lo": str(prange.lo), "hi": str(prange.hi), "steps": prange.steps},
        }
        text = render_scan_json(result, header)

    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        log.info("wrote %d rows to %s", len(result.rows), args.output)
    else:
        sys.stdout.write(text)
    summary = result.summary()
    log.info("%d ProperTriharmonic row(s), %d residual sign change(s)", summary["proper"], summary["sign_changes"])
    return 0


def main(argv: list[str] | None = None) -> int: # IGNORE:C0111
    if argv is None:
        argv = sys.argv
    configure_logging()

    started = time.perf_counter()
    try:
        args = build_parser().parse_args(argv[1:])
        match args.command:
            case "check":
                report = cmd_check(args, argv)
            case "corollary":
                report = cmd_corollary(args, argv)
            case "identities":
                report = cmd_identities(args, argv)
            case "scan":
                return cmd_scan(args, argv)
            case _:
                raise UsageError(f"unknown command {args.command!r}")
    except VerificationError as e:
        log.error("verification failed: %s", e)
        return 1
    except ValueError as e:
        log.error("%s", e)
        return 2

    report.timing = time.perf_counter() - started
    sys.stdout.write(render(report, args.format))
    if not report.passed:
        log.error("%d of %d check(s) failed", sum(1 for c in report.checks if not c), len(report.checks))
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
