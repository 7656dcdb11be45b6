"""Command-line entry point.

Exit codes: 0 success, 1 I/O error, 2 parse/validation error, 3 numerical
error, 4 verification failure.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import replace
from pathlib import Path

from .errors import NumericalError, ScenarioError, SolowSwanError
from .harness import emit_csv, emit_summary, format_scenario, parse_axis, parse_scenario, preset, run, sweep
from .harness.scenario import PRESETS, parse_override

log = logging.getLogger("solowswan")

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NUMERICAL = 3
EXIT_VERIFY = 4


def _load(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ScenarioError(f"cannot read scenario file {path}: {exc.strerror}")
    return parse_scenario(text)


def _report_deviations(result, threshold=None) -> bool:
    ok = True
    for k0, dev in result.deviations.items():
        flag = ""
        if threshold is not None and dev > threshold:
            flag = "  EXCEEDS"
            ok = False
        print(f"k0={k0!r}: max relative deviation {dev:.3e}{flag}")
    return ok


def cmd_run(args) -> int:
    sc = _load(args.scenario)
    result = run(sc)
    paths = emit_csv(result, args.out)
    _report_deviations(result)
    log.info("wrote %d files to %s", len(paths), args.out)
    return EXIT_OK


def cmd_preset(args) -> int:
    overrides = dict(parse_override(item) for item in args.override)
    sc = preset(args.name, overrides)
    if args.show:
        sys.stdout.write(format_scenario(sc))
        return EXIT_OK
    result = run(sc)
    paths = emit_csv(result, args.out)
    _report_deviations(result)
    log.info("wrote %d files to %s", len(paths), args.out)
    return EXIT_OK


def cmd_sweep(args) -> int:
    sc = _load(args.scenario)
    axes = [parse_axis(item) for item in args.axis]
    rows = sweep(sc, axes, jobs=args.jobs)
    path = emit_summary(rows, Path(args.out) / "summary.csv")
    failed = sum(row["status"] != "ok" for row in rows)
    print(f"{len(rows)} rows, {failed} failed -> {path}")
    return EXIT_OK


def cmd_verify(args) -> int:
    sc = _load(args.scenario)
    if sc.method != "both":
        sc = replace(sc, method="both")
    result = run(sc)
    if args.out:
        emit_csv(result, args.out)
    ok = _report_deviations(result, args.threshold)
    worst = result.max_deviation
    print(f"{'PASS' if ok else 'FAIL'}: worst deviation {worst:.3e} vs threshold {args.threshold:.1e}")
    return EXIT_OK if ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="solowswan",
        description="Solow-Swan growth with non-constant returns to scale.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="run a scenario file and write trajectory CSVs")
    p.add_argument("scenario")
    p.add_argument("--out", default="out", help="output directory (default: out)")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("preset", help="run a figure preset")
    p.add_argument("name", choices=sorted(PRESETS))
    p.add_argument("--override", action="append", default=[], metavar="KEY=VALUE")
    p.add_argument("--out", default="out")
    p.add_argument("--show", action="store_true", help="print the scenario document and exit")
    p.set_defaults(func=cmd_preset)

    p = sub.add_parser("sweep", help="run a scenario over a parameter grid")
    p.add_argument("scenario")
    p.add_argument("--axis", action="append", default=[], metavar="KEY=START:STOP:COUNT")
    p.add_argument("--out", default="out")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (default: 1)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="compare closed form with integration")
    p.add_argument("scenario")
    p.add_argument("--threshold", type=float, default=1e-6, help="max relative deviation (default: 1e-6)")
    p.add_argument("--out", default=None, help="also write trajectory CSVs here")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except ScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NumericalError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except SolowSwanError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
