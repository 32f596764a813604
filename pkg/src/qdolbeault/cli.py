"""Command-line verification harness."""

import argparse
import logging
import sys

from .checks import CHECKS, PROFILES, CheckConfig, emit_report, parse_scalar_literal, run_checks
from .errors import ConfigurationError


def _scalar_arg(text):
    try:
        return parse_scalar_literal(text)
    except ConfigurationError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser():
    p = argparse.ArgumentParser(
        prog="qdolbeault",
        description="Run the exact verification suite for the Dolbeault-Dirac square "
                    "on quantum projective space.")
    p.add_argument("-N", "--rank", type=int, default=2,
                   help="rank N of sl_{N+1}, 2..4 (default 2; 4 needs --extended)")
    p.add_argument("--degree-bound", type=int, default=None,
                   help="one-sided word length bound for the rewrite systems (default 2N+4)")
    p.add_argument("--c0", type=_scalar_arg, default=parse_scalar_literal("1"),
                   help="scaling constant c_0, a rational function of v (default 1)")
    p.add_argument("--c1", type=_scalar_arg, default=parse_scalar_literal("1"),
                   help="scaling constant c_1, a rational function of v or 'symbolic' (default 1)")
    p.add_argument("--profile", choices=PROFILES, default="closed",
                   help="how c_2..c_N follow from c_0, c_1 (default closed)")
    p.add_argument("--checks", default=None,
                   help="comma-separated check ids or prefixes, e.g. 'dirac,rootvec.cal-diag'")
    p.add_argument("--format", choices=("text", "json"), default="text", dest="output_format")
    p.add_argument("-o", "--output", default=None, help="write the report here instead of stdout")
    p.add_argument("--extended", action="store_true", help="allow the rank-4 suite")
    p.add_argument("--timings", action="store_true", help="record wall time per check")
    p.add_argument("--list-checks", action="store_true", help="print check ids and exit")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(message)s")
    if args.list_checks:
        for chk in CHECKS:
            print("%s\t%s" % (chk.check_id, chk.paper_anchor))
        return 0
    checks = [c.strip() for c in args.checks.split(",") if c.strip()] if args.checks else None
    config = CheckConfig(N=args.rank, degree_bound=args.degree_bound, c0=args.c0, c1=args.c1,
                         checks=checks, output_format=args.output_format, profile=args.profile,
                         extended=args.extended, timings=args.timings)
    try:
        report = run_checks(config)
    except ConfigurationError as exc:
        print("configuration error: %s" % exc, file=sys.stderr)
        return 2
    data = emit_report(report, args.output_format)
    if args.output:
        with open(args.output, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return 0 if report.ok() else 1


if __name__ == "__main__":
    sys.exit(main())
