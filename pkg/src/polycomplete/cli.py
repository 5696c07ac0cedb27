"""Command-line front end.

Exit codes:
  0   feasible / oracle found no disagreement
  1   infeasible (check); for ``oracle`` the disagreement count, capped at 63
  2   hypothesis violated (check)
  64  bad command line
  65  malformed or incompatible input document
  66  input file missing or unreadable
  70  oracle budget exceeded
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from . import __version__
from .completion import check, column_completion
from .completion.prescribed import HYPOTHESIS, MODES, PrescribedDataError
from .documents import (
    REPORT_SCHEMA,
    DocumentError,
    dumps,
    matrix_from_doc,
    read_document,
    structure_to_doc,
    target_from_doc,
    verdict_to_doc,
)
from .field_poly import GF
from .oracle import DEFAULT_BUDGET, BudgetExceeded, run_campaign
from .structure import StructureError, complete_structural_data

EXIT_FEASIBLE, EXIT_INFEASIBLE, EXIT_HYPOTHESIS = 0, 1, 2
EXIT_USAGE, EXIT_DATA, EXIT_NOINPUT, EXIT_BUDGET = 64, 65, 66, 70
MAX_REPORTED = 63

MODE_HELP = {
    "complete": "finite structure, orders at infinity, column and row minimal indices all prescribed",
    "fin-inf-col": "invariant rational functions, orders at infinity and column minimal indices",
    "fin-inf-row": "invariant rational functions, orders at infinity and row minimal indices",
    "fin-inf": "invariant rational functions and orders at infinity",
    "inf": "orders at infinity only (polynomial ring adds the max-sum bounds)",
    "fin": "invariant factors only (interlacing with shift z + n - r)",
    "fin-first-order": "invariant rational functions and the first order at infinity",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _pretty_data(data) -> str:
    lines = [f"size {data.m}x{data.n}  rank {data.rank}"]
    if data.rank:
        lines.append(f"degree {data.degree}" if data.is_polynomial() else f"first order {data.orders[0]}")
    fr = [e.format() if d.is_one() else f"({e.format()})/({d.format()})" for e, d in zip(data.num, data.den)]
    lines.append("invariant functions: " + (", ".join(fr) or "-"))
    lines.append(f"orders at infinity:  {list(data.orders)}")
    lines.append(f"column indices:      {list(data.cols)}")
    lines.append(f"row indices:         {list(data.rows)}")
    return "\n".join(lines)


def cmd_structure(args) -> int:
    M = matrix_from_doc(read_document(args.matrix))
    data = complete_structural_data(M)
    if args.output == "json":
        print(dumps(structure_to_doc(data)))
    else:
        print(_pretty_data(data))
    return 0


def cmd_check(args) -> int:
    M = matrix_from_doc(read_document(args.matrix))
    doc = read_document(args.target)
    if args.mode is not None:
        if doc.get("mode", args.mode) != args.mode:
            raise DocumentError(f"target has mode {doc.get('mode')!r} but --mode is {args.mode!r}", "mode")
        doc = dict(doc, mode=args.mode)
    target = target_from_doc(doc, M.field)
    source = complete_structural_data(M)
    verdict = column_completion(source, target, args.ring) if args.columns else check(source, target, args.ring)
    if args.output == "json":
        print(dumps(verdict_to_doc(verdict)))
    elif args.explain:
        print(verdict.explain())
    else:
        print(f"{verdict.mode} ({verdict.ring}): {verdict.status}")
        for c in verdict.failed:
            print(f"  FAIL {c.id}: {c.description}")
    if verdict.status == HYPOTHESIS:
        return EXIT_HYPOTHESIS
    return EXIT_FEASIBLE if verdict.feasible else EXIT_INFEASIBLE


def cmd_oracle(args) -> int:
    report = run_campaign(
        field=GF(args.field), rows=args.rows, cols=args.cols, source_degree=args.source_degree,
        z=args.added, max_degree=args.max_degree, mode=args.mode, ring=args.ring,
        budget=args.budget, samples=args.samples, seed=args.seed, jobs=args.jobs,
    )
    if args.output == "json":
        print(dumps(dict(schema=REPORT_SCHEMA, **report.to_dict())))
    else:
        print("\n".join(report.lines()))
    return min(len(report.disagreements), MAX_REPORTED)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="polycomplete", description="Row and column completion of polynomial and rational matrices.",
                epilog=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("structure", help="extract the complete structural data of a matrix")
    s.add_argument("matrix")
    s.add_argument("--output", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_structure)

    def add_check_args(c, mode_flag=True):
        c.add_argument("matrix")
        c.add_argument("target")
        if mode_flag:
            c.add_argument("--mode", choices=MODES, help="override/assert the target mode")
        c.add_argument("--ring", choices=("poly", "polynomial", "rational", "rat"), default="poly")
        c.add_argument("--columns", action="store_true", help="append columns instead of rows")
        c.add_argument("--explain", action="store_true", help="print every condition with both sides")
        c.add_argument("--output", choices=("text", "json"), default="text")
        c.set_defaults(func=cmd_check)

    add_check_args(sub.add_parser("check", help="decide whether a target is reachable by adding rows"))
    for mode in MODES:
        c = sub.add_parser(mode, help=f"check with {MODE_HELP[mode]} prescribed", description=MODE_HELP[mode])
        add_check_args(c, mode_flag=False)
        c.set_defaults(mode=mode)

    o = sub.add_parser("oracle", help="exhaustive differential test over a small prime field")
    o.add_argument("--field", type=int, default=2, help="characteristic p of GF(p)")
    o.add_argument("--rows", type=int, default=1, help="rows of the source matrices")
    o.add_argument("--cols", type=int, default=2, help="columns of the source matrices")
    o.add_argument("--source-degree", type=int, default=1)
    o.add_argument("--added", type=int, default=1, help="rows added (z)")
    o.add_argument("--max-degree", type=int, default=2, help="degree bound on the added rows")
    o.add_argument("--mode", choices=MODES, default="complete")
    o.add_argument("--ring", choices=("poly", "polynomial", "rational", "rat"), default="poly")
    o.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    o.add_argument("--samples", type=int, default=None, help="random sources instead of all of them")
    o.add_argument("--seed", type=int, default=0)
    o.add_argument("--jobs", type=int, default=1)
    o.add_argument("--output", choices=("text", "json"), default="text")
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"polycomplete: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"polycomplete: {exc}", file=sys.stderr)
        return EXIT_NOINPUT
    except (DocumentError, PrescribedDataError, StructureError, json.JSONDecodeError) as exc:
        print(f"polycomplete: invalid input: {exc}", file=sys.stderr)
        return EXIT_DATA
    except BudgetExceeded as exc:
        print(f"polycomplete: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"polycomplete: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
