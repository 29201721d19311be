"""Command-line interface.

Subcommands: compute, check-bounds, sweep, exhaustive, random,
equality-cases. Results go to stdout in the requested format (table is
human-oriented; csv and json are byte-stable); diagnostics go to stderr.
Exit codes: 0 success, 1 usage or input error, 2 bound violation found.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from . import harness, reports
from .bounds import BOUND_IDS
from .errors import EstradaError
from .graphs import Graph
from .io import iter_graph6, parse_edge_list, parse_graph6

SWEEP_FAMILIES = (
    "complete",
    "empty",
    "complete_bipartite",
    "star",
    "path",
    "cycle",
    "regular_circulant",
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; the contract here is 1
    def error(self, message):
        raise _UsageError(message)


def _add_common(p: argparse.ArgumentParser, jobs: bool = False):
    p.add_argument(
        "--tol",
        type=float,
        default=1e-8,
        help="equality/violation tolerance on gaps (default 1e-8)",
    )
    p.add_argument(
        "--format",
        choices=("table", "csv", "json"),
        default="table",
        help="output format (default table)",
    )
    if jobs:
        p.add_argument(
            "--jobs",
            type=int,
            default=None,
            help="worker threads (default: ESTRADA_JOBS or all cores)",
        )


def _add_input(p: argparse.ArgumentParser):
    p.add_argument("--graph6", help="inline graph6 string")
    p.add_argument("--file", help="input path (.g6: one graph6 per line; .el: edge list)")
    p.add_argument(
        "--input-format",
        choices=("auto", "g6", "el"),
        default="auto",
        help="input format; auto sniffs by extension",
    )


def build_parser() -> _Parser:
    parser = _Parser(
        prog="estrada",
        description="Estrada index computation and spectral lower-bound checks.",
    )
    sub = parser.add_subparsers(dest="command", metavar="command")

    p = sub.add_parser("compute", help="invariants and Estrada index per graph")
    _add_input(p)
    _add_common(p)
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("check-bounds", help="evaluate all 14 bounds per graph")
    _add_input(p)
    _add_common(p)
    p.set_defaults(func=_cmd_check_bounds)

    p = sub.add_parser("sweep", help="verify a parametrized graph family")
    p.add_argument("--family", required=True, choices=SWEEP_FAMILIES)
    p.add_argument(
        "--param",
        action="append",
        default=[],
        metavar="NAME=SPEC",
        help="parameter range, e.g. n=3..8 or p=1,2,3 (repeatable)",
    )
    _add_common(p)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("exhaustive", help="verify all labeled graphs up to max-n")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--mode", choices=harness.MODES, default="all")
    _add_common(p, jobs=True)
    p.set_defaults(func=_cmd_exhaustive)

    p = sub.add_parser("random", help="seeded random-graph campaign")
    p.add_argument("--model", choices=("er", "bipartite"), default="er")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=20, help="vertices (er model)")
    p.add_argument("--p", type=float, default=0.3, help="edge probability")
    p.add_argument(
        "--parts",
        type=int,
        nargs=2,
        default=(8, 8),
        metavar=("P", "Q"),
        help="part sizes (bipartite model)",
    )
    _add_common(p)
    p.set_defaults(func=_cmd_random)

    p = sub.add_parser("equality-cases", help="graphs attaining a bound exactly")
    p.add_argument("--bound", required=True, choices=BOUND_IDS)
    p.add_argument("--max-n", type=int, default=7)
    _add_common(p, jobs=True)
    p.set_defaults(func=_cmd_equality_cases)

    return parser


# ---------------------------------------------------------------------------
# input handling


def _load_graphs(args) -> List[Graph]:
    """Graphs from exactly one input source."""
    if (args.graph6 is None) == (args.file is None):
        raise _UsageError("provide exactly one of --graph6 or --file")
    if args.graph6 is not None:
        return [parse_graph6(args.graph6)]
    path = args.file
    fmt = args.input_format
    if fmt == "auto":
        ext = os.path.splitext(path)[1].lower()
        if ext == ".g6":
            fmt = "g6"
        elif ext == ".el":
            fmt = "el"
        else:
            raise _UsageError(
                f"cannot sniff format of {path!r}; pass --input-format g6|el"
            )
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    if fmt == "el":
        return [parse_edge_list(text, source=path)]
    return [doc.graph for doc in iter_graph6(text, source=path)]


# ---------------------------------------------------------------------------
# output helpers


def _print_table(header: List[str], rows: List[List[str]], stream=None):
    stream = stream or sys.stdout
    widths = [len(h) for h in header]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    stream.write(fmt.format(*header).rstrip() + "\n")
    for row in rows:
        stream.write(fmt.format(*row).rstrip() + "\n")


def _fmt(x: Optional[float]) -> str:
    if x is None:
        return "-"
    return f"{x:.10g}"


def _base_row_dict(row: harness.GraphRow) -> dict:
    d = reports.row_to_dict(row)
    d.pop("bounds")
    return d


def _base_row_csv(row: harness.GraphRow) -> str:
    full = reports.row_to_csv(row)
    return ",".join(full.split(",")[: len(reports.CSV_BASE_COLUMNS)])


def _report_violations_to_stderr(report: harness.VerificationReport):
    for v in report.violations:
        sys.stderr.write(
            f"VIOLATION bound={v.bound_id} graph6={v.graph6} gap={v.gap!r}\n"
        )


def _summary_table(report: harness.VerificationReport):
    header = [
        "bound",
        "applicable",
        "held",
        "violations",
        "equality",
        "strict",
        "min_gap",
    ]
    rows = []
    for bid, s in report.summaries.items():
        rows.append(
            [
                bid,
                str(s.applicable),
                str(s.held),
                str(s.violations),
                str(s.equality),
                str(s.strict),
                _fmt(s.min_gap),
            ]
        )
    _print_table(header, rows)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_compute(args) -> int:
    graphs = _load_graphs(args)
    rows = [
        harness.row_from_verdict(harness.verify_graph(g, args.tol)) for g in graphs
    ]
    if args.format == "json":
        doc = {
            "version": reports.JSON_SCHEMA_VERSION,
            "rows": [_base_row_dict(r) for r in rows],
        }
        print(json.dumps(doc, sort_keys=True, indent=2))
    elif args.format == "csv":
        print(",".join(reports.CSV_BASE_COLUMNS))
        for r in rows:
            print(_base_row_csv(r))
    else:
        header = list(reports.CSV_BASE_COLUMNS)
        body = [_base_row_csv(r).split(",") for r in rows]
        _print_table(header, body)
    return 0


def _cmd_check_bounds(args) -> int:
    graphs = _load_graphs(args)
    report = harness.verify_collection(
        graphs,
        tol=args.tol,
        keep_rows=True,
        corpus={"kind": "check-bounds", "count": len(graphs)},
    )
    if args.format == "json":
        print(reports.report_to_json(report))
    elif args.format == "csv":
        reports.write_rows_csv(report.rows, sys.stdout)
    else:
        _summary_table(report)
    if report.total_violations:
        _report_violations_to_stderr(report)
        return 2
    return 0


def _parse_param_spec(spec: str):
    """NAME=A..B (inclusive), NAME=V, or NAME=V1,V2,V3."""
    if "=" not in spec:
        raise _UsageError(f"--param needs NAME=SPEC, got {spec!r}")
    name, _, body = spec.partition("=")
    name = name.strip()
    body = body.strip()
    if not name or not body:
        raise _UsageError(f"--param needs NAME=SPEC, got {spec!r}")
    try:
        if ".." in body:
            lo, hi = body.split("..", 1)
            values = list(range(int(lo), int(hi) + 1))
        elif "," in body:
            values = [int(v) for v in body.split(",")]
        else:
            values = [int(body)]
    except ValueError:
        raise _UsageError(f"bad --param value {body!r} (want INT, A..B, or CSV ints)")
    if not values:
        raise _UsageError(f"--param {name} describes an empty range")
    return name, values


def _cmd_sweep(args) -> int:
    if not args.param:
        raise _UsageError("sweep needs at least one --param NAME=SPEC")
    ranges = {}
    for spec in args.param:
        name, values = _parse_param_spec(spec)
        ranges[name] = values
    report = harness.family_sweep(args.family, ranges, tol=args.tol)
    if args.format == "json":
        print(reports.report_to_json(report))
    elif args.format == "csv":
        reports.write_rows_csv(report.rows, sys.stdout)
    else:
        header = ["graph6", "n", "m", "ee", "equality"]
        body = []
        for row in report.rows:
            hits = [
                bid
                for bid, (app, _, gap) in zip(BOUND_IDS, row.bounds)
                if app and gap is not None and abs(gap) <= args.tol
            ]
            body.append(
                [row.graph6, str(row.n), str(row.m), _fmt(row.ee), ",".join(hits) or "-"]
            )
        _print_table(header, body)
    if report.total_violations:
        _report_violations_to_stderr(report)
        return 2
    return 0


def _cmd_exhaustive(args) -> int:
    sink = None
    if args.format == "csv":
        sink = reports.csv_row_sink(sys.stdout)
    report = harness.exhaustive_verify(
        args.max_n,
        mode=args.mode,
        tol=args.tol,
        jobs=args.jobs,
        keep_rows=False,
        row_sink=sink,
    )
    if args.format == "json":
        print(reports.report_to_json(report))
    elif args.format == "table":
        print(
            f"exhaustive max_n={args.max_n} mode={args.mode} "
            f"rows={report.row_count} violations={report.total_violations}"
        )
        _summary_table(report)
    if report.total_violations:
        _report_violations_to_stderr(report)
        return 2
    return 0


def _cmd_random(args) -> int:
    report = harness.random_campaign(
        model=args.model,
        trials=args.trials,
        seed=args.seed,
        tol=args.tol,
        n=args.n,
        p=args.p,
        parts=tuple(args.parts),
        keep_rows=(args.format == "csv"),
    )
    if args.format == "json":
        print(reports.report_to_json(report))
    elif args.format == "csv":
        reports.write_rows_csv(report.rows, sys.stdout)
    else:
        print(
            f"random model={args.model} trials={args.trials} seed={args.seed} "
            f"violations={report.total_violations}"
        )
        _summary_table(report)
    if report.total_violations:
        _report_violations_to_stderr(report)
        return 2
    return 0


def _cmd_equality_cases(args) -> int:
    cases = harness.find_equality_cases(
        args.bound, args.max_n, tol=args.tol, jobs=args.jobs
    )
    if args.format == "json":
        doc = {
            "version": reports.JSON_SCHEMA_VERSION,
            "bound": args.bound,
            "max_n": args.max_n,
            "tol": args.tol,
            "cases": cases,
        }
        print(json.dumps(doc, sort_keys=True, indent=2))
    elif args.format == "csv":
        print("graph6")
        for g6 in cases:
            print(g6)
    else:
        for g6 in cases:
            print(g6)
        sys.stderr.write(f"{len(cases)} equality case(s) for {args.bound}\n")
    return 0


# ---------------------------------------------------------------------------


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    if getattr(args, "command", None) is None:
        parser.print_usage(sys.stderr)
        return 1
    if getattr(args, "tol", 1.0) <= 0:
        sys.stderr.write("error: --tol must be > 0\n")
        return 1
    try:
        return args.func(args)
    except _UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except (EstradaError, OSError, UnicodeDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


def entry() -> None:
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    entry()
