"""Command-line front end.

Exit codes: 0 success, 2 usage or parse error, 3 index-domain error,
4 ordering mismatch (``order``) or failed suite (``verify`` exits 1).
"""
from __future__ import annotations

import argparse
import json
import math
import sys

from . import experiments as ex
from .errors import DomainError, GraphInputError
from .graph import CATALOG_IDS, catalog_graph, load_graph
from .report import (
    ReportConfig,
    build_report,
    fmt_value,
    json_value,
    render_report,
    render_table,
)
from .verification import run_verification

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN, EXIT_MISMATCH = 0, 1, 2, 3, 4

ORDER_SCHEMA = "vntheil.ordering/1"
PERTURB_SCHEMA = "vntheil.perturbation/1"


def _grid(text: str) -> tuple[float, ...]:
    try:
        vals = tuple(float(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None
    if not vals:
        raise argparse.ArgumentTypeError("grid is empty")
    return vals


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--catalog", choices=CATALOG_IDS, help="built-in 7-vertex graph")
    src.add_argument("--file", help="edge-list file, or JSON when the name ends in .json")


def _add_format(p: argparse.ArgumentParser, default: str) -> None:
    p.add_argument("--format", choices=("json", "csv", "md"), default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vntheil", description="Spectral and degree-based graph centralization indices")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("report", help="all indices for one graph")
    _add_input(p)
    _add_format(p, "json")
    p.add_argument("--k-grid", type=_grid, default=ReportConfig.k_grid)
    p.add_argument("--p-grid", type=_grid, default=ReportConfig.p_grid)
    p.add_argument("--bits", action="store_true", help="display information values in bits")

    p = sub.add_parser("order", help="rank the catalog by one metric and compare to the published order")
    p.add_argument("--by", choices=tuple(ex.METRICS), required=True)
    _add_format(p, "md")

    p = sub.add_parser("verify", help="run the randomized invariant battery")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--n-max", type=int, default=12)

    p = sub.add_parser("perturb", help="recompute metrics after each single-vertex removal")
    _add_input(p)
    _add_format(p, "md")
    p.add_argument("--bits", action="store_true")
    return parser


def _load(args):
    if args.catalog:
        return catalog_graph(args.catalog), args.catalog
    return load_graph(args.file), args.file


def cmd_report(args, out) -> int:
    g, name = _load(args)
    cfg = ReportConfig(k_grid=tuple(args.k_grid), p_grid=tuple(args.p_grid))
    out.write(render_report(build_report(g, cfg, name), args.format, bits=args.bits))
    return EXIT_OK


def cmd_order(args, out) -> int:
    res = ex.reproduce_ordering(args.by)
    label = ex.METRIC_LABELS[args.by]
    verdict = "MATCH" if res.matches else "MISMATCH"
    if args.format == "json":
        obj = {"schema": ORDER_SCHEMA, **res.to_dict()}
        obj["ranked"] = [{"graph": r["graph"], "value": json_value(r["value"])} for r in obj["ranked"]]
        obj["verdict"] = verdict
        out.write(json.dumps(obj, indent=2) + "\n")
    else:
        rows = [[i + 1, name, v, res.published_order[i]] for i, (name, v) in enumerate(res.ranked)]
        out.write(render_table(["rank", "graph", label, "published"], rows, args.format))
        out.write(f"{verdict}\n")
        for a, b, va, vb in res.violations:
            out.write(f"  {a} ({fmt_value(va)}) is published above {b} ({fmt_value(vb)})\n")
    return EXIT_OK if res.matches else EXIT_MISMATCH


def cmd_verify(args, out) -> int:
    if args.trials < 1:
        print("vntheil: --trials must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    summary = run_verification(args.trials, args.seed, args.n_max)
    for line in summary.lines():
        out.write(line + "\n")
    total_fail = sum(s.failed for s in summary.suites)
    out.write(f"{'ALL PASS' if summary.ok else 'FAILURES'}: {len(summary.suites)} suites, {total_fail} failed checks\n")
    return EXIT_OK if summary.ok else EXIT_FAIL


def cmd_perturb(args, out) -> int:
    g, name = _load(args)
    records = ex.perturbation_study(g, name)
    scale = 1.0 / math.log(2.0) if args.bits else 1.0
    info = {"T_d1", "T_Q"}

    def sc(key, v):
        return v * scale if v is not None and key in info else v

    if args.format == "json":
        objs = []
        for r in records:
            d = r.to_dict()
            for part in ("before", "after", "deltas"):
                d[part] = {k: json_value(sc(k, v)) for k, v in d[part].items()}
            objs.append(d)
        out.write(json.dumps({"schema": PERTURB_SCHEMA, "units": "bits" if args.bits else "nats", "records": objs}, indent=2) + "\n")
        return EXIT_OK
    keys = list(records[0].before)
    header = ["removed", "connected_after"]
    for k in keys:
        header += [f"{k}_before", f"{k}_after", f"{k}_delta"]
    rows = []
    for r in records:
        row = [r.removed_vertex, r.connected_after]
        deltas = r.deltas
        for k in keys:
            row += [sc(k, r.before[k]), sc(k, r.after[k]), sc(k, deltas[k])]
        rows.append(row)
    out.write(render_table(header, rows, args.format))
    return EXIT_OK


COMMANDS = {"report": cmd_report, "order": cmd_order, "verify": cmd_verify, "perturb": cmd_perturb}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except (GraphInputError, OSError) as exc:
        print(f"vntheil: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"vntheil: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
