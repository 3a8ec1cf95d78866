"""Command-line interface: ``srdf solve|verify|construct|check|bench``.

Exit codes: 0 success, 2 labeling is not an SRDF (``verify``), 3 solver
budget exhausted, 64 usage error.  ``$SRDF_NODE_BUDGET`` caps the
branch-and-bound node count when ``--budget`` is not given.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from typing import Optional, Sequence, TextIO

from . import families as fam
from .graph import FamilySpec, Graph, GraphError, Kind, generate
from .graph6 import Graph6Error, parse_graph6, write_graph6
from .labeling import Labeling, LabelingError, verify
from .records import LabelingRecord, dumps, report_record
from .solver import BudgetExhausted, SolveOptions, solve_branch_and_bound, solve_exact, solve_exhaustive
from .theorems import SUITE_ALIASES, SUITES, run_suite, summarize

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_BUDGET = 3
EXIT_USAGE = 64

log = logging.getLogger("srdf")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with status 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_family_args(p: argparse.ArgumentParser, required: bool = False) -> None:
    p.add_argument("--family", required=required, choices=[k.value for k in Kind],
                   help="graph family")
    p.add_argument("--n", type=int, help="family size parameter")
    p.add_argument("--m", type=int, help="pair count (friendship, matching) or first cycle length (join-cycles)")


def _family_spec(args) -> FamilySpec:
    return FamilySpec.parse(args.family, n=args.n, m=args.m)


def _resolve_graph(args) -> tuple[Graph, Optional[FamilySpec]]:
    if args.family:
        if getattr(args, "graph6", None):
            raise UsageError("give either a graph6 string or --family, not both")
        spec = _family_spec(args)
        return generate(spec), spec
    if not getattr(args, "graph6", None):
        raise UsageError("a graph6 string or --family is required")
    return parse_graph6(args.graph6), None


def _options(args) -> SolveOptions:
    kw = {"exhaustive_threshold": args.threshold, "deterministic": not args.parallel}
    if args.budget is not None:
        kw["node_budget"] = args.budget
    return SolveOptions.from_env(**kw)


def _join_split(spec: Optional[FamilySpec]) -> Optional[int]:
    return spec.m if spec is not None and spec.kind is Kind.JOIN_CYCLES else None


# ---------------------------------------------------------------------------


def cmd_solve(args, out: TextIO) -> int:
    g, spec = _resolve_graph(args)
    if g.order == 0:
        raise UsageError("graph has no vertices")
    opts = _options(args)
    try:
        result = solve_exact(g, opts)
    except BudgetExhausted as exc:
        out.write(dumps({
            "type": "budget-exhausted", "graph_id": write_graph6(g), "lower": exc.lower, "upper": exc.upper,
            "incumbent": str(exc.incumbent) if exc.incumbent else None, "nodes": exc.nodes,
        }) + "\n")
        return EXIT_BUDGET
    record = LabelingRecord.build(g, result.witness, f"solver:{result.method.value}", result.gamma,
                                  spec.descriptor() if spec else None)
    d = record.to_dict()
    d["nodes"] = result.nodes_explored
    if args.timing:
        d["seconds"] = round(result.elapsed, 6)
    out.write(dumps(d) + "\n")
    if args.figure:
        from .plotting import draw_labeling
        draw_labeling(g, result.witness, args.figure, title=g.name or record.graph_id, split=_join_split(spec))
    return EXIT_OK


def cmd_verify(args, out: TextIO) -> int:
    if args.record:
        stream = sys.stdin if args.record == "-" else open(args.record)
        worst = EXIT_OK
        with stream:
            for line in stream:
                if not line.strip():
                    continue
                d = json.loads(line)
                if d.get("type") != "labeling":
                    continue
                rec = LabelingRecord.from_dict(d)
                report = verify(parse_graph6(rec.graph_id), Labeling(rec.values))
                r = report_record(rec.graph_id, report)
                r["record_consistent"] = rec.recheck()
                out.write(dumps(r) + "\n")
                if not report.valid or not r["record_consistent"]:
                    worst = EXIT_INVALID
        return worst
    if args.labels is None:
        raise UsageError("verify needs --labels (or --record)")
    g, _ = _resolve_graph(args)
    f = Labeling.parse(args.labels)
    report = verify(g, f)
    out.write(dumps(report_record(write_graph6(g), report)) + "\n")
    for line in report.violations():
        print(line, file=sys.stderr)
    return EXIT_OK if report.valid else EXIT_INVALID


def cmd_construct(args, out: TextIO) -> int:
    spec = _family_spec(args)
    c = fam.construct(spec)
    record = LabelingRecord.build(
        c.graph, c.labeling, f"construction:{c.source}",
        c.claimed_weight if c.claim_kind is fam.ClaimKind.EXACT else None, spec.descriptor(),
    )
    d = record.to_dict()
    d["claim"] = c.claim_kind.value
    d["claimed_weight"] = c.claimed_weight
    out.write(dumps(d) + "\n")
    if args.figure:
        from .plotting import draw_labeling
        draw_labeling(c.graph, c.labeling, args.figure, title=spec.descriptor(), split=_join_split(spec))
    return EXIT_OK


def cmd_check(args, out: TextIO) -> int:
    checks = run_suite(args.suite, max_order=args.max_order, seed=args.seed)
    records = [c.to_record() for c in checks]
    lines = [dumps(r) for r in records]
    counts = summarize(checks)
    lines.append(dumps({"type": "summary", "suite": args.suite, "seed": args.seed, **counts}))
    out.write("\n".join(lines) + "\n")
    if args.report_dir:
        os.makedirs(args.report_dir, exist_ok=True)
        with open(os.path.join(args.report_dir, "checks.jsonl"), "w") as fh:
            fh.write("\n".join(lines) + "\n")
        from .plotting import plot_check_summary
        plot_check_summary(records, os.path.join(args.report_dir, "checks.png"))
    return EXIT_OK if counts["refuted"] == 0 else 1


def _parse_range(text: str) -> tuple[int, int]:
    try:
        a, b = text.split("..")
        lo, hi = int(a), int(b)
    except ValueError:
        raise UsageError(f"range must look like A..B, got {text!r}") from None
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return lo, hi


BENCH_COLUMNS = ("family", "params", "order", "gamma", "method", "nodes", "seconds", "status")


def cmd_bench(args, out: TextIO) -> int:
    lo, hi = _parse_range(args.range)
    kind = Kind(args.family)
    if kind is Kind.JOIN_CYCLES:
        specs = [FamilySpec(kind, m=m, n=n) for m in range(lo, hi + 1) for n in range(m, hi + 1)]
    elif kind in (Kind.FRIENDSHIP, Kind.MATCHING):
        specs = [FamilySpec(kind, m=m) for m in range(lo, hi + 1)]
    else:
        specs = [FamilySpec(kind, n=n) for n in range(lo, hi + 1)]
    opts = _options(args)
    rows = []
    aborted = False
    out.write("\t".join(BENCH_COLUMNS) + "\n")
    for spec in specs:
        g = generate(spec)
        row = {"family": kind.value, "params": spec.descriptor(), "order": g.order}
        start = time.perf_counter()
        try:
            if args.method == "exhaustive":
                r = solve_exhaustive(g)
            elif args.method == "branch-and-bound":
                r = solve_branch_and_bound(g, opts)
            else:
                r = solve_exact(g, opts)
            row.update(gamma=r.gamma, method=r.method.value, nodes=r.nodes_explored, status="ok")
        except BudgetExhausted as exc:
            aborted = True
            row.update(gamma=f"[{exc.lower},{exc.upper}]", method="branch-and-bound", nodes=exc.nodes, status="budget")
        row["seconds"] = round(time.perf_counter() - start, 4)
        rows.append(row)
        out.write("\t".join(str(row[c]) for c in BENCH_COLUMNS) + "\n")
        out.flush()
    if args.report_dir:
        os.makedirs(args.report_dir, exist_ok=True)
        with open(os.path.join(args.report_dir, "bench.tsv"), "w") as fh:
            fh.write("\t".join(BENCH_COLUMNS) + "\n")
            for row in rows:
                fh.write("\t".join(str(row[c]) for c in BENCH_COLUMNS) + "\n")
        from .plotting import plot_bench
        plot_bench(rows, os.path.join(args.report_dir, "bench.png"))
    return EXIT_BUDGET if aborted else EXIT_OK


# ---------------------------------------------------------------------------


def _add_solver_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--threshold", type=int, default=12, help="largest order solved by exhaustive search")
    p.add_argument("--budget", type=int, help="branch-and-bound node budget")
    p.add_argument("--parallel", action="store_true", help="explore subtrees concurrently (witness may differ)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="srdf", description="Signed Roman domination: exact values, verification, constructions.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="exact signed Roman domination number")
    p.add_argument("graph6", nargs="?")
    _add_family_args(p)
    _add_solver_args(p)
    p.add_argument("--timing", action="store_true", help="include elapsed seconds")
    p.add_argument("--figure", help="write a drawing of the witness to this file")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a labeling against both SRDF conditions")
    p.add_argument("graph6", nargs="?")
    _add_family_args(p)
    p.add_argument("--labels", help="comma-separated values in vertex order, e.g. 2,-1,1")
    p.add_argument("--record", help="file of labeling records to re-verify ('-' for stdin)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="explicit labeling for a family")
    _add_family_args(p, required=True)
    p.add_argument("--figure", help="write a drawing of the labeling to this file")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="run the claim checks")
    p.add_argument("--suite", default="all", choices=SUITES + tuple(SUITE_ALIASES))
    p.add_argument("--max-order", type=int, default=15)
    p.add_argument("--seed", type=int, default=2024)
    p.add_argument("--report-dir", help="also write checks.jsonl and checks.png here")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bench", help="solver timing table")
    p.add_argument("--family", required=True, choices=[k.value for k in Kind])
    p.add_argument("--range", required=True, help="parameter range A..B")
    p.add_argument("--method", default="auto", choices=("auto", "exhaustive", "branch-and-bound"))
    _add_solver_args(p)
    p.add_argument("--report-dir", help="also write bench.tsv and bench.png here")
    p.set_defaults(func=cmd_bench)
    return parser


def _attach_label_values(argv: Sequence[str]) -> list[str]:
    """Glue ``--labels -1,...`` into one token so argparse does not read the value as an option."""
    fixed: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok == "--labels":
            nxt = next(it, None)
            if nxt is not None and nxt.startswith("-") and nxt[1:2].isdigit():
                fixed.append(f"--labels={nxt}")
                continue
            fixed.append(tok)
            if nxt is not None:
                fixed.append(nxt)
            continue
        fixed.append(tok)
    return fixed


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_attach_label_values(sys.argv[1:] if argv is None else argv))
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    out = out or sys.stdout
    try:
        return args.func(args, out)
    except (UsageError, GraphError, Graph6Error, LabelingError, fam.ConstructionError, ValueError) as exc:
        print(f"srdf: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        # downstream closed early (e.g. piped into head)
        sys.stderr.close()
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
