"""Command-line interface: ``equitree <subcommand> ...``.

Exit codes: 0 yes/ok, 1 no/invalid, 2 usage or I/O error, 3 oracle budget exhausted.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .coloring import UNBOUNDED, ColoringError, DegreeBound, is_equitable, is_proper, verify_tree_coloring
from .decider import condition_A, condition_B, decide, decide_equitable_tree
from .formats import (
    FormatError,
    coloring_to_json,
    dumps_json,
    read_coloring,
    read_graph,
    write_coloring,
    write_graph,
)
from .graph import GraphError, complete_bipartite
from .kvector import Params, enumerate_tree
from .oracle import BudgetExceeded, SearchConfig, default_node_budget, oracle_proper, oracle_tree
from .reductions import KINDS, build_gadget

EXIT_YES, EXIT_NO, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits 2 on its own; keep the message on stderr
        raise UsageError(message)


def _t_arg(text: str) -> DegreeBound:
    try:
        return DegreeBound.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _bound_or_proper(args) -> DegreeBound | None:
    if args.proper:
        if args.t is not None:
            raise UsageError("--proper and --t are mutually exclusive")
        return None
    if args.t is None:
        raise UsageError("one of --t or --proper is required")
    return args.t


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def cmd_decide(args) -> int:
    t = _bound_or_proper(args)
    verdict = decide(args.m, args.n, args.q, t, with_coloring=args.coloring)
    sys.stdout.write(dumps_json(verdict.certificate()))
    return EXIT_YES if verdict.feasible else EXIT_NO


def cmd_color(args) -> int:
    t = _bound_or_proper(args)
    verdict = decide(args.m, args.n, args.q, t, with_coloring=True)
    if not verdict.feasible:
        print(f"no equitable coloring for m={args.m} n={args.n} q={args.q} t={t or 0}", file=sys.stderr)
        return EXIT_NO
    if args.json:
        _emit(dumps_json(coloring_to_json(verdict.witness_coloring, t)), args.out)
    else:
        _emit(write_coloring(verdict.witness_coloring, t), args.out)
    if args.graph_out:
        g, _ = complete_bipartite(args.m, args.n)
        Path(args.graph_out).write_text(write_graph(g))
    return EXIT_YES


def _load_graph(args):
    if args.graph:
        return read_graph(Path(args.graph).read_text())
    if args.m is None or args.n is None:
        raise UsageError("give --graph FILE or both --m and --n")
    return complete_bipartite(args.m, args.n)[0]


def cmd_verify(args) -> int:
    g = _load_graph(args)
    text = Path(args.coloring).read_text()
    if text.lstrip().startswith("{"):
        from .formats import coloring_from_json

        coloring, t = coloring_from_json(json.loads(text))
    else:
        coloring, t = read_coloring(text)
    if args.t is not None:
        t = args.t
    if t is None:
        ok = is_proper(g, coloring)
        reason = "ok" if ok else "improper: a class contains an edge"
    else:
        report = verify_tree_coloring(g, coloring, t)
        ok, reason = report.ok, report.describe()
    if ok and args.equitable and not is_equitable(coloring):
        ok, reason = False, f"not equitable: class sizes {coloring.class_sizes()}"
    print(reason if ok else f"FAIL {reason}")
    return EXIT_YES if ok else EXIT_NO


def cmd_reduce(args) -> int:
    g = read_graph(Path(args.input).read_text())
    t = args.t if args.t is not None else UNBOUNDED
    if args.kind == "npt" and t.unbounded:
        raise UsageError("reduce npt needs a finite --t")
    out = build_gadget(args.kind, g, args.q, t)
    _emit(write_graph(out.graph), args.out)
    sidecar = args.sidecar
    if sidecar is None and args.out not in (None, "-"):
        sidecar = args.out + ".json"
    if sidecar:
        Path(sidecar).write_text(json.dumps(out.sidecar(), indent=2) + "\n")
    return EXIT_YES


def cmd_oracle(args) -> int:
    g = read_graph(Path(args.input).read_text())
    budget = args.budget if args.budget is not None else default_node_budget()
    try:
        if args.proper:
            if args.t is not None:
                raise UsageError("--proper and --t are mutually exclusive")
            t = None
            found = oracle_proper(g, args.q, equitable=args.equitable, node_budget=budget)
        else:
            t = args.t if args.t is not None else UNBOUNDED
            found = oracle_tree(g, args.q, SearchConfig(budget, True, args.equitable, t))
    except BudgetExceeded:
        sys.stdout.write("BUDGET\n")
        return EXIT_BUDGET
    if found is None:
        sys.stdout.write("UNSAT\n")
        return EXIT_NO
    _emit(write_coloring(found, t), args.out)
    return EXIT_YES


SWEEP_HEADER = ["m", "n", "q", "t", "a", "r", "condA", "condB", "closed_form", "kvector", "oracle", "agree"]


@dataclass(frozen=True)
class SweepRow:
    m: int
    n: int
    q: int
    t: DegreeBound
    a: int
    r: int
    cond_a: str
    cond_b: str
    closed_form: bool
    kvector: bool
    oracle: bool | None  # None: skipped (above the vertex cap)

    @property
    def agree(self) -> bool:
        vals = {self.closed_form, self.kvector}
        if self.oracle is not None:
            vals.add(self.oracle)
        return len(vals) == 1

    def sort_key(self):
        return (self.m, self.n, self.q, self.t.sort_key())

    def cells(self) -> list[str]:
        def b(x):
            return "true" if x else "false"

        oracle = "skipped" if self.oracle is None else b(self.oracle)
        return [
            str(self.m), str(self.n), str(self.q), str(self.t), str(self.a), str(self.r),
            self.cond_a, self.cond_b, b(self.closed_form), b(self.kvector), oracle, b(self.agree),
        ]


def _first_clause(cond, m: int, n: int, q: int) -> str:
    return cond(m, n, q) or cond(n, m, q) or "-"


def sweep_row(m: int, n: int, q: int, t: DegreeBound, oracle_limit: int, budget: int) -> SweepRow:
    a, r = divmod(m + n, q)
    verdict = decide_equitable_tree(m, n, q, t, with_coloring=False)
    if a < 1:
        cond_a = cond_b = "degenerate"
        kvec = True
    else:
        cond_a = _first_clause(condition_A, m, n, q)
        cond_b = _first_clause(condition_B, m, n, q)
        kvec = enumerate_tree(Params(m, n, q), t) is not None
    oracle = None
    if m + n <= oracle_limit:
        g, _ = complete_bipartite(m, n)
        oracle = oracle_tree(g, q, SearchConfig(budget, True, True, t)) is not None
    return SweepRow(m, n, q, t, a, r, cond_a, cond_b, verdict.feasible, kvec, oracle)


def _sweep_task(task):
    return sweep_row(*task)


def sweep_rows(max_sum: int, max_q: int, t_list: Sequence[DegreeBound], oracle_limit: int,
               budget: int | None = None, jobs: int = 1) -> list[SweepRow]:
    budget = budget if budget is not None else default_node_budget()
    tasks = [
        (m, s - m, q, t, oracle_limit, budget)
        for s in range(1, max_sum + 1)
        for m in range(s + 1)
        for q in range(1, max_q + 1)
        for t in t_list
    ]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            rows = list(pool.map(_sweep_task, tasks, chunksize=64))
    else:
        rows = [_sweep_task(task) for task in tasks]
    return sorted(rows, key=SweepRow.sort_key)


def cmd_sweep(args) -> int:
    t_list = [_t_arg(x) for x in args.t_list.split(",") if x.strip()]
    rows = sweep_rows(args.max_sum, args.max_q, t_list, args.oracle_limit, jobs=args.jobs)
    bad = [row for row in rows if not row.agree]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SWEEP_HEADER)
    for row in rows:
        if row.agree or args.keep_disagreements:
            writer.writerow(row.cells())
    sys.stdout.write(buf.getvalue())
    if bad:
        print(f"{len(bad)} disagreement(s)", file=sys.stderr)
        return EXIT_NO
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="equitree", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def mnq(sp, required=True):
        sp.add_argument("--m", type=int, required=required)
        sp.add_argument("--n", type=int, required=required)

    def bound(sp):
        sp.add_argument("--t", type=_t_arg, default=None, help="degree bound: integer >= 1 or inf")
        sp.add_argument("--proper", action="store_true", help="ask for a proper equitable coloring")

    sp = sub.add_parser("decide", help="decide K_{m,n} and print a JSON certificate")
    mnq(sp)
    sp.add_argument("--q", type=int, required=True)
    bound(sp)
    sp.add_argument("--coloring", action="store_true", help="include the witness coloring")
    sp.set_defaults(func=cmd_decide)

    sp = sub.add_parser("color", help="emit a witness coloring of K_{m,n}")
    mnq(sp)
    sp.add_argument("--q", type=int, required=True)
    bound(sp)
    sp.add_argument("--out", default=None)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--graph-out", default=None, help="also write K_{m,n} in graph format")
    sp.set_defaults(func=cmd_color)

    sp = sub.add_parser("verify", help="check a coloring file against a graph")
    sp.add_argument("--graph", default=None)
    mnq(sp, required=False)
    sp.add_argument("--coloring", required=True)
    sp.add_argument("--t", type=_t_arg, default=None, help="override the file's degree bound")
    sp.add_argument("--equitable", action="store_true", help="also require equitable class sizes")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("reduce", help="build a reduction gadget")
    sp.add_argument("kind", choices=KINDS)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--t", type=_t_arg, default=None)
    sp.add_argument("--in", dest="input", required=True)
    sp.add_argument("--out", default=None)
    sp.add_argument("--sidecar", default=None)
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("oracle", help="exhaustive search on a graph file")
    sp.add_argument("--in", dest="input", required=True)
    sp.add_argument("--q", type=int, required=True)
    bound(sp)
    sp.add_argument("--equitable", action="store_true")
    sp.add_argument("--budget", type=int, default=None)
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("sweep", help="closed form vs k-vector vs oracle agreement table")
    sp.add_argument("--max-sum", type=int, required=True)
    sp.add_argument("--max-q", type=int, required=True)
    sp.add_argument("--t-list", default="1,2,3,inf")
    sp.add_argument("--oracle-limit", type=int, default=10)
    sp.add_argument("--keep-disagreements", action="store_true")
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_sweep)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"equitree: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, FormatError, GraphError, ColoringError, ValueError) as exc:
        print(f"equitree: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
