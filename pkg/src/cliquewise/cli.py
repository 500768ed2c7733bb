"""Command-line front end.

Exit codes: 0 success, 1 usage or input error, 2 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings
from fractions import Fraction
from typing import Sequence, TextIO

from .analysis import circumference, count_cliques, longest_path_order
from .constructions import (
    GlueRecipe,
    colex_graph,
    exceptional_classical,
    glue,
    split_graph,
    union_cliques,
)
from .enumerate import enumerate_graphs
from .formulas import (
    ExtremalQuery,
    ex_cycle_edges,
    ex_path_edges,
    kk_value,
    luo_bound,
    max_kt_edge,
    max_kt_vertex,
)
from .graph import Graph
from .graph6 import Graph6Error, decode, encode
from .recognizers import FamilyInconsistencyWarning, decompose_forest_of_cliques
from .verify import recognize, verify_suite

JOBS_ENV = "CLIQUEWISE_JOBS"

VALUE_VARIANTS = (
    "vertex-path",
    "vertex-cycle",
    "edge-cycle",
    "edge-path",
    "classical-path",
    "classical-cycle",
    "luo-path",
    "luo-cycle",
    "kk",
)
RECOGNIZE_VARIANTS = ("vertex-path", "vertex-cycle", "edge-cycle", "edge-path")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if b < a:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(a, b + 1)


def _default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV)
    if raw is None:
        return 1
    try:
        jobs = int(raw)
    except ValueError:
        raise UsageError(f"{JOBS_ENV} must be an integer, got {raw!r}") from None
    if jobs < 1:
        raise UsageError(f"{JOBS_ENV} must be positive")
    return jobs


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cliquewise", description="Clique counts in path- and cycle-free graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(p, choices=("table", "json"), default="table"):
        p.add_argument("--format", choices=choices, default=default)

    p = sub.add_parser("value", help="closed-form extremal values")
    p.add_argument("--variant", choices=VALUE_VARIANTS, required=True)
    p.add_argument("--k", type=int, help="not used by --variant kk")
    p.add_argument("--t", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    fmt(p)

    p = sub.add_parser("construct", help="build a graph and print it")
    p.add_argument("--family", choices=("cliques", "colex", "split", "glue-file", "exceptional"), required=True)
    p.add_argument("--q", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--t-blocks", type=int, dest="t_blocks")
    p.add_argument("--variant", choices=("path", "cycle"))
    p.add_argument("--file")
    fmt(p, ("graph6", "table", "json"), "graph6")

    p = sub.add_parser("count", help="count t-cliques of graph6 lines on stdin")
    p.add_argument("--t", type=int, required=True)
    fmt(p)

    p = sub.add_parser("check", help="longest path, circumference and freeness")
    p.add_argument("--k", type=int, required=True)
    fmt(p)

    p = sub.add_parser("recognize", help="extremal-family membership of graph6 lines on stdin")
    p.add_argument("--variant", choices=RECOGNIZE_VARIANTS, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    fmt(p)

    p = sub.add_parser("enumerate", help="stream non-isomorphic graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--edges", type=int)
    fmt(p, ("graph6", "json"), "graph6")

    p = sub.add_parser("verify", help="brute-force verification suite")
    p.add_argument("--variant", choices=RECOGNIZE_VARIANTS, required=True)
    p.add_argument("--k-range", type=_range, required=True)
    p.add_argument("--t-range", type=_range, required=True)
    p.add_argument("--size-range", type=_range, required=True)
    p.add_argument("--jobs", type=int)
    p.add_argument("--input")
    fmt(p)
    return parser


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        flags = ", ".join("--" + n.replace("_", "-") for n in missing)
        raise UsageError(f"{args.command}: missing {flags}")
    return [getattr(args, n) for n in names]


def _emit_json(out: TextIO, doc: dict) -> None:
    out.write(json.dumps(doc, indent=2) + "\n")


def _value_text(v) -> str:
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return str(v)


def cmd_value(args, out: TextIO) -> int:
    v = args.variant
    if v != "kk":
        _need(args, "k")
    try:
        if v in ("vertex-path", "vertex-cycle"):
            n, t = _need(args, "n", "t")
            value = max_kt_vertex(v.split("-")[1], n, args.k, t)
        elif v in ("edge-cycle", "edge-path"):
            m, t = _need(args, "m", "t")
            value = max_kt_edge(m, args.k, t)
        elif v == "classical-path":
            (n,) = _need(args, "n")
            value = ex_path_edges(n, args.k)
        elif v == "classical-cycle":
            (n,) = _need(args, "n")
            value = ex_cycle_edges(n, args.k)
        elif v in ("luo-path", "luo-cycle"):
            n, t = _need(args, "n", "t")
            value = luo_bound(v.split("-")[1], n, args.k, t)
        else:
            m, t = _need(args, "m", "t")
            value = kk_value(m, t)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = _value_text(value)
    if args.format == "json":
        params = {x: getattr(args, x) for x in ("k", "t", "n", "m") if getattr(args, x) is not None}
        _emit_json(out, {"command": "value", "variant": v, "params": params, "value": text})
    else:
        out.write(text + "\n")
    return 0


def _read_recipe(path: str) -> GlueRecipe:
    try:
        with open(path) as fh:
            doc = json.load(fh)
        blocks = tuple(decode(x) for x in doc["blocks"])
        attachments = tuple(None if a is None else (int(a[0]), int(a[1])) for a in doc["attachments"])
    except (OSError, KeyError, TypeError, IndexError, json.JSONDecodeError, Graph6Error) as exc:
        raise UsageError(f"cannot read recipe {path}: {exc}") from None
    return GlueRecipe(blocks, attachments)


def cmd_construct(args, out: TextIO) -> int:
    f = args.family
    try:
        if f == "cliques":
            g = union_cliques(*_need(args, "q", "a", "r"))
        elif f == "colex":
            g = colex_graph(*_need(args, "m"))
        elif f == "split":
            g = split_graph(*_need(args, "a", "b"))
        elif f == "glue-file":
            g = glue(_read_recipe(*_need(args, "file")))
        else:
            variant, n, k, tb = _need(args, "variant", "n", "k", "t_blocks")
            g = exceptional_classical(variant, n, k, tb)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit_graphs(out, [g], args.format, "construct")
    return 0


def _emit_graphs(out: TextIO, graphs, mode: str, command: str) -> None:
    if mode == "json":
        _emit_json(out, {"command": command, "graphs": [
            {"graph6": encode(g), "n": g.n, "m": g.m} for g in graphs
        ]})
        return
    for g in graphs:
        line = encode(g)
        out.write((line if mode == "graph6" else f"{line}\t{g.n}\t{g.m}") + "\n")


def _per_graph(args, inp: TextIO, out: TextIO, command: str, fn, columns: Sequence[str]) -> int:
    """Apply ``fn`` to every graph6 line; bad lines are reported and make the exit code 1."""
    rows = []
    failed = False
    for raw in inp:
        line = raw.strip()
        if not line or line == ">>graph6<<":
            continue
        try:
            values = fn(decode(line))
            rows.append({"graph6": line, **dict(zip(columns, values))})
        except (Graph6Error, ValueError) as exc:
            failed = True
            rows.append({"graph6": line, "error": str(exc)})
    if args.format == "json":
        _emit_json(out, {"command": command, "results": rows})
    else:
        for row in rows:
            if "error" in row:
                out.write(f"{row['graph6']}\terror: {row['error']}\n")
            else:
                out.write("\t".join([row["graph6"]] + [_cell(row[c]) for c in columns]) + "\n")
    return 1 if failed else 0


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "-"
    if isinstance(v, dict):
        return " ".join(f"{k}={_cell(x)}" for k, x in v.items())
    return str(v)


def cmd_count(args, inp, out) -> int:
    if args.t < 1:
        raise UsageError("--t must be at least 1")
    return _per_graph(args, inp, out, "count", lambda g: (count_cliques(g, args.t),), ("k_t",))


def cmd_check(args, inp, out) -> int:
    def fn(g: Graph):
        lp, c = longest_path_order(g), circumference(g)
        return lp, c, lp < args.k, c < args.k

    return _per_graph(
        args, inp, out, "check", fn, ("longest_path", "circumference", "pk_free", "ck_free")
    )


def _witness(g: Graph, variant: str, k: int) -> dict | None:
    from .graph import strip_isolated

    h = strip_isolated(g) if variant.startswith("edge") else g
    w = decompose_forest_of_cliques(h, k)
    if w is None:
        return None
    return {"q": w.q, "leftover": encode(w.leftover)}


def cmd_recognize(args, inp, out) -> int:
    try:
        ExtremalQuery(args.variant, args.k, args.t, 1)
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    def fn(g: Graph):
        query = ExtremalQuery(args.variant, args.k, args.t, g.m if args.variant.startswith("edge") else g.n)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", FamilyInconsistencyWarning)
            ok = recognize(query, g)
        flagged = any(issubclass(w.category, FamilyInconsistencyWarning) for w in caught)
        return ("accept" if ok else "reject"), _witness(g, args.variant, args.k), flagged

    return _per_graph(args, inp, out, "recognize", fn, ("decision", "witness", "flag"))


def cmd_enumerate(args, out) -> int:
    try:
        graphs = enumerate_graphs(args.n, args.edges)
        if args.format == "json":
            _emit_graphs(out, list(graphs), "json", "enumerate")
        else:
            for g in graphs:
                out.write(encode(g) + "\n")
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return 0


def cmd_verify(args, out) -> int:
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    if jobs < 1:
        raise UsageError("--jobs must be positive")
    lines = None
    if args.input:
        try:
            with open(args.input) as fh:
                lines = [x.strip() for x in fh if x.strip() and x.strip() != ">>graph6<<"]
            for x in lines:
                decode(x)
        except (OSError, Graph6Error) as exc:
            raise UsageError(f"cannot read {args.input}: {exc}") from None
    reports, summary = verify_suite(
        args.variant, args.k_range, args.t_range, args.size_range, jobs, lines
    )
    if args.format == "json":
        _emit_json(out, {
            "command": "verify",
            "summary": summary,
            "reports": [r.as_dict() for r in reports],
        })
    else:
        out.write("variant\tk\tt\tsize\tformula\tbrute\textremal\taccepted\tflags\tmatch\n")
        for r in reports:
            q = r.query
            cells = [q.variant, q.k, q.t, q.size, r.formula_value, r.brute_value,
                     len(r.extremal_graphs), len(r.recognizer_accept), r.flags, r.match]
            line = "\t".join(_cell(c) for c in cells)
            if r.error:
                line += f"\terror: {r.error}"
            for g6 in r.counterexamples:
                line += f"\n  counterexample {g6}"
            out.write(line + "\n")
        out.write(" ".join(f"{k}={v}" for k, v in summary.items()) + "\n")
    return 0 if summary["matches"] == summary["cells"] else 2


def run(argv: Sequence[str] | None = None, stdin: TextIO | None = None, stdout: TextIO | None = None) -> int:
    inp = stdin if stdin is not None else sys.stdin
    out = stdout if stdout is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if args.command == "value":
            return cmd_value(args, out)
        if args.command == "construct":
            return cmd_construct(args, out)
        if args.command == "count":
            return cmd_count(args, inp, out)
        if args.command == "check":
            return cmd_check(args, inp, out)
        if args.command == "recognize":
            return cmd_recognize(args, inp, out)
        if args.command == "enumerate":
            return cmd_enumerate(args, out)
        return cmd_verify(args, out)
    except UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        return 1
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else 1


def main() -> None:
    sys.exit(run())
