"""Brute-force oracles and per-cell verification reports.

Each cell of a verification suite is one :class:`ExtremalQuery`. The oracle
searches every graph in the cell's search space, the closed form supplies the
predicted value, and the structural recognizer is run over the same space;
the report records any disagreement instead of raising.
"""

from __future__ import annotations

import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .analysis import circumference, count_cliques, longest_path_order
from .canon import CanonicalForm, canonical_form, canonical_g6, canonical_graph
from .constructions import (
    classical_extremal_family,
    colex_graph,
    exceptional_applies,
    exceptional_family,
)
from .formulas import (
    ExtremalQuery,
    colex_decompose,
    cycle_decompose,
    ex_cycle_edges,
    ex_path_edges,
    formula_value,
    kk_value,
    path_decompose,
)
from .enumerate import (
    EDGE_SPACE_ORDER,
    edge_space_components,
    enumerate_edge_cores,
    enumerate_graphs,
)
from .graph import Graph, strip_isolated, union_all
from .graph6 import decode
from .recognizers import (
    FamilyInconsistencyWarning,
    is_extremal_edge,
    is_extremal_vertex_cycle,
    is_extremal_vertex_path,
)

EDGE_TRUNCATION_NOTE = (
    f"edge-variant extremal sets cover graphs without isolated vertices of order <= {EDGE_SPACE_ORDER}"
)


@dataclass
class VerificationReport:
    query: ExtremalQuery
    formula_value: int | None = None
    brute_value: int | None = None
    extremal_graphs: list[str] = field(default_factory=list)
    recognizer_accept: list[str] = field(default_factory=list)
    match: bool = False
    counterexamples: list[str] = field(default_factory=list)
    flags: int = 0
    searched: int = 0
    notes: list[str] = field(default_factory=list)
    error: str | None = None

    def as_dict(self) -> dict:
        return {
            "query": self.query.as_dict(),
            "formula_value": self.formula_value,
            "brute_value": self.brute_value,
            "extremal_graphs": list(self.extremal_graphs),
            "recognizer_accept": list(self.recognizer_accept),
            "match": self.match,
            "counterexamples": list(self.counterexamples),
            "flags": self.flags,
            "searched": self.searched,
            "notes": list(self.notes),
            "error": self.error,
        }


def _free(g: Graph, forbids: str, k: int) -> bool:
    if forbids == "path":
        return longest_path_order(g) < k
    return circumference(g) < k


def search_space(query: ExtremalQuery, graphs: Sequence[Graph] | None = None) -> Iterable[Graph]:
    """Graphs the oracle ranges over (free and non-free for vertex variants)."""
    if graphs is not None:
        if query.is_edge:
            return [h for h in (strip_isolated(g) for g in graphs) if h.m == query.size]
        return [g for g in graphs if g.n == query.size]
    if query.is_edge:
        comps = edge_space_components(query.size, EDGE_SPACE_ORDER, forbid=(query.forbids, query.k))
        return (union_all(c) for c in comps)
    return enumerate_graphs(query.size)


def _core_value(query: ExtremalQuery) -> int:
    k, t = query.k, query.t
    best = 0
    for g in enumerate_edge_cores(query.size, t, k, query.forbids):
        best = max(best, count_cliques(g, t))
    return best


def brute_force_max(
    query: ExtremalQuery, graphs: Sequence[Graph] | None = None
) -> tuple[int, list[Graph]]:
    """Maximum ``k_t`` over free graphs in the search space and every graph attaining it.

    For the edge variants the value is taken from the core search (graphs of
    minimum degree ``>= t-1``) and must agree with the maximum over the full
    truncated space; the extremal set comes from the full space.
    """
    best = -1
    attained: dict[Graph, None] = {}
    for g in search_space(query, graphs):
        if not _free(g, query.forbids, query.k):
            continue
        c = count_cliques(g, query.t)
        if c > best:
            best = c
            attained = {}
        if c == best:
            attained.setdefault(canonical_graph(g), None)
    if query.is_edge and graphs is None:
        core = _core_value(query)
        if core != best:
            raise RuntimeError(f"core search gives {core} but the full edge space gives {best}")
    if best < 0:
        raise ValueError(f"empty search space for {query}")
    return best, list(attained)


def recognize(query: ExtremalQuery, g: Graph) -> bool:
    if query.variant == "vertex-path":
        return is_extremal_vertex_path(g, query.k, query.t)
    if query.variant == "vertex-cycle":
        return is_extremal_vertex_cycle(g, query.k, query.t)
    return is_extremal_edge(g, query.k, query.t, query.forbids)


def verify_cell(query: ExtremalQuery, graphs: Sequence[Graph] | None = None) -> VerificationReport:
    report = VerificationReport(query)
    report.formula_value = formula_value(query)
    value, extremal = brute_force_max(query, graphs)
    report.brute_value = value
    report.extremal_graphs = sorted({canonical_g6(g) for g in extremal})

    accepted: set[str] = set()
    searched = 0
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", FamilyInconsistencyWarning)
        for g in search_space(query, graphs):
            searched += 1
            if recognize(query, g):
                accepted.add(canonical_g6(g))
    report.flags = sum(issubclass(w.category, FamilyInconsistencyWarning) for w in caught)
    report.searched = searched
    report.recognizer_accept = sorted(accepted)
    report.counterexamples = sorted(set(report.extremal_graphs) ^ accepted)
    report.match = report.formula_value == report.brute_value and not report.counterexamples
    if query.is_edge and graphs is None:
        report.notes.append(EDGE_TRUNCATION_NOTE)
    if graphs is not None:
        report.notes.append("search space read from input graph6")
    return report


def _safe_cell(args: tuple[ExtremalQuery, tuple[str, ...] | None]) -> VerificationReport:
    query, lines = args
    try:
        graphs = None if lines is None else [decode(x) for x in lines]
        return verify_cell(query, graphs)
    except Exception as exc:  # recorded per cell, never aborts the suite
        return VerificationReport(query, error=f"{type(exc).__name__}: {exc}")


def suite_queries(
    variant: str, k_range: Iterable[int], t_range: Iterable[int], size_range: Iterable[int]
) -> list[ExtremalQuery]:
    out = []
    for k in k_range:
        for t in t_range:
            if not 3 <= t < k:
                continue
            for size in size_range:
                if variant == "vertex-cycle" and size < 1:
                    continue
                out.append(ExtremalQuery(variant, k, t, size))
    return sorted(out, key=ExtremalQuery.key)


def summarize(reports: Sequence[VerificationReport]) -> dict:
    return {
        "cells": len(reports),
        "matches": sum(r.match for r in reports),
        "mismatches": sum(not r.match and r.error is None for r in reports),
        "errors": sum(r.error is not None for r in reports),
        "flags": sum(r.flags for r in reports),
    }


def verify_suite(
    variant: str,
    k_range: Iterable[int],
    t_range: Iterable[int],
    size_range: Iterable[int],
    jobs: int = 1,
    input_lines: Sequence[str] | None = None,
) -> tuple[list[VerificationReport], dict]:
    """Run every cell; report order is by query key whatever the worker count."""
    queries = suite_queries(variant, list(k_range), list(t_range), list(size_range))
    lines = None if input_lines is None else tuple(input_lines)
    work = [(q, lines) for q in queries]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_safe_cell, work))
    else:
        reports = [_safe_cell(w) for w in work]
    reports.sort(key=lambda r: r.query.key())
    return reports, summarize(reports)


@dataclass
class ColexReport:
    """Unconstrained maximum of ``k_t`` over graphs with ``m`` edges."""

    m: int
    t: int
    brute_value: int
    kk_value: int
    maximizers: list[Graph]
    colex_unique: bool
    all_contain_top_clique: bool


def colex_check(m: int, t: int, max_order: int = 8) -> ColexReport:
    """Search every graph of order ``<= max_order`` with ``m`` edges (isolated vertices ignored)."""
    best = -1
    found: dict[Graph, None] = {}
    for g in enumerate_graphs(max_order):
        if g.m != m:
            continue
        c = count_cliques(g, t)
        if c > best:
            best, found = c, {}
        if c == best:
            found.setdefault(canonical_graph(strip_isolated(g)), None)
    if best < 0:
        raise ValueError(f"no graph of order <= {max_order} has {m} edges")
    _, r, _ = colex_decompose(m)
    maximizers = list(found)
    target = canonical_graph(strip_isolated(colex_graph(m)))
    return ColexReport(
        m,
        t,
        best,
        kk_value(m, t),
        maximizers,
        maximizers == [target],
        r == 0 or all(count_cliques(g, r) > 0 for g in maximizers),
    )


@dataclass
class ClassicalReport:
    """Maximum edge count of ``P_k``-free or ``C_{>=k}``-free graphs on ``n`` vertices."""

    variant: str
    n: int
    k: int
    brute_value: int
    formula_value: int
    extremal: set[CanonicalForm]
    predicted: set[CanonicalForm]
    exceptional_expected: bool
    exceptional_present: bool

    @property
    def match(self) -> bool:
        return self.brute_value == self.formula_value and self.extremal == self.predicted


def classical_check(variant: str, n: int, k: int) -> ClassicalReport:
    if variant == "path":
        free = lambda g: longest_path_order(g) < k
        formula = ex_path_edges(n, k)
    elif variant == "cycle":
        free = lambda g: circumference(g) < k
        formula = ex_cycle_edges(n, k)
    else:
        raise ValueError(f"variant must be 'path' or 'cycle', not {variant!r}")
    best = -1
    extremal: set[CanonicalForm] = set()
    for g in enumerate_graphs(n):
        if g.m < best or not free(g):
            continue
        if g.m > best:
            best, extremal = g.m, set()
        extremal.add(canonical_form(g))
    expected = exceptional_applies(variant, n, k)
    present = False
    if expected:
        q = (path_decompose(n, k) if variant == "path" else cycle_decompose(n, k))[0]
        present = all(exceptional_family(variant, n, k, tb) <= extremal for tb in range(q))
    return ClassicalReport(
        variant, n, k, best, formula, extremal,
        classical_extremal_family(variant, n, k), expected, present,
    )
