"""Exhaustive generation of non-isomorphic graphs.

``enumerate_graphs`` grows graphs one vertex at a time by canonical
augmentation: a child is kept only when its new vertex lies in the orbit of
the canonically chosen deletion vertex, so each class is produced from
exactly one parent. Edge-bounded spaces are assembled from connected graphs
grown one edge at a time.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .analysis import circumference, longest_path_order
from .canon import automorphism_orbits, canonical_graph, canonical_labeling, same_orbit
from .graph import Graph, iter_bits, union_all

VERTEX_CEILING = 9
EDGE_CEILING = 12
EDGE_SPACE_ORDER = 12
FREE_EDGE_CEILING = 16


def _is_free(g: Graph, forbid: tuple[str, int]) -> bool:
    kind, k = forbid
    if kind == "cycle":
        return circumference(g) < k
    if kind == "path":
        return longest_path_order(g) < k
    raise ValueError(f"forbidden class must be 'cycle' or 'path', not {kind!r}")


def _vertex_invariant(g: Graph, v: int) -> tuple:
    return g.adj[v].bit_count(), tuple(sorted(g.adj[u].bit_count() for u in iter_bits(g.adj[v])))


def _children(parent: Graph) -> list[Graph]:
    n = parent.n + 1
    v = n - 1
    out: list[Graph] = []
    seen: set[Graph] = set()
    for nbrs in range(1 << parent.n):
        rows = list(parent.adj)
        for u in iter_bits(nbrs):
            rows[u] |= 1 << v
        rows.append(nbrs)
        child = Graph(n, tuple(rows))
        inv = [_vertex_invariant(child, x) for x in range(n)]
        top = max(inv)
        if inv[v] != top:
            continue
        ties = [x for x in range(n) if inv[x] == top]
        lab, _ = canonical_labeling(child)
        chosen = max(ties, key=lab.__getitem__)
        if chosen != v and not same_orbit(child, v, chosen):
            continue
        key = child.relabel(lab)
        if key not in seen:
            seen.add(key)
            out.append(key)
    return out


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0, ()),)
    out: list[Graph] = []
    for parent in _level(n - 1):
        out.extend(_children(parent))
    return tuple(out)


def enumerate_graphs(n: int, edge_filter: int | None = None) -> Iterator[Graph]:
    """One canonical representative of every isomorphism class on ``n`` vertices."""
    if not 0 <= n <= VERTEX_CEILING:
        raise ValueError(f"order {n} outside the enumeration ceiling 0..{VERTEX_CEILING}")
    for g in _level(n):
        if edge_filter is None or g.m == edge_filter:
            yield g


@lru_cache(maxsize=None)
def connected_graphs(
    e: int, max_order: int = EDGE_SPACE_ORDER, forbid: tuple[str, int] | None = None
) -> tuple[Graph, ...]:
    """Connected graphs with exactly ``e >= 1`` edges and order at most ``max_order``.

    With ``forbid=("cycle", k)`` or ``("path", k)`` only graphs free of
    ``C_{>=k}`` (resp. ``P_k``) are kept. Both properties pass to subgraphs and
    every connected graph loses some edge (a non-bridge or a leaf edge) while
    staying connected, so growing only free parents still reaches every free
    graph.
    """
    if e < 1:
        raise ValueError("connected graphs here have at least one edge")
    if e == 1:
        base = Graph(2, (0b10, 0b01))
        return (base,) if max_order >= 2 and (forbid is None or _is_free(base, forbid)) else ()
    found: dict[Graph, None] = {}

    def offer(h: Graph) -> None:
        if forbid is None or _is_free(h, forbid):
            found.setdefault(canonical_graph(h), None)

    for p in connected_graphs(e - 1, max_order, forbid):
        for i in range(p.n):
            missing = ~p.adj[i] & ((1 << p.n) - 1) & ~((2 << i) - 1)
            for j in iter_bits(missing):
                rows = list(p.adj)
                rows[i] |= 1 << j
                rows[j] |= 1 << i
                offer(Graph(p.n, tuple(rows)))
        if p.n < max_order:
            for orbit in automorphism_orbits(p):
                v = orbit[0]
                rows = list(p.adj)
                rows[v] |= 1 << p.n
                rows.append(1 << v)
                offer(Graph(p.n + 1, tuple(rows)))
    return tuple(sorted(found, key=lambda g: (g.n, g.adj)))


def edge_space_components(
    m: int,
    max_order: int = EDGE_SPACE_ORDER,
    component_ok=None,
    forbid: tuple[str, int] | None = None,
) -> Iterator[tuple[Graph, ...]]:
    """Multisets of connected graphs with ``m`` edges in total.

    Each multiset (a non-increasing tuple of components) is one isomorphism
    class of graphs without isolated vertices. ``component_ok`` filters the
    admissible components; ``forbid`` restricts to free components during
    generation, which lifts the edge ceiling.
    """
    ceiling = EDGE_CEILING if forbid is None else FREE_EDGE_CEILING
    if not 0 <= m <= ceiling:
        raise ValueError(f"edge count {m} outside the enumeration ceiling 0..{ceiling}")
    items: list[tuple[int, Graph]] = []
    for e in range(m, 0, -1):
        for c in connected_graphs(e, max_order, forbid):
            if component_ok is None or component_ok(c):
                items.append((e, c))

    def rec(start: int, remaining: int, budget: int, chosen: list[Graph]):
        if remaining == 0:
            yield tuple(chosen)
            return
        for pos in range(start, len(items)):
            e, c = items[pos]
            if e > remaining or c.n > budget:
                continue
            chosen.append(c)
            yield from rec(pos, remaining - e, budget - c.n, chosen)
            chosen.pop()

    yield from rec(0, m, max_order, [])


def enumerate_edge_graphs(m: int, max_order: int = EDGE_SPACE_ORDER) -> Iterator[Graph]:
    """Every graph with ``m`` edges, no isolated vertices and order at most ``max_order``."""
    for comps in edge_space_components(m, max_order):
        yield union_all(comps)


def enumerate_edge_cores(
    m: int, t: int, k: int | None = None, forbid: str = "cycle"
) -> Iterator[Graph]:
    """Graphs with at most ``m`` edges, minimum degree ``>= t-1`` and no isolated vertices.

    Such cores carry every ``K_t`` of a graph: repeatedly deleting vertices of
    degree below ``t-1`` destroys no ``K_t``. When ``k`` is given only graphs
    free of ``C_{>=k}`` (``forbid="cycle"``) or ``P_k`` (``forbid="path"``)
    are produced.
    """
    if t < 2:
        raise ValueError("need t >= 2")
    ceiling = EDGE_CEILING if k is None else FREE_EDGE_CEILING
    if not 0 <= m <= ceiling:
        raise ValueError(f"edge count {m} outside the enumeration ceiling 0..{ceiling}")
    bound = min(2 * m // (t - 1), EDGE_SPACE_ORDER)
    pair = None if k is None else (forbid, k)

    def ok(c: Graph) -> bool:
        return c.n <= bound and min(c.degrees()) >= t - 1

    for size in range(m + 1):
        for comps in edge_space_components(size, bound, ok, pair):
            yield union_all(comps)
