"""Immutable simple graphs with bitmask adjacency rows.

Vertices are ``0..n-1``; ``adj[v]`` is an int whose bit ``u`` is set when
``uv`` is an edge. Every value is hashable and compares by labeled equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

MAX_ORDER = 64


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.n

    @cached_property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1)
            v = u + 1
            while row:
                if row & 1:
                    out.append((u, v))
                row >>= 1
                v += 1
        return out

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        perm = list(perm)
        new = [0] * self.n
        for u in range(self.n):
            row = 0
            for v in iter_bits(self.adj[u]):
                row |= 1 << perm[v]
            new[perm[u]] = row
        return Graph(self.n, tuple(new))

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabeled to ``0..len-1`` in ascending vertex order."""
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        rows = []
        for v in vs:
            row = 0
            for u in iter_bits(self.adj[v]):
                if u in index:
                    row |= 1 << index[u]
            rows.append(row)
        return Graph(len(vs), tuple(rows))

    def components(self) -> list[int]:
        """Connected components as vertex bitmasks, ordered by smallest vertex."""
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_edges(n: int, edges: Iterable[Iterable[int]]) -> Graph:
    """Build a graph on ``n`` vertices; duplicate edges collapse silently."""
    if not 0 <= n <= MAX_ORDER:
        raise ValueError(f"order {n} outside 0..{MAX_ORDER}")
    rows = [0] * n
    for e in edges:
        pair = tuple(e)
        if len(pair) == 1:  # a set literal {v, v} collapses to {v}
            pair = pair * 2
        if len(pair) != 2:
            raise ValueError(f"edge {e!r} is not a vertex pair")
        u, v = pair
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge {{{u},{v}}} has an endpoint outside 0..{n - 1}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return from_edges(n, [])


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edges(10, outer + spokes + inner)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    n = g1.n + g2.n
    if n > MAX_ORDER:
        raise ValueError(f"combined order {n} exceeds {MAX_ORDER}")
    shifted = tuple(row << g1.n for row in g2.adj)
    return Graph(n, g1.adj + shifted)


def union_all(graphs: Iterable[Graph]) -> Graph:
    out = Graph(0, ())
    for g in graphs:
        out = disjoint_union(out, g)
    return out


def strip_isolated(g: Graph) -> Graph:
    keep = [v for v in range(g.n) if g.adj[v]]
    if len(keep) == g.n:
        return g
    return g.induced(keep)


def add_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    return from_edges(g.n, [*g.edges(), *edges])
