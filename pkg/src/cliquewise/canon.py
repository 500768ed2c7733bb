"""Canonical labeling by individualization and equitable refinement.

The certificate of a discrete partition is the tuple of relabeled adjacency
rows; the canonical labeling is the one whose certificate is smallest among
all leaves of the search tree. Subtrees are pruned only when a discovered
automorphism maps them onto an explored subtree, so the result is exact.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .graph import Graph, iter_bits
from .graph6 import encode

CANON_LIMIT = 12

Cells = list  # list[list[int]], an ordered partition


def _refine(adj: Sequence[int], cells: Cells) -> Cells:
    """Coarsest equitable refinement, splitting against a worklist of vertex sets.

    Fragments of a split cell are ordered by their neighbour count into the
    splitter, so the result depends only on the structure, not on labels.
    """
    queue = deque()
    for c in cells:
        mk = 0
        for v in c:
            mk |= 1 << v
        queue.append(mk)
    n_cells = len(cells)
    total = sum(len(c) for c in cells)
    while queue and n_cells < total:
        w = queue.popleft()
        out = []
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[int, list[int]] = {}
            for v in c:
                groups.setdefault((adj[v] & w).bit_count(), []).append(v)
            if len(groups) == 1:
                out.append(c)
                continue
            n_cells += len(groups) - 1
            for key in sorted(groups):
                frag = groups[key]
                out.append(frag)
                mk = 0
                for v in frag:
                    mk |= 1 << v
                queue.append(mk)
        cells = out
    return cells


class _Search:
    def __init__(self, n: int, adj: Sequence[int]):
        self.n = n
        self.adj = adj
        self.first = None  # (cert, lab, path)
        self.best = None
        self.autos: list[list[int]] = []

    def run(self, cells: Cells) -> None:
        self._visit(cells, [])

    def _visit(self, cells: Cells, path: list[int]) -> int:
        cells = _refine(self.adj, cells)
        level = len(path)
        idx = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if idx is None:
            return self._leaf(cells, path)
        cell = cells[idx]
        tried: list[int] = []
        for v in cell:
            if tried and self._equivalent(v, tried, path):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            back = self._visit(cells[:idx] + [[v], rest] + cells[idx + 1:], path + [v])
            if back < level:
                return back
        return level

    def _leaf(self, cells: Cells, path: list[int]) -> int:
        order = [c[0] for c in cells]
        lab = [0] * self.n
        for i, v in enumerate(order):
            lab[v] = i
        cert = []
        for v in order:
            row = 0
            for u in iter_bits(self.adj[v]):
                row |= 1 << lab[u]
            cert.append(row)
        cert = tuple(cert)
        leaf = (cert, lab, path)
        if self.first is None:
            self.first = self.best = leaf
            return len(path)
        for ref in (self.first, self.best):
            if cert == ref[0]:
                self._record_automorphism(ref[1], lab)
                return _common_prefix(ref[2], path)
        if cert < self.best[0]:
            self.best = leaf
        return len(path)

    def _record_automorphism(self, ref_lab: list[int], lab: list[int]) -> None:
        inverse = [0] * self.n
        for v, i in enumerate(lab):
            inverse[i] = v
        gamma = [inverse[ref_lab[x]] for x in range(self.n)]
        self.autos.append(gamma)

    def _equivalent(self, v: int, tried: list[int], path: list[int]) -> bool:
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.autos:
            if all(gamma[p] == p for p in path):
                for x in range(self.n):
                    a, b = find(x), find(gamma[x])
                    if a != b:
                        parent[a] = b
        root = find(v)
        return any(find(u) == root for u in tried)


def _common_prefix(a: list[int], b: list[int]) -> int:
    i = 0
    while i < len(a) and i < len(b) and a[i] == b[i]:
        i += 1
    return i


def canonical_labeling(
    g: Graph, cells: Cells | None = None, limit: int = CANON_LIMIT
) -> tuple[list[int], list[list[int]]]:
    """Return ``(lab, automorphisms)`` where ``lab[v]`` is the canonical label of ``v``.

    ``cells`` is an optional ordered vertex partition (colour classes); colour
    classes keep their relative order in the labeling.
    """
    if g.n > limit:
        raise ValueError(f"canonical labeling is limited to order {limit}, got {g.n}")
    if g.n == 0:
        return [], []
    if cells is None:
        cells = [list(range(g.n))]
    else:
        cells = [list(c) for c in cells if c]
        if sorted(v for c in cells for v in c) != list(range(g.n)):
            raise ValueError("cells must partition the vertex set")
    search = _Search(g.n, g.adj)
    search.run(cells)
    return search.best[1], search.autos


@dataclass(frozen=True)
class CanonicalForm:
    n: int
    edges: tuple[tuple[int, int], ...]
    perm: tuple[int, ...] = field(compare=False, hash=False, default=())

    def graph(self) -> Graph:
        rows = [0] * self.n
        for u, v in self.edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))


def canonical_form(g: Graph) -> CanonicalForm:
    lab, _ = canonical_labeling(g)
    cg = g.relabel(lab)
    return CanonicalForm(cg.n, tuple(cg.edges()), tuple(lab))


@lru_cache(maxsize=1 << 16)
def canonical_graph(g: Graph) -> Graph:
    lab, _ = canonical_labeling(g)
    return g.relabel(lab)


def canonical_g6(g: Graph) -> str:
    return encode(canonical_graph(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_graph(g) == canonical_graph(h)


def colored_certificate(g: Graph, cells: Cells) -> tuple:
    lab, _ = canonical_labeling(g, cells)
    return tuple(len(c) for c in cells if c), g.relabel(lab).adj


def same_orbit(g: Graph, v: int, w: int) -> bool:
    """True iff some automorphism of ``g`` maps ``v`` to ``w``."""
    if v == w:
        return True
    rest_v = [u for u in range(g.n) if u != v]
    rest_w = [u for u in range(g.n) if u != w]
    return colored_certificate(g, [rest_v, [v]]) == colored_certificate(g, [rest_w, [w]])


def automorphism_orbits(g: Graph, limit: int = CANON_LIMIT) -> list[list[int]]:
    """Vertex orbits of Aut(g), from the generators found during labeling."""
    _, autos = canonical_labeling(g, limit=limit)
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gamma in autos:
        for x in range(g.n):
            a, b = find(x), find(gamma[x])
            if a != b:
                parent[a] = b
    orbits: dict[int, list[int]] = {}
    for x in range(g.n):
        orbits.setdefault(find(x), []).append(x)
    return sorted(orbits.values())
