from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graph import Graph, iter_bits


@dataclass(frozen=True)
class BlockDecomposition:
    """Biconnected blocks (bridges included) and the block-cut incidence.

    ``block_cut_tree`` holds ``(block_index, cut_vertex)`` pairs.
    """

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    block_cut_tree: tuple[tuple[int, int], ...]

    def block_graphs(self, g: Graph) -> list[Graph]:
        return [g.induced(b) for b in self.blocks]


@lru_cache(maxsize=1 << 16)
def blocks(g: Graph) -> BlockDecomposition:
    disc = [-1] * g.n
    low = [0] * g.n
    found: list[frozenset[int]] = []
    timer = 0
    for root in range(g.n):
        if disc[root] != -1 or not g.adj[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        edge_stack: list[tuple[int, int]] = []
        # frames: (vertex, parent, remaining-neighbour iterator)
        stack = [(root, -1, iter_bits(g.adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter_bits(g.adj[w])))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                comp = set()
                while True:
                    a, b = edge_stack.pop()
                    comp.update((a, b))
                    if (a, b) == (parent, v):
                        break
                found.append(frozenset(comp))
    ordered = tuple(sorted(found, key=lambda b: sorted(b)))
    count: dict[int, int] = {}
    for b in ordered:
        for v in b:
            count[v] = count.get(v, 0) + 1
    cuts = frozenset(v for v, c in count.items() if c > 1)
    tree = tuple((i, v) for i, b in enumerate(ordered) for v in sorted(b & cuts))
    return BlockDecomposition(ordered, cuts, tree)
