"""Slow, independent reference implementations used only by the tests.

Nothing here touches the package's canonical labeling, block decomposition
or subset DP, so agreement is meaningful.
"""

from __future__ import annotations

from itertools import combinations, permutations

from cliquewise.graph import Graph, from_edges


def labeled_class_count(n: int) -> int:
    """Isomorphism classes on ``n`` vertices by exhaustive labeled dedup.

    Every labeled graph is an edge bitmask; the first unseen mask of each
    class marks all of its relabelings as seen.
    """
    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    maps = []
    for perm in permutations(range(n)):
        maps.append([index[tuple(sorted((perm[a], perm[b])))] for a, b in pairs])
    seen = bytearray(1 << len(pairs))
    classes = 0
    for mask in range(1 << len(pairs)):
        if seen[mask]:
            continue
        classes += 1
        for mp in maps:
            img = 0
            for i in range(len(pairs)):
                if mask >> i & 1:
                    img |= 1 << mp[i]
            seen[img] = 1
    return classes


def _simple_paths(g: Graph):
    """Yield every simple path as a tuple of vertices (each direction, length >= 1)."""
    def extend(path, used):
        yield path
        for u in range(g.n):
            if not used >> u & 1 and g.has_edge(path[-1], u):
                yield from extend(path + (u,), used | 1 << u)

    for v in range(g.n):
        yield from extend((v,), 1 << v)


def naive_longest_path(g: Graph) -> int:
    return max((len(p) for p in _simple_paths(g)), default=0)


def naive_circumference(g: Graph) -> int:
    best = 0
    for p in _simple_paths(g):
        if len(p) >= 3 and g.has_edge(p[-1], p[0]):
            best = max(best, len(p))
    return best


def naive_cliques(g: Graph, t: int) -> int:
    return sum(
        all(g.has_edge(a, b) for a, b in combinations(s, 2))
        for s in combinations(range(g.n), t)
    )


def naive_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    target = set(h.edges())
    for perm in permutations(range(g.n)):
        if {tuple(sorted((perm[a], perm[b]))) for a, b in g.edges()} == target:
            return True
    return False


def random_graph(rng, n: int, p: float) -> Graph:
    return from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def relabel_random(rng, g: Graph) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def bowtie() -> Graph:
    return from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def friendship(q: int) -> Graph:
    edges = []
    for i in range(q):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(0, a), (0, b), (a, b)]
    return from_edges(2 * q + 1, edges)
