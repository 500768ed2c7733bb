"""Exact clique counts, longest paths and circumference."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .blocks import blocks
from .graph import Graph, iter_bits

DP_LIMIT = 24


def degeneracy_order(g: Graph) -> list[int]:
    remaining = (1 << g.n) - 1
    order = []
    while remaining:
        v = min(iter_bits(remaining), key=lambda u: (g.adj[u] & remaining).bit_count())
        order.append(v)
        remaining &= ~(1 << v)
    return order


def _count_in(fwd: list[int], cand: int, need: int) -> int:
    if need == 1:
        return cand.bit_count()
    # fwd is an acyclic orientation, so each clique is reached exactly once
    total = 0
    for u in iter_bits(cand):
        sub = cand & fwd[u]
        if sub.bit_count() >= need - 1:
            total += _count_in(fwd, sub, need - 1)
    return total


@lru_cache(maxsize=1 << 18)
def count_cliques(g: Graph, t: int) -> int:
    """Number of ``t``-vertex cliques in ``g``."""
    if t < 1:
        raise ValueError("clique order must be at least 1")
    if t == 1:
        return g.n
    if t == 2:
        return g.m
    pos = {v: i for i, v in enumerate(degeneracy_order(g))}
    fwd = [0] * g.n
    for v in range(g.n):
        for u in iter_bits(g.adj[v]):
            if pos[u] > pos[v]:
                fwd[v] |= 1 << u
    total = 0
    for v in range(g.n):
        if fwd[v].bit_count() >= t - 1:
            total += _count_in(fwd, fwd[v], t - 1)
    return total


def count_cliques_at(g: Graph, v: int, t: int) -> int:
    """Number of ``t``-cliques that contain vertex ``v``."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
    if t < 2:
        raise ValueError("clique order must be at least 2")
    if t == 2:
        return g.degree(v)
    # (t-1)-cliques inside N(v), each counted once via "higher-index" candidates
    fwd = [row & ~((2 << u) - 1) for u, row in enumerate(g.adj)]
    return _count_in(fwd, g.adj[v], t - 1)


def _local(g: Graph, comp: int) -> list[int]:
    vs = list(iter_bits(comp))
    index = {v: i for i, v in enumerate(vs)}
    rows = []
    for v in vs:
        row = 0
        for u in iter_bits(g.adj[v] & comp):
            row |= 1 << index[u]
        rows.append(row)
    return rows


def _check_limit(size: int) -> None:
    if size > DP_LIMIT:
        raise ValueError(f"component of order {size} exceeds the exact limit {DP_LIMIT}")


def _tree_path_order(la: list[int]) -> int:
    def farthest(src: int) -> tuple[int, int]:
        seen = 1 << src
        frontier = seen
        depth = 0
        last = src
        while True:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= la[v]
            nxt &= ~seen
            if not nxt:
                return last, depth
            seen |= nxt
            frontier = nxt
            depth += 1
            last = next(iter_bits(nxt))

    a, _ = farthest(0)
    _, d = farthest(a)
    return d + 1


def _path_dp(la: list[int]) -> int:
    c = len(la)
    layer = {1 << v: 1 << v for v in range(c)}
    size = 1
    while True:
        nxt: dict[int, int] = {}
        for mask, ends in layer.items():
            while ends:
                low = ends & -ends
                ends ^= low
                ext = la[low.bit_length() - 1] & ~mask
                while ext:
                    ub = ext & -ext
                    ext ^= ub
                    key = mask | ub
                    nxt[key] = nxt.get(key, 0) | ub
        if not nxt:
            return size
        size += 1
        if size == c:
            return size
        layer = nxt


@lru_cache(maxsize=1 << 18)
def longest_path_order(g: Graph) -> int:
    """Maximum number of vertices on a simple path (0 for the empty graph)."""
    best = 1 if g.n else 0
    for comp in g.components():
        size = comp.bit_count()
        if size <= best:
            continue
        _check_limit(size)
        la = _local(g, comp)
        edges = sum(r.bit_count() for r in la) // 2
        if edges == size - 1:
            best = max(best, _tree_path_order(la))
        else:
            best = max(best, _path_dp(la))
    return best


def _cycle_dp(la: list[int], floor: int) -> int:
    c = len(la)
    best = floor
    full = (1 << c) - 1
    for s in range(c):
        if c - s <= best:
            break
        allowed = full & ~((1 << s) - 1)
        layer = {1 << s: 1 << s}
        size = 1
        while layer:
            nxt: dict[int, int] = {}
            for mask, ends in layer.items():
                while ends:
                    low = ends & -ends
                    ends ^= low
                    v = low.bit_length() - 1
                    if size >= 3 and size > best and la[v] >> s & 1:
                        best = size
                    ext = la[v] & allowed & ~mask
                    while ext:
                        ub = ext & -ext
                        ext ^= ub
                        key = mask | ub
                        nxt[key] = nxt.get(key, 0) | ub
            layer = nxt
            size += 1
        if best == c:
            break
    return best


@lru_cache(maxsize=1 << 18)
def circumference(g: Graph) -> int:
    """Length of a longest cycle, 0 for forests."""
    for comp in g.components():
        _check_limit(comp.bit_count())
    best = 0
    for b in sorted(blocks(g).blocks, key=len, reverse=True):
        if len(b) < 3 or len(b) <= best:
            continue
        mask = 0
        for v in b:
            mask |= 1 << v
        best = _cycle_dp(_local(g, mask), best)
    return best


@dataclass(frozen=True)
class FreenessProfile:
    longest_path_order: int
    circumference: int
    k: int

    def pk_free_for(self, k: int) -> bool:
        return self.longest_path_order < k

    def ck_free_for(self, k: int) -> bool:
        return self.circumference < k

    @property
    def pk_free(self) -> bool:
        return self.pk_free_for(self.k)

    @property
    def ck_free(self) -> bool:
        return self.ck_free_for(self.k)


def freeness_profile(g: Graph, k: int) -> FreenessProfile:
    return FreenessProfile(longest_path_order(g), circumference(g), k)


def is_pk_free(g: Graph, k: int) -> bool:
    return longest_path_order(g) < k


def is_ck_free(g: Graph, k: int) -> bool:
    return circumference(g) < k
