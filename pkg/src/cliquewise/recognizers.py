"""Structural membership tests for the extremal families.

The decisions here never compare clique counts against the formulas; they
look only at block structure, components and isomorphism type, so that a
brute-force search can be checked against them independently.
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .analysis import circumference, count_cliques, longest_path_order
from .blocks import blocks
from .canon import is_isomorphic
from .constructions import GlueRecipe, colex_graph
from .formulas import binom, colex_decompose, cycle_decompose, edge_decompose, path_decompose
from .graph import Graph, complete_graph, iter_bits, strip_isolated

RECOGNIZER_LIMIT = 20


class FamilyInconsistencyWarning(UserWarning):
    """A graph was accepted by family membership but fails the freeness condition."""


@dataclass(frozen=True)
class ForestOfCliquesWitness:
    q: int
    clique_blocks: tuple[frozenset[int], ...]
    leftover: Graph
    leftover_vertices: tuple[int, ...]
    recipe: GlueRecipe


def _is_clique_block(g: Graph, block: frozenset[int], size: int) -> bool:
    if len(block) != size:
        return False
    mask = 0
    for v in block:
        mask |= 1 << v
    return all((g.adj[v] & mask).bit_count() == size - 1 for v in block)


def _mask(vs) -> int:
    out = 0
    for v in vs:
        out |= 1 << v
    return out


@lru_cache(maxsize=1 << 16)
def decompose_forest_of_cliques(g: Graph, k: int) -> ForestOfCliquesWitness | None:
    """Split ``g`` into its ``K_{k-1}`` blocks and the leftover graph ``L``.

    Any two blocks share at most one vertex and blocks hang together like a
    forest, so once the ``K_{k-1}`` blocks are removed the pieces (cliques
    plus the components of ``L``) can be glued back one at a time along the
    block-cut forest. ``None`` is returned only if that replay fails.
    """
    if g.n > RECOGNIZER_LIMIT:
        raise ValueError(f"order {g.n} exceeds the recognizer limit {RECOGNIZER_LIMIT}")
    dec = blocks(g)
    cliques = tuple(b for b in dec.blocks if _is_clique_block(g, b, k - 1))
    clique_mask = [_mask(b) for b in cliques]

    left_rows = list(g.adj)
    for cm in clique_mask:
        for v in iter_bits(cm):
            left_rows[v] &= ~cm
    in_clique = _mask(v for b in cliques for v in b)
    left_vs = [v for v in range(g.n) if left_rows[v] or not in_clique >> v & 1]
    leftover = Graph(g.n, tuple(left_rows)).induced(left_vs)

    # pieces: clique blocks, then components of the leftover graph
    pieces: list[int] = list(clique_mask)
    for comp in leftover.components():
        pieces.append(_mask(left_vs[i] for i in iter_bits(comp)))

    recipe = _replay(left_rows, pieces, len(cliques))
    if recipe is None:
        return None
    return ForestOfCliquesWitness(len(cliques), cliques, leftover, tuple(left_vs), recipe)


def _replay(left_rows: list[int], pieces: list[int], n_cliques: int) -> GlueRecipe | None:
    """Order pieces breadth-first so each one meets the placed part in at most one vertex."""
    placed_ids: dict[int, int] = {}
    placed_mask = 0
    blocks_out: list[Graph] = []
    attachments = []
    remaining = list(range(len(pieces)))
    while remaining:
        # start a new component with the lowest remaining piece, then grow it
        queue = deque([remaining[0]])
        in_queue = {remaining[0]}
        while queue:
            p = queue.popleft()
            remaining.remove(p)
            mask = pieces[p]
            shared = mask & placed_mask
            if shared.bit_count() > 1:
                return None
            vs = list(iter_bits(mask))
            local = {v: i for i, v in enumerate(vs)}
            if p < n_cliques:
                block = complete_graph(len(vs))
            else:
                block = Graph(len(vs), tuple(_mask(local[u] for u in iter_bits(left_rows[v] & mask)) for v in vs))
            if blocks_out:
                if shared:
                    v = shared.bit_length() - 1
                    attachments.append((local[v], placed_ids[v]))
                else:
                    attachments.append(None)
            for v in vs:
                if v not in placed_ids:
                    placed_ids[v] = len(placed_ids)
            placed_mask |= mask
            blocks_out.append(block)
            for other in remaining:
                if other not in in_queue and pieces[other] & mask:
                    queue.append(other)
                    in_queue.add(other)
    return GlueRecipe(tuple(blocks_out), tuple(attachments))


def in_colex_family(l: Graph, b: int, k: int, t: int, forbid: str = "cycle") -> bool:
    """Membership of ``l`` in the family built around the colex graph ``L_b``.

    ``forbid="cycle"`` requires freeness from cycles of length ``>= k``;
    ``forbid="path"`` requires freeness from ``P_k``.
    """
    if not 0 <= b <= binom(k - 1, 2):
        raise ValueError(f"b={b} outside 0..C(k-1,2)")
    if l.m != b:
        return False
    _, r, s = colex_decompose(b)
    if b > 0 and s >= t - 1:
        return is_isomorphic(strip_isolated(l), strip_isolated(colex_graph(b)))
    free = circumference(l) < k if forbid == "cycle" else longest_path_order(l) < k
    if not free:
        return False
    if b > 0 and r >= t:
        return count_cliques(l, r) > 0
    return True


def in_family_C(l: Graph, b: int, k: int, t: int) -> bool:
    return in_colex_family(l, b, k, t, "cycle")


def in_family_L(l: Graph, b: int, k: int, t: int) -> bool:
    return in_colex_family(l, b, k, t, "path")


def is_extremal_vertex_path(g: Graph, k: int, t: int) -> bool:
    q, r = path_decompose(g.n, k)
    big = 0
    for comp in g.components():
        if comp.bit_count() == k - 1 and all(
            (g.adj[v] & comp).bit_count() == k - 2 for v in iter_bits(comp)
        ):
            big += 1
    if big != q:
        return False
    if t <= r:
        # the rest spans r vertices; it must be a single K_r
        rest = [v for v in range(g.n) if not _in_big_component(g, v, k)]
        return g.induced(rest).m == binom(r, 2)
    return True


def _in_big_component(g: Graph, v: int, k: int) -> bool:
    row = g.adj[v]
    if row.bit_count() != k - 2:
        return False
    comp = row | 1 << v
    return all((g.adj[u] | 1 << u) == comp for u in iter_bits(row))


def _flag_if_not_free(g: Graph, k: int, where: str) -> None:
    if circumference(g) >= k:
        warnings.warn(
            f"{where}: family member with a cycle of length >= {k}: {g!r}",
            FamilyInconsistencyWarning,
            stacklevel=3,
        )


def is_extremal_vertex_cycle(g: Graph, k: int, t: int) -> bool:
    if g.n < 1:
        raise ValueError("need n >= 1")
    q, r = cycle_decompose(g.n, k)
    w = decompose_forest_of_cliques(g, k)
    if w is None or w.q != q:
        return False
    if t <= r:
        if not g.is_connected():
            return False
        if not is_isomorphic(w.leftover, complete_graph(r)):
            return False
    _flag_if_not_free(g, k, "vertex-cycle")
    return True


def is_extremal_edge(g: Graph, k: int, t: int, variant: str = "cycle") -> bool:
    if variant not in ("cycle", "path"):
        raise ValueError(f"variant must be 'cycle' or 'path', not {variant!r}")
    g = strip_isolated(g)
    q, b = edge_decompose(g.m, k)
    w = decompose_forest_of_cliques(g, k)
    if w is None or w.q != q:
        return False
    if variant == "cycle":
        return in_family_C(w.leftover, b, k, t)
    for block in w.clique_blocks:
        if any(g.adj[v].bit_count() != k - 2 for v in block):
            return False
    return in_family_L(w.leftover, b, k, t)
