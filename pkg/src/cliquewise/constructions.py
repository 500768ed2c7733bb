"""Builders for the extremal graphs: clique unions, colex graphs, split graphs
and single-vertex gluings of blocks."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .canon import CanonicalForm, automorphism_orbits, canonical_labeling
from .formulas import colex_decompose, cycle_decompose, path_decompose
from .graph import MAX_ORDER, Graph, complete_graph, empty_graph, from_edges, union_all

FAMILY_CEILING = 20

Attachment = Optional[tuple[int, int]]


def union_cliques(q: int, a: int, r: int) -> Graph:
    """``q`` disjoint copies of ``K_a`` plus one ``K_r``."""
    if q < 0 or a < 1 or r < 0:
        raise ValueError("need q >= 0, a >= 1, r >= 0")
    if q * a + r > MAX_ORDER:
        raise ValueError(f"order {q * a + r} exceeds {MAX_ORDER}")
    return union_all([complete_graph(a)] * q + [complete_graph(r)])


def colex_pairs(m: int) -> list[tuple[int, int]]:
    """The first ``m`` two-element sets in colex order."""
    out = []
    j = 1
    while len(out) < m:
        for i in range(j):
            if len(out) == m:
                break
            out.append((i, j))
        j += 1
    return out


def colex_graph(m: int) -> Graph:
    if m < 0:
        raise ValueError("edge count must be non-negative")
    pairs = colex_pairs(m)
    n = max((j for _, j in pairs), default=-1) + 1
    return from_edges(n, pairs)


def split_graph(a: int, b: int) -> Graph:
    """Join of a clique ``K_a`` (vertices ``0..a-1``) with an independent set of size ``b``."""
    if a < 0 or b < 0:
        raise ValueError("need a, b >= 0")
    if a + b > MAX_ORDER:
        raise ValueError(f"order {a + b} exceeds {MAX_ORDER}")
    edges = list(combinations(range(a), 2))
    edges += [(i, a + j) for i in range(a) for j in range(b)]
    return from_edges(a + b, edges)


@dataclass(frozen=True)
class GlueRecipe:
    """Blocks placed in order; ``attachments[i]`` places ``blocks[i + 1]``.

    An attachment ``(u, p)`` identifies vertex ``u`` of the new block with the
    already placed vertex ``p``; ``None`` starts a new component.
    """

    blocks: tuple[Graph, ...]
    attachments: tuple[Attachment, ...]

    def __post_init__(self):
        if self.blocks and len(self.attachments) != len(self.blocks) - 1:
            raise ValueError("need one attachment per block after the first")

    @property
    def is_tree(self) -> bool:
        return all(a is not None for a in self.attachments)


def _place(recipe: GlueRecipe) -> tuple[int, list[tuple[int, int]], list[list[int]]]:
    """Global vertex maps for every block, plus the glued edge list."""
    placed = 0
    maps: list[list[int]] = []
    edges: set[tuple[int, int]] = set()
    for i, block in enumerate(recipe.blocks):
        att = recipe.attachments[i - 1] if i else None
        vmap = []
        if att is not None:
            u, p = att
            if not 0 <= u < block.n:
                raise ValueError(f"block {i} has no vertex {u}")
            if not 0 <= p < placed:
                raise ValueError(f"attachment target {p} has not been placed")
        for v in range(block.n):
            if att is not None and v == att[0]:
                vmap.append(att[1])
            else:
                vmap.append(placed)
                placed += 1
        if len(set(vmap)) != len(vmap):
            raise ValueError(f"attachment merges two vertices of block {i}")
        for a, b in block.edges():
            e = tuple(sorted((vmap[a], vmap[b])))
            if e in edges:
                raise ValueError(f"block {i} repeats edge {e}")
            edges.add(e)
        maps.append(vmap)
    if placed > MAX_ORDER:
        raise ValueError(f"glued order {placed} exceeds {MAX_ORDER}")
    return placed, sorted(edges), maps


def glue(recipe: GlueRecipe) -> Graph:
    n, edges, _ = _place(recipe)
    return from_edges(n, edges)


def literal_structure_ok(recipe: GlueRecipe, mode: str = "tree") -> bool:
    """Check the literal auxiliary-graph condition on the glued pieces.

    Pieces must pairwise share at most one vertex, and the graph joining
    pieces that share a vertex must be a tree (``mode="tree"``) or a forest.
    A friendship graph fails this: its three triangles pairwise touch.
    """
    _, _, maps = _place(recipe)
    sets = [set(m) for m in maps]
    parent = list(range(len(sets)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    aux_edges = 0
    for i, j in combinations(range(len(sets)), 2):
        shared = len(sets[i] & sets[j])
        if shared > 1:
            return False
        if shared:
            aux_edges += 1
            a, b = find(i), find(j)
            if a == b:
                return False
            parent[a] = b
    if mode == "tree":
        return aux_edges == len(sets) - 1
    return True


def _orbit_reps(g: Graph) -> list[int]:
    return [orb[0] for orb in automorphism_orbits(g, limit=FAMILY_CEILING)]


def _class_sequences(counts: list[int]) -> Iterable[list[int]]:
    total = sum(counts)

    def rec(seq: list[int]):
        if len(seq) == total:
            yield list(seq)
            return
        for c, left in enumerate(counts):
            if left:
                counts[c] -= 1
                seq.append(c)
                yield from rec(seq)
                seq.pop()
                counts[c] += 1

    yield from rec([])


def _family_key(g: Graph) -> CanonicalForm:
    lab, _ = canonical_labeling(g, limit=FAMILY_CEILING)
    cg = g.relabel(lab)
    return CanonicalForm(cg.n, tuple(cg.edges()), tuple(lab))


def enumerate_family(
    blocks: Sequence[Graph],
    forest_mode: str = "tree",
    order_filter: int | None = None,
    strict: bool = False,
) -> set[CanonicalForm]:
    """All non-isomorphic sequential gluings of ``blocks``.

    ``forest_mode="forest"`` also allows a block to start a new component.
    ``strict`` additionally keeps only gluings meeting
    :func:`literal_structure_ok`.
    """
    if forest_mode not in ("tree", "forest"):
        raise ValueError("forest_mode must be 'tree' or 'forest'")
    blocks = [b for b in blocks if b.n]
    if not blocks:
        return {_family_key(empty_graph(0))}
    total = sum(b.n for b in blocks)
    if total > FAMILY_CEILING:
        raise ValueError(f"total block order {total} exceeds the ceiling {FAMILY_CEILING}")
    classes: list[Graph] = []
    keys: list[CanonicalForm] = []
    counts: list[int] = []
    for b in blocks:
        key = _family_key(b)
        if key in keys:
            counts[keys.index(key)] += 1
        else:
            keys.append(key)
            classes.append(b)
            counts.append(1)
    reps = [_orbit_reps(c) for c in classes]
    results: set[CanonicalForm] = set()

    for seq in _class_sequences(counts):
        seq_blocks = tuple(classes[c] for c in seq)
        options = []
        for c in seq[1:]:
            opts: list[Attachment] = [None] if forest_mode == "forest" else []
            opts += [(u, -1) for u in reps[c]]
            options.append(opts)

        def rec(i: int, placed: int, chosen: list[Attachment]):
            if i == len(seq_blocks):
                recipe = GlueRecipe(seq_blocks, tuple(chosen))
                if strict and not literal_structure_ok(recipe, forest_mode):
                    return
                g = glue(recipe)
                if order_filter is None or g.n == order_filter:
                    results.add(_family_key(g))
                return
            block = seq_blocks[i]
            for opt in options[i - 1]:
                if opt is None:
                    chosen.append(None)
                    rec(i + 1, placed + block.n, chosen)
                    chosen.pop()
                    continue
                for p in range(placed):
                    chosen.append((opt[0], p))
                    rec(i + 1, placed + block.n - 1, chosen)
                    chosen.pop()

        rec(1, seq_blocks[0].n, [])
    return results


def exceptional_classical(variant: str, n: int, k: int, t_blocks: int) -> Graph:
    """A representative of the split-graph extremal shapes of the classical theorems.

    Path: ``t_blocks`` disjoint ``K_{k-1}`` plus ``K_{k/2-1}`` joined to an
    independent set filling the remaining vertices. Cycle: ``t_blocks`` copies
    of ``K_{k-1}`` glued at one clique vertex of ``K_{(k-1)/2}`` joined to an
    independent set of size ``n - t_blocks(k-2) - (k-1)/2``.
    """
    clique, independent = _exceptional_split(variant, n, k, t_blocks)
    h = split_graph(clique, independent)
    if variant == "path":
        return union_all([complete_graph(k - 1)] * t_blocks + [h])
    recipe = GlueRecipe((h,) + (complete_graph(k - 1),) * t_blocks, ((0, 0),) * t_blocks)
    return glue(recipe)


def _exceptional_split(variant: str, n: int, k: int, t_blocks: int) -> tuple[int, int]:
    if variant == "path":
        q, r = path_decompose(n, k)
        if k % 2 or r not in (k // 2, k // 2 - 1):
            raise ValueError("path exception needs k even and r in {k/2, k/2 - 1}")
        clique, used = k // 2 - 1, t_blocks * (k - 1)
    elif variant == "cycle":
        q, r = cycle_decompose(n, k)
        if k % 2 == 0 or r not in ((k + 1) // 2, (k - 1) // 2):
            raise ValueError("cycle exception needs k odd and r in {(k+1)/2, (k-1)/2}")
        clique, used = (k - 1) // 2, t_blocks * (k - 2)
    else:
        raise ValueError(f"variant must be 'path' or 'cycle', not {variant!r}")
    # t_blocks = q is allowed: the split block is then K_r and the shape
    # coincides with the clique-union extremal graph
    if not 0 <= t_blocks <= q:
        raise ValueError(f"need 0 <= t_blocks <= q = {q}")
    return clique, n - used - clique


def exceptional_applies(variant: str, n: int, k: int) -> bool:
    if variant == "path":
        q, r = path_decompose(n, k)
        return k % 2 == 0 and q >= 1 and r in (k // 2, k // 2 - 1)
    q, r = cycle_decompose(n, k)
    return k % 2 == 1 and q >= 1 and r in ((k + 1) // 2, (k - 1) // 2)


def exceptional_family(variant: str, n: int, k: int, t_blocks: int) -> set[CanonicalForm]:
    """Every graph of the exceptional shape for one value of ``t_blocks``."""
    if variant == "path":
        return {_family_key(exceptional_classical(variant, n, k, t_blocks))}
    clique, independent = _exceptional_split(variant, n, k, t_blocks)
    blocks = [complete_graph(k - 1)] * t_blocks + [split_graph(clique, independent)]
    return enumerate_family(blocks, "tree", n)


def classical_extremal_family(variant: str, n: int, k: int) -> set[CanonicalForm]:
    """Edge-extremal graphs on ``n`` vertices predicted by the classical theorems."""
    if variant == "path":
        q, r = path_decompose(n, k)
        out = {_family_key(union_cliques(q, k - 1, r))}
    elif variant == "cycle":
        q, r = cycle_decompose(n, k)
        out = enumerate_family([complete_graph(k - 1)] * q + [complete_graph(r)], "tree", n)
    else:
        raise ValueError(f"variant must be 'path' or 'cycle', not {variant!r}")
    if exceptional_applies(variant, n, k):
        for tb in range(q):
            out |= exceptional_family(variant, n, k, tb)
    return out
