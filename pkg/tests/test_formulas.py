from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cliquewise.analysis import circumference, count_cliques
from cliquewise.blocks import blocks
from cliquewise.constructions import colex_graph
from cliquewise.enumerate import enumerate_graphs
from cliquewise.formulas import (
    ExtremalQuery,
    binom,
    colex_decompose,
    ex_cycle_edges,
    ex_path_edges,
    f_t_bound,
    kk_value,
    lemma_convexity,
    lemma_team_identity,
    luo_bound,
    majorizes,
    max_kt_edge,
    max_kt_vertex,
    split_sequence,
    vertex_clique_bound,
)


def test_binom_convention():
    assert binom(2, 3) == 0 and binom(5, -1) == 0 and binom(5, 2) == 10


def test_classical_edges():
    assert ex_path_edges(10, 4) == 9
    assert ex_path_edges(5, 4) == 4
    assert ex_path_edges(3, 4) == 3
    assert ex_cycle_edges(10, 4) == 13
    assert ex_cycle_edges(8, 5) == 13
    assert ex_cycle_edges(1, 3) == 0


def test_luo_bounds():
    assert luo_bound("path", 9, 5, 3) == 9
    assert luo_bound("cycle", 9, 5, 3) == Fraction(32, 3)
    assert luo_bound("path", 0, 5, 3) == 0
    assert isinstance(luo_bound("cycle", 9, 5, 3), Fraction)


def test_vertex_values():
    assert max_kt_vertex("path", 7, 4, 3) == 2
    assert max_kt_vertex("cycle", 9, 5, 3) == 9
    assert max_kt_vertex("cycle", 7, 4, 3) == 3
    with pytest.raises(ValueError):
        max_kt_vertex("path", 7, 4, 4)


def test_edge_values():
    assert max_kt_edge(13, 5, 4) == 2
    assert max_kt_edge(14, 5, 3) == 8
    assert max_kt_edge(9, 5, 3) == 5
    for k in range(4, 8):
        for t in range(3, k):
            values = [max_kt_edge(m, k, t) for m in range(60)]
            assert values == sorted(values)


def test_colex():
    assert colex_decompose(7)[1:] == (4, 1)
    assert colex_decompose(10)[1:] == (5, 0)
    assert colex_decompose(1)[1:] == (2, 0)
    assert colex_decompose(0)[1:] == (0, 0)
    for m in range(1, 300):
        _, r, s = colex_decompose(m)
        assert m == binom(r, 2) + s and 0 <= s < r
    assert kk_value(10, 3) == 10 and kk_value(8, 3) == 5 and kk_value(2, 3) == 0
    for m in range(21):
        for t in range(3, 7):
            assert kk_value(m, t) == count_cliques(colex_graph(m), t)


def test_f_t():
    assert f_t_bound(12, 6, 2, 3) == 12
    assert f_t_bound(10, 5, 2, 3) == 8
    assert f_t_bound(6, 6, 2, 3) == 6


def _two_connected(g) -> bool:
    dec = blocks(g)
    return g.n >= 3 and len(dec.blocks) == 1 and len(dec.blocks[0]) == g.n


def test_f_t_against_two_connected_brute_force():
    best = max(
        count_cliques(g, 3)
        for g in enumerate_graphs(6)
        if _two_connected(g) and circumference(g) < 6
    )
    assert best == f_t_bound(6, 6, 2, 3) == 6


def test_split_sequence():
    assert split_sequence(3, [7]) == [3, 3, 1]
    assert split_sequence(4, [11, 3]) == [4, 4, 3, 3]
    assert split_sequence(5, [0]) == [0]
    with pytest.raises(ValueError):
        split_sequence(0, [1])


@given(st.integers(1, 9), st.lists(st.integers(0, 40), max_size=12))
def test_split_sequence_properties(delta, degrees):
    out = split_sequence(delta, degrees)
    assert out == sorted(out, reverse=True)
    assert sum(out) == sum(degrees)
    assert len(out) == sum(d // delta + 1 for d in degrees)
    assert all(0 <= x <= delta for x in out)


def test_majorizes():
    assert majorizes([3, 3, 0], [2, 2, 2])
    assert not majorizes([2, 2, 2], [3, 3, 0])
    assert not majorizes([4, 1], [3, 3])
    with pytest.raises(ValueError):
        majorizes([1, 2], [2, 1])
    with pytest.raises(ValueError):
        majorizes([2], [1, 1])


def test_convexity_examples():
    assert lemma_convexity(4, 0, 2, 2, 2) == (True, True)
    assert lemma_convexity(3, 1, 3, 1, 2) == (True, False)
    assert lemma_convexity(5, 1, 3, 3, 3) == (True, True)
    with pytest.raises(ValueError):
        lemma_convexity(2, 2, 3, 1, 2)


def test_team_identity_examples():
    assert lemma_team_identity(3, 2, 3)
    assert binom(3, 3) + 2 * binom(3, 2) + 3 * binom(2, 2) == binom(5, 3)
    assert lemma_team_identity(4, 4, 3)
    assert lemma_team_identity(0, 5, 3)


def test_team_identity_small_t():
    # the inequality needs t = 0 or t >= 3; t = 1, 2 have easy counterexamples
    assert not lemma_team_identity(1, 1, 1)
    assert not lemma_team_identity(1, 1, 2)


def test_vertex_clique_bound():
    assert vertex_clique_bound(7, 5, 3) == 6
    assert vertex_clique_bound(3, 5, 3) == 3
    assert vertex_clique_bound(0, 6, 4) == 0


def test_query_validation():
    with pytest.raises(ValueError):
        ExtremalQuery("vertex-path", 4, 4, 3)
    with pytest.raises(ValueError):
        ExtremalQuery("vertex-cycle", 4, 3, 0)
    with pytest.raises(ValueError):
        ExtremalQuery("edge-star", 4, 3, 1)
    q = ExtremalQuery("edge-path", 5, 3, 9)
    assert q.is_edge and q.forbids == "path" and q.as_dict()["m"] == 9


def test_luo_dominates_exact_values():
    rng = random.Random(0)
    for _ in range(500):
        k = rng.randint(4, 12)
        t = rng.randint(3, k - 1)
        n = rng.randint(1, 200)
        assert max_kt_vertex("path", n, k, t) <= luo_bound("path", n, k, t)
        assert max_kt_vertex("cycle", n, k, t) <= luo_bound("cycle", n, k, t)
