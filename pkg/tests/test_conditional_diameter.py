"""Set distance, far graphs, balanced biclique search, and the exact
conditional diameter solver vs the subset-pair oracle."""

import random

import pytest

from condiam.conditional_diameter import (
    balanced_biclique_at_least,
    condiam_upper_bound,
    conditional_diameter,
    far_graph,
    naive_conditional_diameter,
    set_distance,
)
from condiam.families import cycle_graph, path_graph, tree_single
from condiam.graph import Graph, build_graph
from condiam.invariants import diameter
from condiam.transforms import random_connected_graph

from oracles import oracle_condiam


def test_set_distance_examples():
    p6 = path_graph(6)
    assert set_distance(p6, {0}, {5}) == 5
    assert set_distance(p6, {0, 1}, {4, 5}) == 3
    assert set_distance(p6, {0, 1}, {1, 4}) == 0
    with pytest.raises(ValueError):
        set_distance(p6, set(), {1})
    with pytest.raises(ValueError):
        set_distance(p6, {0}, {9})
    with pytest.raises(ValueError):
        set_distance(Graph(3), {0}, {1})


def test_far_graph_examples():
    p6 = path_graph(6)
    assert far_graph(p6, 1).m == 15  # all pairs at distance >= 1
    assert far_graph(p6, diameter(p6) + 1).m == 0
    assert sorted(far_graph(path_graph(4), 3).edges()) == [(0, 3)]
    assert sorted(far_graph(cycle_graph(6), 3).edges()) == [(0, 3), (1, 4), (2, 5)]
    with pytest.raises(ValueError):
        far_graph(p6, 0)
    with pytest.raises(ValueError):
        far_graph(Graph(3), 1)


def test_balanced_biclique_examples():
    star = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    w = balanced_biclique_at_least(star, 1)
    assert w is not None and w.v1 == (0,) and w.v2 == (1,) and w.value == 1
    assert balanced_biclique_at_least(build_graph(2, [(0, 1)]), 2) is None
    matching = far_graph(cycle_graph(6), 3)
    assert balanced_biclique_at_least(matching, 2) is None
    with pytest.raises(ValueError):
        balanced_biclique_at_least(star, 0)


def test_balanced_biclique_witness_is_lexicographically_least():
    # complete bipartite K_{3,3}: least witness must be ({0,1,2},{3,4,5})
    k33 = Graph(6, [(u, v) for u in range(3) for v in range(3, 6)])
    w = balanced_biclique_at_least(k33, 3)
    assert w.v1 == (0, 1, 2) and w.v2 == (3, 4, 5)
    # every cross pair adjacent
    for x in w.v1:
        for y in w.v2:
            assert k33.has_edge(x, y)


def test_balanced_biclique_finds_cross_structure_only():
    # two s-sets need every cross pair adjacent, no within-side edges needed
    g = Graph(6, [(0, 3), (0, 4), (1, 3), (1, 4), (2, 5)])
    w = balanced_biclique_at_least(g, 2)
    assert w is not None
    assert w.v1 == (0, 1) and w.v2 == (3, 4)
    assert balanced_biclique_at_least(g, 3) is None


def test_condiam_upper_bound():
    assert condiam_upper_bound(6, 2) == 3
    assert condiam_upper_bound(8, 4) == 1
    assert condiam_upper_bound(3, 2) == 0
    with pytest.raises(ValueError):
        condiam_upper_bound(5, 0)


def test_conditional_diameter_examples():
    assert conditional_diameter(path_graph(6), 2)[0] == 3
    assert conditional_diameter(path_graph(3), 2) == (0, None)
    assert conditional_diameter(tree_single(7, 3), 2)[0] == 3
    g = cycle_graph(7)
    assert conditional_diameter(g, 1)[0] == diameter(g)
    with pytest.raises(ValueError):
        conditional_diameter(Graph(4), 2)
    with pytest.raises(ValueError):
        conditional_diameter(path_graph(4), 0)


def test_witness_achieves_reported_value():
    rng = random.Random(20)
    for _ in range(60):
        g = random_connected_graph(rng, rng.randint(2, 11), rng.randint(0, 6))
        for s in (1, 2, 3):
            value, witness = conditional_diameter(g, s)
            if witness is None:
                assert value == 0 and g.n < 2 * s
                continue
            assert len(witness.v1) == len(witness.v2) == s
            assert set_distance(g, witness.v1, witness.v2) == value
            if value >= 1:
                assert not set(witness.v1) & set(witness.v2)


def test_path_conditional_diameter_closed_form():
    for n in range(2, 41):
        p = path_graph(n)
        for s in range(1, n // 2 + 1):
            assert conditional_diameter(p, s)[0] == n - 2 * s + 1


def test_exact_equals_naive_on_trees(trees_by_n):
    for n in range(2, 11):
        for tree in trees_by_n(n):
            for s in (1, 2, 3):
                assert conditional_diameter(tree, s)[0] == naive_conditional_diameter(tree, s)


def test_exact_equals_oracle_on_random_graphs():
    rng = random.Random(21)
    for _ in range(80):
        g = random_connected_graph(rng, rng.randint(2, 10), rng.randint(0, 8))
        for s in (1, 2, 3):
            assert conditional_diameter(g, s)[0] == oracle_condiam(g, s)


def test_bound_holds_everywhere():
    rng = random.Random(22)
    for _ in range(100):
        g = random_connected_graph(rng, rng.randint(2, 12), rng.randint(0, 10))
        for s in (1, 2, 3):
            assert conditional_diameter(g, s)[0] <= condiam_upper_bound(g.n, s)


def test_degenerate_n_equals_2s():
    # only complementary subsets are candidates; same search path handles it
    rng = random.Random(23)
    for s in (1, 2, 3):
        for _ in range(10):
            g = random_connected_graph(rng, 2 * s, rng.randint(0, 3))
            value, witness = conditional_diameter(g, s)
            assert value >= 1 and witness is not None
            assert value == naive_conditional_diameter(g, s)
