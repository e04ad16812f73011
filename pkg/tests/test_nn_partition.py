"""Tree dissimilarity, nearest neighbour graphs, and arc partitions."""

import numpy as np
import pytest

from circseriation import (
    NNGraph,
    NotStrictInput,
    NotStrictPreCircularRobinson,
    QTree,
    arc_partition,
    dfs,
    nn_graph,
    tree_dissimilarity,
)

from oracles import arc_metric_matrix


def _tree(obj):
    if isinstance(obj, int):
        return QTree.leaf(obj)
    return QTree.qnode([_tree(c) for c in obj])


def _edges(graph):
    return sorted(
        (i, j) for i, nbs in graph.adjacency.items() for j in nbs if i < j
    )


def test_tree_dissimilarity_five_points():
    d = arc_metric_matrix(np.linspace(0, 1, 5, endpoint=False))
    r = tree_dissimilarity(_tree((0, 1)), _tree((2, 3)), d)
    assert r.dmin == d[1, 2]
    assert r.argmin == {(1, 2)}


def test_tree_dissimilarity_with_leaf():
    d = arc_metric_matrix(np.linspace(0, 1, 6, endpoint=False))
    r = tree_dissimilarity(_tree((0, 1)), _tree(3), d)
    assert r.dmin == d[1, 3]
    assert r.argmin == {(1, 3)}


def test_tree_dissimilarity_restricts_to_borders():
    # leaf 1 is buried in the middle of a fixed tree, so the pair (1, 3)
    # is ignored even though it attains the smallest raw entry
    d = np.array(
        [
            [0.0, 1.0, 1.0, 9.0],
            [1.0, 0.0, 1.0, 0.5],
            [1.0, 1.0, 0.0, 9.0],
            [9.0, 0.5, 9.0, 0.0],
        ]
    )
    r = tree_dissimilarity(_tree((0, 1, 2)), _tree(3), d)
    assert r.dmin == 9.0
    assert r.argmin == {(0, 3), (2, 3)}


def test_tree_dissimilarity_rejects_overlap():
    d = np.zeros((4, 4))
    with pytest.raises(ValueError):
        tree_dissimilarity(_tree((0, 1)), _tree((1, 2)), d)


def test_tree_dissimilarity_tie_explosion():
    d = np.ones((10, 10)) - np.eye(10)
    t1 = _tree(((0, 1), 2, (3, 4)))
    t2 = _tree(((5, 6), 7, (8, 9)))
    with pytest.raises(NotStrictInput):
        tree_dissimilarity(t1, t2, d)


def test_tree_dissimilarity_argmin_within_borders():
    rng = np.random.default_rng(5)
    sym = rng.random((8, 8))
    d = (sym + sym.T) / 2
    np.fill_diagonal(d, 0)
    t1 = _tree(((0, 1), (2, 3)))
    t2 = _tree((4, (5, 6), 7))
    r = tree_dissimilarity(t1, t2, d)
    assert all(x in {0, 1, 2, 3} and y in {4, 7} for x, y in r.argmin)


def test_nn_graph_three_points():
    d = arc_metric_matrix([0.0, 0.1, 0.5])
    g = nn_graph([QTree.leaf(i) for i in range(3)], d)
    assert _edges(g) == [(0, 1), (1, 2)]


def test_nn_graph_four_equally_spaced():
    d = arc_metric_matrix([0.0, 0.25, 0.5, 0.75])
    g = nn_graph([QTree.leaf(i) for i in range(4)], d)
    assert _edges(g) == [(0, 1), (0, 3), (1, 2), (2, 3)]


def test_nn_graph_two_trees_single_edge():
    d = arc_metric_matrix([0.0, 0.1, 0.5, 0.6])
    g = nn_graph([_tree((0, 1)), _tree((2, 3))], d)
    assert _edges(g) == [(0, 1)]


def test_nn_graph_degree_cap():
    # a hub at distance 1 from three spokes that sit at distance 2 from
    # each other gives the hub three nearest neighbours
    d = np.full((4, 4), 2.0)
    d[0, :] = d[:, 0] = 1.0
    np.fill_diagonal(d, 0)
    with pytest.raises(NotStrictPreCircularRobinson):
        nn_graph([QTree.leaf(i) for i in range(4)], d)


def test_nn_graph_needs_two_trees():
    with pytest.raises(ValueError):
        nn_graph([QTree.leaf(0)], np.zeros((1, 1)))


def test_nn_graph_rejects_shared_leaves():
    d = np.ones((4, 4)) - np.eye(4)
    with pytest.raises(ValueError):
        nn_graph([_tree((0, 1)), _tree((1, 2))], d)


def test_dfs_path():
    adjacency = {0: {1}, 1: {0, 2}, 2: {1}}
    assert dfs(adjacency, [], 0) == [0, 1, 2]
    assert dfs(adjacency, [], 2) == [2, 1, 0]


def test_dfs_cycle_prefers_ascending():
    adjacency = {0: {1, 3}, 1: {0, 2}, 2: {1, 3}, 3: {2, 0}}
    assert dfs(adjacency, [], 0) == [0, 1, 2, 3]


def test_dfs_extends_visited_in_place():
    adjacency = {0: {1}, 1: {0}, 2: set()}
    visited = [2]
    out = dfs(adjacency, visited, 0)
    assert out is visited
    assert out == [2, 0, 1]


def test_dfs_rejects_visited_start():
    with pytest.raises(ValueError):
        dfs({0: set()}, [0], 0)


def test_arc_partition_full_cycle():
    d = arc_metric_matrix([0.0, 0.25, 0.5, 0.75])
    trees = [QTree.leaf(i) for i in range(4)]
    parts = arc_partition(nn_graph(trees, d), trees)
    assert parts == [(0, 1, 2, 3)]


def test_arc_partition_two_edges():
    d = arc_metric_matrix([0.0, 0.05, 0.5, 0.55])
    trees = [QTree.leaf(i) for i in range(4)]
    parts = arc_partition(nn_graph(trees, d), trees)
    assert parts == [(0, 1), (2, 3)]


def test_arc_partition_path_from_matrix():
    m = np.array(
        [
            [np.inf, 1.0, 3.0],
            [1.0, np.inf, 2.0],
            [3.0, 2.0, np.inf],
        ]
    )
    np.fill_diagonal(m, 0)
    assert arc_partition(m) == [(0, 1, 2)]


def test_arc_partition_matrix_size_mismatch():
    with pytest.raises(ValueError):
        arc_partition(np.zeros((2, 2)), [QTree.leaf(i) for i in range(3)])


def test_arc_partition_isolated_vertex_via_graph():
    graph = NNGraph([0, 1, 2, 3], {0: {1}, 1: {0, 2}, 2: {1}, 3: set()})
    assert arc_partition(graph) == [(0, 1, 2), (3,)]
