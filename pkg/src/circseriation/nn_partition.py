"""Tree-to-tree dissimilarity, the nearest neighbour graph over trees, and
its decomposition into paths and cycles."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import QTree
from .exceptions import NotStrictInput, NotStrictPreCircularRobinson
from .orientation import border_candidates

__all__ = [
    "TreeDissimilarityResult",
    "NNGraph",
    "tree_dissimilarity",
    "nn_graph",
    "dfs",
    "arc_partition",
]


@dataclass
class TreeDissimilarityResult:
    """Minimum leaf-to-leaf dissimilarity between two trees.

    ``argmin`` holds every pair (x, y) attaining it, with x from the first
    tree and y from the second.
    """

    dmin: float
    argmin: set


@dataclass
class NNGraph:
    """Nearest neighbour graph over tree indices.

    An edge joins i and j when one of them attains the other's minimum
    dissimilarity; ties keep every minimizer.
    """

    vertices: list
    adjacency: dict


def tree_dissimilarity(t1: QTree, t2: QTree, d) -> TreeDissimilarityResult:
    """Minimize d over border candidate pairs of two disjoint trees.

    Only border candidates can attain the true leaf-to-leaf minimum, so the
    scan is restricted to them.  More than four minimizing pairs cannot
    happen for an instance with a strict solution.
    """
    l1, l2 = set(t1.leaves()), set(t2.leaves())
    if l1 & l2:
        raise ValueError("trees share leaves: %r" % sorted(l1 & l2))
    d = np.asarray(d, dtype=float)
    b1 = sorted(border_candidates(t1))
    b2 = sorted(border_candidates(t2))
    block = d[np.ix_(b1, b2)]
    dmin = block.min()
    rows, cols = np.nonzero(block == dmin)
    argmin = {(b1[i], b2[j]) for i, j in zip(rows, cols)}
    if len(argmin) > 4:
        raise NotStrictInput(
            "%d pairs attain the minimum between two trees" % len(argmin)
        )
    return TreeDissimilarityResult(float(dmin), argmin)


def _nn_adjacency(m: np.ndarray) -> dict:
    """Adjacency of the nearest neighbour graph given pairwise minima.

    The diagonal is ignored.  Vertices of degree three or more disqualify
    the instance.
    """
    k = m.shape[0]
    m = m.copy()
    np.fill_diagonal(m, np.inf)
    row_min = m.min(axis=1)
    is_nn = m <= row_min[:, None]
    edges = is_nn | is_nn.T
    degrees = edges.sum(axis=1)
    if (degrees > 2).any():
        worst = int(np.argmax(degrees))
        raise NotStrictPreCircularRobinson(
            "vertex %d has %d nearest neighbours" % (worst, int(degrees[worst]))
        )
    adjacency = {i: set() for i in range(k)}
    for i, j in zip(*np.nonzero(edges)):
        adjacency[int(i)].add(int(j))
    return adjacency


def nn_graph(trees, d) -> NNGraph:
    """Nearest neighbour graph over a family of disjoint trees."""
    trees = list(trees)
    if len(trees) < 2:
        raise ValueError("need at least two trees")
    all_leaves: list = []
    for t in trees:
        all_leaves.extend(t.leaves())
    if len(set(all_leaves)) != len(all_leaves):
        raise ValueError("trees must have pairwise disjoint leaf sets")
    d = np.asarray(d, dtype=float)
    k = len(trees)
    m = np.full((k, k), np.inf)
    for i in range(k):
        for j in range(i + 1, k):
            m[i, j] = m[j, i] = tree_dissimilarity(trees[i], trees[j], d).dmin
    return NNGraph(list(range(k)), _nn_adjacency(m))


def dfs(adjacency, visited, start):
    """Depth-first traversal appending to ``visited``, neighbours ascending.

    ``visited`` is mutated in place and returned.  The start vertex must not
    have been visited already.
    """
    if start in visited:
        raise ValueError("start vertex %r already visited" % (start,))
    seen = set(visited)
    stack = [start]
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        visited.append(v)
        for nb in sorted(adjacency.get(v, ()), reverse=True):
            if nb not in seen:
                stack.append(nb)
    return visited


def arc_partition(d_between, trees=None):
    """Split trees into the paths and cycles of their nearest neighbour
    graph.

    Accepts either a precomputed NNGraph or a square matrix of pairwise
    minimum dissimilarities.  Each component is walked depth first starting
    from its endpoints (cycles from their smallest vertex), and returned as
    a tuple of tree indices.
    """
    if isinstance(d_between, NNGraph):
        adjacency = d_between.adjacency
    else:
        m = np.asarray(d_between, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("expected a square matrix of pairwise minima")
        if trees is not None and len(trees) != m.shape[0]:
            raise ValueError("matrix size does not match the number of trees")
        if m.shape[0] == 1:
            return [(0,)]
        adjacency = _nn_adjacency(m)
    starts = sorted(adjacency, key=lambda v: (len(adjacency[v]) > 1, v))
    taken: set = set()
    parts = []
    for v in starts:
        if v in taken:
            continue
        walk = dfs(adjacency, [], v)
        taken.update(walk)
        parts.append(tuple(walk))
    return parts
