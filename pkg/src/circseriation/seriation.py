"""The recursive seriation solver, a brute force reference enumerator, and
the arc overlap test behind reversibility."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .core import QTree, SolutionSet, check_dissimilarity, _arc_sequence
from .exceptions import NotStrictPreCircularRobinson, TooSmall
from .nn_partition import NNGraph, _nn_adjacency, arc_partition
from .orientation import (
    AccessCounter,
    border_candidates,
    complete_internal_orientation,
    external_orientation,
    final_orientation,
)
from .robinson import verify_ordering

__all__ = [
    "LevelStats",
    "SeriationStats",
    "SeriationResult",
    "recursive_seriation",
    "brute_force_solutions",
    "strictly_overlaps",
]


@dataclass
class LevelStats:
    """What one round of the solver did.

    ``trees`` counts the trees entering the round, ``comparisons`` the
    orientation verdicts issued, ``accesses`` the matrix entries read, and
    ``parts`` records the leaf tuple of every tree built by the round.
    """

    trees: int
    comparisons: int
    accesses: int
    max_border: int
    parts: list


@dataclass
class SeriationStats:
    n: int
    levels: list = field(default_factory=list)
    total_accesses: int = 0


@dataclass
class SeriationResult:
    tree: QTree
    stats: SeriationStats


def _pairwise_minima(d, border_lists):
    """Matrix of minimum dissimilarities over border candidate pairs."""
    k = len(border_lists)
    sizes = np.array([len(b) for b in border_lists])
    width = int(sizes.max())
    padded = np.empty((k, width), dtype=int)
    for i, borders in enumerate(border_lists):
        padded[i, : len(borders)] = borders
        padded[i, len(borders):] = borders[0]
    flat = padded.reshape(-1)
    block = d[np.ix_(flat, flat)].reshape(k, width, k, width)
    m = block.min(axis=(1, 3))
    reads = (int(sizes.sum()) ** 2 - int((sizes**2).sum())) // 2
    return m, reads


def recursive_seriation(d) -> SeriationResult:
    """Order the objects of a dissimilarity so it becomes strictly circular
    Robinson, while recording which orders stay undetermined.

    Objects start as singleton trees.  Each round exposes the minimizing
    leaves of nearest neighbour pairs, merges the paths and cycles of the
    nearest neighbour graph into new trees, and orients their interiors;
    the last round closes the circle.  The returned tree enumerates every
    ordering the algorithm can vouch for.
    """
    d = check_dissimilarity(d)
    n = d.shape[0]
    if n < 2:
        raise TooSmall("need at least two objects, got %d" % n)
    counter = AccessCounter()
    stats = SeriationStats(n=n)
    trees = [QTree.leaf(i) for i in range(n)]
    singletons = True
    final_tree = None
    while final_tree is None:
        k = len(trees)
        border_lists = [sorted(border_candidates(t)) for t in trees]
        accesses_before = counter.accesses
        verdicts_before = counter.verdicts
        if singletons:
            m = d.copy()
            np.fill_diagonal(m, np.inf)
            counter.accesses += n * (n - 1) // 2
        else:
            m, reads = _pairwise_minima(d, border_lists)
            counter.accesses += reads
        adjacency = _nn_adjacency(m)
        edges = sorted(
            (i, j) for i, nbs in adjacency.items() for j in nbs if i < j
        )
        for i, j in edges:
            bi, bj = border_lists[i], border_lists[j]
            counter.accesses += len(bi) * len(bj)
            if singletons:
                continue
            block = d[np.ix_(bi, bj)]
            rows, cols = np.nonzero(block == m[i, j])
            pairs = {(bi[r], bj[c]) for r, c in zip(rows, cols)}
            if len(pairs) > 4:
                raise NotStrictPreCircularRobinson(
                    "%d pairs attain the minimum between trees %d and %d"
                    % (len(pairs), i, j)
                )
            try:
                external_orientation(trees[i], trees[j], pairs, d)
            except ValueError as exc:
                # A minimizing leaf that cannot be walked to a border means
                # the instance has no strict solution.
                raise NotStrictPreCircularRobinson(str(exc))
        max_border = max(len(border_candidates(t)) for t in trees)
        parts = arc_partition(NNGraph(list(range(k)), adjacency), trees)
        new_trees = []
        try:
            if len(parts) == 1:
                root = QTree.qnode([trees[i] for i in parts[0]])
                final_orientation(root, d, counter)
                new_trees.append(root)
                final_tree = root
            else:
                for part in parts:
                    node = QTree.qnode([trees[i] for i in part])
                    complete_internal_orientation(node, d, counter)
                    new_trees.append(node)
        except ValueError as exc:
            # Orientation runs out of coherent border sets only when the
            # instance has no strict solution.
            raise NotStrictPreCircularRobinson(str(exc))
        stats.levels.append(
            LevelStats(
                trees=k,
                comparisons=counter.verdicts - verdicts_before,
                accesses=counter.accesses - accesses_before,
                max_border=max_border,
                parts=[tuple(t.leaves()) for t in new_trees],
            )
        )
        trees = new_trees
        singletons = False
    ordering = final_tree.leaves()
    counter.accesses += n * n
    if not verify_ordering(d, ordering, strict=True):
        raise NotStrictPreCircularRobinson(
            "the produced ordering is not strictly circular Robinson"
        )
    stats.total_accesses = counter.accesses
    return SeriationResult(final_tree, stats)


def brute_force_solutions(d, max_n: int = 10):
    """Every permutation that conjugates d to a strictly circular Robinson
    matrix, found by exhaustive search.

    Checks the defining triple inequality directly on each wrapped row, so
    it shares no code with the row-shape recognizer.  Intended for small n.
    """
    d = check_dissimilarity(d)
    n = d.shape[0]
    if n > max_n:
        raise ValueError("exhaustive search over %d! permutations refused" % n)
    rows = np.arange(n)
    wrap = (rows[:, None] + rows[None, :]) % n
    triples = np.array(list(itertools.combinations(range(n), 3)), dtype=int)
    triples = triples.reshape(-1, 3)
    found = set()
    chunk_size = 40320
    perms = itertools.permutations(range(n))
    while True:
        chunk = list(itertools.islice(perms, chunk_size))
        if not chunk:
            break
        p = np.array(chunk, dtype=int)
        conj = d[p[:, :, None], p[:, None, :]]
        wrapped = conj[:, rows[:, None], wrap]
        if triples.size:
            mid = wrapped[:, :, triples[:, 1]]
            outer = np.minimum(
                wrapped[:, :, triples[:, 0]], wrapped[:, :, triples[:, 2]]
            )
            ok = (mid > outer).all(axis=2).all(axis=1)
        else:
            ok = np.ones(len(chunk), dtype=bool)
        for row in p[ok]:
            found.add(tuple(int(v) for v in row))
    return SolutionSet(found, False)


def strictly_overlaps(arc_i, arc_j, n: int) -> bool:
    """Whether two arcs cross: each meets the other and each other's
    complement, and their union leaves something out.

    Reversing an arc of a valid circular ordering breaks another arc
    exactly when the two strictly overlap.
    """
    seq_i = _arc_sequence(arc_i, n)
    seq_j = _arc_sequence(arc_j, n)
    if len(seq_i) == n or len(seq_j) == n:
        raise ValueError("arcs must be proper subsets of the cycle")
    inside_i = set(seq_i)
    inside_j = set(seq_j)
    ground = set(range(n))
    return (
        bool(inside_i & inside_j)
        and bool(inside_i - inside_j)
        and bool(inside_j - inside_i)
        and bool(ground - (inside_i | inside_j))
    )
