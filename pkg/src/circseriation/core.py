"""Shared primitives: matrix validation, circular index helpers, ordered
trees with reversible nodes, and solution-set bookkeeping."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "Status",
    "QTree",
    "SolutionSet",
    "check_dissimilarity",
    "cyclically_ordered",
    "reverse_arc",
    "compose_dihedral",
    "enumerate_orderings",
]


def check_dissimilarity(values) -> np.ndarray:
    """Validate and return a dissimilarity matrix as float64.

    Requires a square two dimensional array with finite entries, zero
    diagonal, symmetry, and no negative values.  Comparisons are exact; no
    tolerance is applied.
    """
    d = np.asarray(values, dtype=float)
    if d.ndim != 2 or d.shape[0] != d.shape[1]:
        raise ValueError("dissimilarity must be a square matrix, got shape %s" % (d.shape,))
    if d.size == 0:
        raise ValueError("dissimilarity matrix is empty")
    if not np.isfinite(d).all():
        raise ValueError("dissimilarity entries must be finite")
    if (d < 0).any():
        raise ValueError("dissimilarity entries must be nonnegative")
    if np.diagonal(d).any():
        raise ValueError("dissimilarity diagonal must be zero")
    if not (d == d.T).all():
        raise ValueError("dissimilarity must be symmetric")
    return np.ascontiguousarray(d)


def cyclically_ordered(i: int, j: int, k: int, n: int) -> bool:
    """Whether j lies strictly between i and k when walking clockwise.

    Indices live on the n-cycle 0, 1, ..., n-1, 0.  Equal indices are never
    cyclically ordered.
    """
    for v in (i, j, k):
        if not 0 <= v < n:
            raise ValueError("index %r out of range for n=%d" % (v, n))
    return (i < j < k) or (j < k < i) or (k < i < j)


def _arc_sequence(arc, n: int) -> list[int]:
    """Normalize an arc to the list of its indices in circular order."""
    if isinstance(arc, (set, frozenset)):
        members = set(arc)
        _validate_members(members, n)
        if len(members) == n:
            return list(range(n))
        starts = [v for v in members if (v - 1) % n not in members]
        if len(starts) != 1:
            raise ValueError("%r is not an arc of the %d-cycle" % (sorted(members), n))
        seq = [min(starts)]
        while len(seq) < len(members):
            seq.append((seq[-1] + 1) % n)
        return seq
    seq = [int(v) for v in arc]
    _validate_members(set(seq), n)
    if len(set(seq)) != len(seq):
        raise ValueError("arc indices must be distinct")
    for prev, cur in itertools.pairwise(seq):
        if cur != (prev + 1) % n:
            raise ValueError("%r is not consecutive modulo %d" % (seq, n))
    return seq


def _validate_members(members, n: int) -> None:
    if not members:
        raise ValueError("arc must be nonempty")
    bad = [v for v in members if not 0 <= v < n]
    if bad:
        raise ValueError("arc indices %r out of range for n=%d" % (bad, n))


def reverse_arc(n: int, arc) -> tuple[int, ...]:
    """Permutation of range(n) that reverses the given arc in place.

    The arc may be a sequence of consecutive indices modulo n, or a set
    (then traversed from its unique circular start).  Indices outside the
    arc are fixed.
    """
    seq = _arc_sequence(arc, n)
    perm = list(range(n))
    for pos, idx in zip(seq, reversed(seq)):
        perm[pos] = idx
    return tuple(perm)


class Status(enum.Enum):
    """Orientation state of a tree node.

    FREE nodes have not been examined yet, FIXED nodes are pinned to their
    current child order, and NON_ORIENTABLE nodes stay reversible because
    both orders extend to valid circular orderings.
    """

    FREE = "free"
    FIXED = "fixed"
    NON_ORIENTABLE = "non_orientable"


class QTree:
    """Ordered tree whose leaf sequence, read left to right, is a candidate
    circular ordering.

    Leaves carry an object index.  Internal nodes own an ordered child list
    and an orientation status; reversing a node reverses its child order.
    """

    __slots__ = ("index", "children", "status", "parent")

    def __init__(self, index=None, children=None, status=Status.FIXED):
        self.index = index
        self.children = children
        self.status = status
        self.parent = None

    @classmethod
    def leaf(cls, index: int) -> "QTree":
        return cls(index=int(index), children=None, status=Status.FIXED)

    @classmethod
    def qnode(cls, children, status: Status = Status.FREE) -> "QTree":
        children = list(children)
        if len(children) < 2:
            raise ValueError("an internal node needs at least two children")
        node = cls(index=None, children=children, status=status)
        for child in children:
            child.parent = node
        return node

    @property
    def is_leaf(self) -> bool:
        return self.children is None

    def leaves(self) -> list[int]:
        """Leaf indices in left to right order."""
        out: list[int] = []
        stack = [self]
        while stack:
            node = stack.pop()
            if node.is_leaf:
                out.append(node.index)
            else:
                stack.extend(reversed(node.children))
        return out

    def depth(self) -> int:
        """Length of the longest root-to-leaf path in edges."""
        best = 0
        stack = [(self, 0)]
        while stack:
            node, d = stack.pop()
            if node.is_leaf:
                best = max(best, d)
            else:
                stack.extend((c, d + 1) for c in node.children)
        return best

    def iter_nodes(self):
        """Preorder walk over every node, the receiver included."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            if not node.is_leaf:
                stack.extend(reversed(node.children))

    def reverse(self) -> None:
        if self.is_leaf:
            raise ValueError("cannot reverse a leaf")
        self.children.reverse()

    def splice_into_parent(self) -> None:
        """Replace this node by its children in the parent's child list.

        This pins the node's current child order: once spliced, the order can
        no longer be flipped independently of its former parent.
        """
        parent = self.parent
        if parent is None:
            raise ValueError("node has no parent to splice into")
        if self.is_leaf:
            raise ValueError("cannot splice a leaf")
        pos = next(i for i, c in enumerate(parent.children) if c is self)
        parent.children[pos:pos + 1] = self.children
        for child in self.children:
            child.parent = parent
        self.parent = None

    def to_nested(self):
        """Nested tuples of leaf indices, handy for comparisons in tests."""
        if self.is_leaf:
            return self.index
        return tuple(child.to_nested() for child in self.children)

    def __repr__(self) -> str:
        if self.is_leaf:
            return "QTree.leaf(%d)" % self.index
        return "QTree(%r, status=%s)" % (self.to_nested(), self.status.value)


@dataclass
class SolutionSet:
    """A set of candidate orderings plus a truncation marker.

    ``overflow`` is set when enumeration stopped at the cap, in which case
    ``orderings`` holds only the first ``cap`` distinct sequences found.
    """

    orderings: set = field(default_factory=set)
    overflow: bool = False

    def __len__(self) -> int:
        return len(self.orderings)

    def __iter__(self):
        return iter(self.orderings)

    def __contains__(self, item) -> bool:
        return tuple(item) in self.orderings


def _sequences(node: QTree, cap: int):
    """Yield the leaf sequences reachable by reversing unfixed nodes.

    The fully un-reversed configuration comes first.  Each child pool is cut
    off at cap + 1 entries; once any pool overflows, the total does too, so
    nothing below the cap is lost.
    """
    if node.is_leaf:
        yield (node.index,)
        return
    pools = [
        list(itertools.islice(_sequences(child, cap), cap + 1))
        for child in node.children
    ]
    reversible = node.status is not Status.FIXED
    for combo in itertools.product(*pools):
        yield tuple(itertools.chain.from_iterable(combo))
        if reversible:
            yield tuple(itertools.chain.from_iterable(reversed(combo)))


def enumerate_orderings(tree: QTree, cap: int = 1024) -> SolutionSet:
    """All leaf sequences obtainable by reversing non-fixed nodes.

    The tree's leaves must be exactly 0 .. n-1.  At most ``cap`` distinct
    sequences are returned; if more exist the result is truncated and
    flagged with ``overflow``.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    leaves = tree.leaves()
    if sorted(leaves) != list(range(len(leaves))):
        raise ValueError("tree leaves must be exactly 0..n-1, got %r" % (sorted(leaves),))
    found: set = set()
    overflow = False
    for seq in _sequences(tree, cap):
        if seq in found:
            continue
        if len(found) == cap:
            overflow = True
            break
        found.add(seq)
    return SolutionSet(found, overflow)


def compose_dihedral(s: SolutionSet, n: int) -> SolutionSet:
    """Close a set of orderings under rotation and reflection.

    Rotating or reflecting a sequence relabels the same circular order, so
    the result describes the same solutions with the symmetry made explicit.
    """
    out: set = set()
    for perm in s.orderings:
        if len(perm) != n:
            raise ValueError("ordering %r does not have length %d" % (perm, n))
        forward = tuple(perm)
        backward = forward[::-1]
        for k in range(n):
            out.add(forward[k:] + forward[:k])
            out.add(backward[k:] + backward[:k])
    return SolutionSet(out, s.overflow)
