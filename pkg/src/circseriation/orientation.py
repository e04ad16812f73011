"""Border candidates and the orientation passes that pin down child order
inside a tree: single verdicts, internal sweeps, the closing ring pass, and
outward walks that expose minimizing leaves."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .core import QTree, Status

__all__ = [
    "AccessCounter",
    "BorderSets",
    "OrientationVerdict",
    "border_candidates",
    "border_candidates_left",
    "border_candidates_right",
    "border_candidates_orientation",
    "consecutive_orientation",
    "complete_internal_orientation",
    "final_orientation",
    "external_orientation",
]


@dataclass
class AccessCounter:
    """Tallies of matrix entries read and of orientation verdicts issued."""

    accesses: int = 0
    verdicts: int = 0


class OrientationVerdict(enum.Enum):
    CORRECT = "correct"
    REVERSE = "reverse"
    NOT_ORIENTABLE = "not_orientable"


@dataclass(frozen=True)
class BorderSets:
    """Candidate borders for one reversible node and its two neighbours.

    ``a`` and ``b`` candidate the inner borders (left and right side of the
    node under test); ``a_prime`` and ``b_prime`` candidate the adjacent
    outer borders.
    """

    a_prime: frozenset = field()
    a: frozenset = field()
    b: frozenset = field()
    b_prime: frozenset = field()

    def groups(self):
        return (self.a_prime, self.a, self.b, self.b_prime)


def border_candidates(t: QTree) -> set:
    """Leaves that may sit at either end of the node's leaf sequence.

    A leaf candidates itself; an internal node inherits the candidates of
    its first and last child.
    """
    out: set = set()
    stack = [t]
    while stack:
        node = stack.pop()
        if node.is_leaf:
            out.add(node.index)
        else:
            stack.append(node.children[0])
            stack.append(node.children[-1])
    return out


def border_candidates_left(t: QTree) -> set:
    """Candidates for the left end only (the leaf itself when t is a leaf)."""
    return border_candidates(t if t.is_leaf else t.children[0])


def border_candidates_right(t: QTree) -> set:
    """Candidates for the right end only."""
    return border_candidates(t if t.is_leaf else t.children[-1])


def border_candidates_orientation(
    sets: BorderSets,
    d,
    universe=None,
    counter: AccessCounter | None = None,
) -> OrientationVerdict:
    """Decide whether a node's child order matches its neighbours.

    Scans witnesses z in ascending order.  From z, distances to the four
    candidate groups either separate the inner borders from the outer ones
    in the current order (CORRECT), in the flipped order (REVERSE), or never
    (NOT_ORIENTABLE, meaning both orders extend to valid circular
    orderings).
    """
    d = np.asarray(d, dtype=float)
    groups = [np.fromiter(g, dtype=int) for g in sets.groups()]
    if any(g.size == 0 for g in groups):
        raise ValueError("all four border candidate sets must be nonempty")
    seen: set = set()
    for g in sets.groups():
        g = set(g)
        if seen & g:
            raise ValueError("border candidate sets must be pairwise disjoint")
        seen |= g
    if universe is None:
        witnesses = np.arange(d.shape[0])
    else:
        witnesses = np.fromiter(universe, dtype=int)
    a_prime, a, b, b_prime = groups
    if counter is not None:
        counter.accesses += witnesses.size * sum(g.size for g in groups)
        counter.verdicts += 1

    def lo_hi(group):
        block = d[np.ix_(witnesses, group)]
        return block.min(axis=1), block.max(axis=1)

    lo_a, hi_a = lo_hi(a)
    lo_b, hi_b = lo_hi(b)
    lo_ap, hi_ap = lo_hi(a_prime)
    lo_bp, hi_bp = lo_hi(b_prime)
    keeps = (
        (np.maximum(lo_a, lo_ap) < np.minimum(hi_b, hi_bp))
        | (np.maximum(lo_b, lo_bp) < np.minimum(hi_a, hi_ap))
    )
    flips = (
        (np.maximum(lo_a, lo_bp) < np.minimum(hi_ap, hi_b))
        | (np.maximum(lo_b, lo_ap) < np.minimum(hi_bp, hi_a))
    )
    decisive = keeps | flips
    if not decisive.any():
        return OrientationVerdict.NOT_ORIENTABLE
    first = int(np.argmax(decisive))
    return OrientationVerdict.CORRECT if keeps[first] else OrientationVerdict.REVERSE


def consecutive_orientation(
    t1: QTree,
    t2: QTree,
    t3: QTree,
    d,
    counter: AccessCounter | None = None,
) -> OrientationVerdict:
    """Orient t2 against its neighbours t1 and t3 and apply the verdict.

    CORRECT splices t2's children into its parent as they stand and REVERSE
    flips them first.  NOT_ORIENTABLE marks t2 reversible in place; the node
    survives as a unit, so its two end children, which no internal sweep has
    visited yet, are then resolved within t2's own frame with t1 and t3 still
    serving as the outer context.
    """
    if t2.is_leaf:
        raise ValueError("the middle tree must be an internal node")
    if t2.status is not Status.FREE:
        raise ValueError("the middle tree was already oriented")
    sets = BorderSets(
        a_prime=frozenset(border_candidates(t1)),
        a=frozenset(border_candidates_left(t2)),
        b=frozenset(border_candidates_right(t2)),
        b_prime=frozenset(border_candidates(t3)),
    )
    verdict = border_candidates_orientation(sets, d, None, counter)
    if verdict is OrientationVerdict.CORRECT:
        t2.splice_into_parent()
    elif verdict is OrientationVerdict.REVERSE:
        t2.reverse()
        t2.splice_into_parent()
    else:
        t2.status = Status.NON_ORIENTABLE
        _orient_enclosed(t2, t1, t3, d, counter)
    return verdict


def _orient_enclosed(node: QTree, left: QTree, right: QTree, d, counter) -> None:
    """Resolve the end children of a node that stays reversible as a unit.

    Reversing the node flips its child list but not the insides of the
    children, so any structure left at the ends would decouple from the flip
    and the node would enumerate orderings the matrix does not admit.  Each
    end child is therefore oriented against its sibling and the outer
    neighbour on that side; splicing exposes deeper end children, which are
    handled in turn, and a child found genuinely reversible has already had
    its own ends resolved by the recursion.
    """
    while True:
        first = node.children[0]
        if first.is_leaf or first.status is not Status.FREE:
            break
        consecutive_orientation(left, first, node.children[1], d, counter)
    while True:
        last = node.children[-1]
        if last.is_leaf or last.status is not Status.FREE:
            break
        consecutive_orientation(node.children[-2], last, right, d, counter)


def complete_internal_orientation(
    t: QTree,
    d,
    counter: AccessCounter | None = None,
) -> None:
    """Resolve every unexamined node strictly between t's end children.

    Each pass either splices the node (pinning its order relative to the
    root) or marks it non-orientable; afterwards everything between the two
    end children hangs directly off the root.
    """
    if t.is_leaf:
        raise ValueError("expected an internal node")
    i = 1
    while i <= len(t.children) - 2:
        child = t.children[i]
        if child.is_leaf or child.status is not Status.FREE:
            i += 1
            continue
        consecutive_orientation(t.children[i - 1], child, t.children[i + 1], d, counter)


def final_orientation(
    t: QTree,
    d,
    counter: AccessCounter | None = None,
) -> None:
    """Resolve the root's remaining children once the tree spans everything.

    With two children the second one's own children serve as the missing
    neighbours; with more, neighbours wrap around the child list.  The root
    itself ends up fixed: flipping it only reflects the full circle.
    """
    if t.is_leaf:
        raise ValueError("expected an internal node")
    if len(t.children) == 2:
        first, second = t.children
        if not first.is_leaf and first.status is Status.FREE:
            if second.is_leaf:
                # A lone outside leaf cannot break the tie; either order is
                # a reflection of the other.  Splicing hands the big child's
                # own end children to the ring pass below.
                first.status = Status.FIXED
                first.splice_into_parent()
            else:
                consecutive_orientation(
                    second.children[-1], first, second.children[0], d, counter
                )
        if not second.is_leaf and second.status is Status.FREE:
            # Once the relative orientation is settled, flipping this child as
            # well only reflects the circle, so it can be pinned outright.
            second.splice_into_parent()
    while len(t.children) > 2:
        children = t.children
        k = len(children)
        target = next(
            (
                i
                for i, c in enumerate(children)
                if not c.is_leaf and c.status is Status.FREE
            ),
            None,
        )
        if target is None:
            break
        consecutive_orientation(
            children[(target - 1) % k],
            children[target],
            children[(target + 1) % k],
            d,
            counter,
        )
    for node in t.iter_nodes():
        if node is not t and not node.is_leaf and node.status is Status.FREE:
            # Every node is examined somewhere: internal sweeps cover middles,
            # the ring covers the root's children, and reversible nodes have
            # their ends resolved on the spot.  A leftover means the input
            # admitted no consistent circle.
            raise ValueError("an unexamined node survived the final pass")
    t.status = Status.FIXED


def external_orientation(t: QTree, t_other: QTree, argmin, d) -> None:
    """Pin the minimizing leaves of two trees to their facing ends.

    For every pair (x, y) attaining the tree dissimilarity, walk down the
    end spine of each tree toward the leaf, reversing any node that carries
    it on the wrong side, and splice the nodes passed on the way.
    """
    del d  # the walks are purely structural
    for x, y in sorted(tuple(p) for p in argmin):
        _walk_to_border(t, int(x))
        _walk_to_border(t_other, int(y))


def _walk_to_border(tree: QTree, x: int) -> None:
    if tree.is_leaf:
        if tree.index != x:
            raise ValueError("leaf %d does not contain %d" % (tree.index, x))
        return
    if x in border_candidates_left(tree):
        side = 0
    elif x in border_candidates_right(tree):
        side = -1
    else:
        raise ValueError("%d is not a border candidate of the tree" % x)
    node = tree.children[side]
    while not node.is_leaf:
        on_near = x in border_candidates(node.children[side])
        if not on_near:
            if x not in border_candidates(node.children[-1 - side]):
                raise ValueError("%d lost while walking the spine" % x)
            node.reverse()
        node.splice_into_parent()
        node = tree.children[side]
    if node.index != x:
        raise ValueError("spine walk ended at %d instead of %d" % (node.index, x))
