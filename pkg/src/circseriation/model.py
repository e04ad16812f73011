"""Random points on the unit circle, dissimilarity families built from arc
length, permutation distances, and the shrink-rate experiment."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .core import SolutionSet, check_dissimilarity, compose_dihedral, enumerate_orderings
from .seriation import recursive_seriation

__all__ = [
    "CircleSample",
    "DissimilarityFamily",
    "family",
    "arc_distance",
    "sample_uniform",
    "build_matrix",
    "kendall_tau",
    "quotient_kendall_tau",
    "solution_diameter",
    "RateRow",
    "RateTable",
    "rate_experiment",
]


def arc_distance(s: float, t: float) -> float:
    """Shorter way around the unit circumference circle between two points
    given as fractions of a turn."""
    for v in (s, t):
        if not 0 <= v < 1:
            raise ValueError("circle positions live in [0, 1), got %r" % (v,))
    gap = abs(s - t)
    return min(gap, 1.0 - gap)


@dataclass
class CircleSample:
    """Distinct positions on the circle, as fractions of a turn."""

    points: np.ndarray
    seed: object = None


@dataclass
class DissimilarityFamily:
    """A dissimilarity of the arc distance: d(s, t) = g(arc(s, t)).

    ``ell`` bounds g(u) >= ell * u from below and ``big_l`` is the Lipschitz
    bound from above; both are recorded so experiments can report them.
    """

    kind: str
    transform: object
    ell: float
    big_l: float

    def matrix(self, points: np.ndarray) -> np.ndarray:
        pts = np.asarray(points, dtype=float)
        gaps = np.abs(pts[:, None] - pts[None, :])
        arcs = np.minimum(gaps, 1.0 - gaps)
        out = np.asarray(self.transform(arcs), dtype=float)
        np.fill_diagonal(out, 0.0)
        return out


def _default_warp(u):
    return u + u * u


def family(kind: str, g=None, ell: float = None, big_l: float = None) -> DissimilarityFamily:
    """Registry of the built-in families, with an override hook for warped.

    ``arc`` is the arc distance itself, ``chord`` the straight-line distance
    between the circle points, and ``warped`` applies a strictly increasing
    map g to the arc distance (g(u) = u + u^2 by default).
    """
    if kind == "arc":
        return DissimilarityFamily("arc", lambda u: u, 1.0, 1.0)
    if kind == "chord":
        return DissimilarityFamily(
            "chord", lambda u: 2.0 * np.sin(np.pi * u), 4.0, 2.0 * math.pi
        )
    if kind == "warped":
        if g is None:
            return DissimilarityFamily("warped", _default_warp, 1.0, 1.5)
        if ell is None or big_l is None:
            raise ValueError("a custom warp needs explicit ell and big_l bounds")
        return DissimilarityFamily("warped", g, float(ell), float(big_l))
    raise ValueError("unknown family %r" % kind)


def sample_uniform(n: int, seed=None) -> CircleSample:
    """n independent uniform positions, redrawn until all are distinct."""
    if n < 1:
        raise ValueError("need at least one point")
    rng = np.random.default_rng(seed)
    points = rng.random(n)
    while np.unique(points).size < n:
        points = rng.random(n)
    return CircleSample(points, seed)


def build_matrix(sample, fam: DissimilarityFamily):
    """Dissimilarity matrix of a sample plus the ordering that sorts it.

    Returns (matrix, ground_truth) where ground_truth lists the point
    indices in increasing circle position; conjugating the matrix by it
    gives a strictly circular Robinson matrix whenever g is strictly
    increasing.
    """
    points = np.asarray(getattr(sample, "points", sample), dtype=float)
    if points.ndim != 1 or points.size == 0:
        raise ValueError("expected a nonempty vector of circle positions")
    if np.unique(points).size < points.size:
        raise ValueError("circle positions must be distinct")
    if ((points < 0) | (points >= 1)).any():
        raise ValueError("circle positions live in [0, 1)")
    matrix = check_dissimilarity(fam.matrix(points))
    ground_truth = tuple(int(i) for i in np.argsort(points))
    return matrix, ground_truth


def _count_inversions(a: np.ndarray):
    """Pairs out of order in a, by merge counting.  Returns (count, sorted)."""
    n = a.size
    if n <= 1:
        return 0, a
    mid = n // 2
    left_count, left = _count_inversions(a[:mid])
    right_count, right = _count_inversions(a[mid:])
    cross = int((left.size - np.searchsorted(left, right, side="right")).sum())
    return left_count + right_count + cross, np.sort(np.concatenate([left, right]))


def kendall_tau(p1, p2) -> float:
    """Fraction of object pairs the two orderings rank oppositely."""
    a1 = [int(v) for v in p1]
    a2 = [int(v) for v in p2]
    n = len(a1)
    if len(a2) != n:
        raise ValueError("orderings differ in length: %d vs %d" % (n, len(a2)))
    if sorted(a1) != list(range(n)) or sorted(a2) != list(range(n)):
        raise ValueError("both arguments must be permutations of range(%d)" % n)
    if n < 2:
        return 0.0
    pos2 = np.empty(n, dtype=int)
    pos2[a2] = np.arange(n)
    disagreements, _ = _count_inversions(pos2[a1])
    return disagreements / (n * (n - 1) // 2)


def quotient_kendall_tau(p1, p2) -> float:
    """Kendall distance minimized over rotations and reflections of the
    first ordering, so that relabelings of the same circle count as equal."""
    n = len(tuple(p1))
    orbit = compose_dihedral(SolutionSet({tuple(int(v) for v in p1)}), n)
    return min(kendall_tau(q, p2) for q in orbit.orderings)


def solution_diameter(s: SolutionSet) -> float:
    """Largest quotient Kendall distance between two members of the set."""
    orderings = [tuple(o) for o in s.orderings]
    if not orderings:
        raise ValueError("solution set is empty")
    lengths = {len(o) for o in orderings}
    if len(lengths) != 1:
        raise ValueError("orderings differ in length")
    if len(orderings) == 1:
        return 0.0
    best = 0.0
    for i in range(len(orderings)):
        for j in range(i + 1, len(orderings)):
            best = max(best, quotient_kendall_tau(orderings[i], orderings[j]))
    return best


@dataclass
class RateRow:
    """Aggregates for one sample size.

    ``trials`` counts the trials that entered the aggregates; trials whose
    enumeration overflowed the cap are excluded and tallied separately.
    """

    n: int
    trials: int
    mean_diam: float
    std_diam: float
    norm_stat: float
    mean_eps: float
    excluded: int = 0


@dataclass
class RateTable:
    rows: list = field(default_factory=list)

    HEADER = "n,trials,mean_diam,std_diam,norm_stat,mean_eps"

    def to_csv(self) -> str:
        lines = [self.HEADER]
        for r in self.rows:
            lines.append(
                "%d,%d,%r,%r,%r,%r"
                % (r.n, r.trials, r.mean_diam, r.std_diam, r.norm_stat, r.mean_eps)
            )
        return "\n".join(lines) + "\n"


def _max_gap(sorted_points: np.ndarray) -> float:
    around = 1.0 - (sorted_points[-1] - sorted_points[0])
    if sorted_points.size == 1:
        return 1.0
    return float(max(np.diff(sorted_points).max(), around))


def rate_experiment(
    ns,
    trials: int,
    fam: DissimilarityFamily,
    seed=0,
    enumerate_cap: int = 1024,
) -> RateTable:
    """Measure how fast solution sets shrink as samples grow denser.

    For each size, draws ``trials`` independent samples, solves each, and
    aggregates the solution diameter together with the largest gap between
    consecutive sample points.  Every trial is seeded by (seed, n, trial),
    so single rows can be reproduced in isolation.
    """
    if trials < 1:
        raise ValueError("need at least one trial per size")
    table = RateTable()
    for n in ns:
        diams = []
        gaps = []
        excluded = 0
        for trial in range(trials):
            rng = np.random.default_rng((seed, n, trial))
            points = rng.random(n)
            while np.unique(points).size < n:
                points = rng.random(n)
            matrix, _ = build_matrix(np.sort(points), fam)
            result = recursive_seriation(matrix)
            solutions = enumerate_orderings(result.tree, enumerate_cap)
            if solutions.overflow:
                excluded += 1
                continue
            diams.append(solution_diameter(solutions))
            gaps.append(_max_gap(np.sort(points)))
        used = len(diams)
        if used == 0:
            raise ValueError(
                "every trial at n=%d overflowed the enumeration cap" % n
            )
        mean_diam = float(np.mean(diams))
        std_diam = float(np.std(diams, ddof=1)) if used > 1 else 0.0
        table.rows.append(
            RateRow(
                n=int(n),
                trials=used,
                mean_diam=mean_diam,
                std_diam=std_diam,
                norm_stat=mean_diam * n / math.log(n),
                mean_eps=float(np.mean(gaps)),
                excluded=excluded,
            )
        )
    return table
