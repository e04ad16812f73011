"""Strict circular seriation: recognize circular Robinson structure and
recover every ordering compatible with a dissimilarity matrix."""

from .core import (
    QTree,
    SolutionSet,
    Status,
    check_dissimilarity,
    compose_dihedral,
    cyclically_ordered,
    enumerate_orderings,
    reverse_arc,
)
from .estimator import CircularSeriation
from .exceptions import NotStrictInput, NotStrictPreCircularRobinson, TooSmall
from .model import (
    CircleSample,
    DissimilarityFamily,
    RateRow,
    RateTable,
    arc_distance,
    build_matrix,
    family,
    kendall_tau,
    quotient_kendall_tau,
    rate_experiment,
    sample_uniform,
    solution_diameter,
)
from .nn_partition import (
    NNGraph,
    TreeDissimilarityResult,
    arc_partition,
    dfs,
    nn_graph,
    tree_dissimilarity,
)
from .orientation import (
    AccessCounter,
    BorderSets,
    OrientationVerdict,
    border_candidates,
    border_candidates_left,
    border_candidates_orientation,
    border_candidates_right,
    complete_internal_orientation,
    consecutive_orientation,
    external_orientation,
    final_orientation,
)
from .robinson import (
    UnimodalReport,
    is_circular_robinson,
    is_linear_robinson,
    is_unimodal,
    verify_ordering,
)
from .seriation import (
    LevelStats,
    SeriationResult,
    SeriationStats,
    brute_force_solutions,
    recursive_seriation,
    strictly_overlaps,
)

__version__ = "0.1.0"

__all__ = [
    "AccessCounter",
    "BorderSets",
    "CircleSample",
    "CircularSeriation",
    "DissimilarityFamily",
    "LevelStats",
    "NNGraph",
    "NotStrictInput",
    "NotStrictPreCircularRobinson",
    "OrientationVerdict",
    "QTree",
    "RateRow",
    "RateTable",
    "SeriationResult",
    "SeriationStats",
    "SolutionSet",
    "Status",
    "TooSmall",
    "TreeDissimilarityResult",
    "UnimodalReport",
    "arc_distance",
    "arc_partition",
    "border_candidates",
    "border_candidates_left",
    "border_candidates_orientation",
    "border_candidates_right",
    "brute_force_solutions",
    "build_matrix",
    "check_dissimilarity",
    "complete_internal_orientation",
    "compose_dihedral",
    "consecutive_orientation",
    "cyclically_ordered",
    "dfs",
    "enumerate_orderings",
    "external_orientation",
    "family",
    "final_orientation",
    "is_circular_robinson",
    "is_linear_robinson",
    "is_unimodal",
    "kendall_tau",
    "nn_graph",
    "quotient_kendall_tau",
    "rate_experiment",
    "recursive_seriation",
    "reverse_arc",
    "sample_uniform",
    "solution_diameter",
    "strictly_overlaps",
    "tree_dissimilarity",
    "verify_ordering",
]
