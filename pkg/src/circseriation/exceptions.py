"""Typed errors raised by the seriation pipeline."""


class NotStrictInput(ValueError):
    """The dissimilarity ties in a way a strict instance never does.

    Raised when more than four leaf pairs attain a tree-to-tree minimum.
    """


class NotStrictPreCircularRobinson(NotStrictInput):
    """No permutation can make the input strictly circular Robinson.

    Raised when a nearest-neighbour vertex exceeds degree two, when minimizer
    ties exceed the strict bound mid-run, or when the final verification of
    the produced ordering fails.
    """


class TooSmall(ValueError):
    """The matrix has fewer than two objects; there is nothing to order."""
