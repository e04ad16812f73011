"""Scikit-learn style wrapper around the solver."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .core import check_dissimilarity, enumerate_orderings
from .seriation import recursive_seriation

__all__ = ["CircularSeriation"]


class CircularSeriation(TransformerMixin, BaseEstimator):
    """Reorder objects so their dissimilarity becomes circular Robinson.

    fit expects a square dissimilarity matrix.  After fitting,
    ``ordering_`` holds one valid object order, ``tree_`` the full structure
    of every valid order, and ``orderings_`` their enumeration (possibly
    truncated at ``enumerate_max``).

    Parameters
    ----------
    enumerate_max : int, default=1024
        Cap on how many distinct orderings to enumerate from the fitted
        tree.

    Examples
    --------
    >>> import numpy as np
    >>> from circseriation import CircularSeriation
    >>> theta = np.array([0.0, 0.5, 0.25, 0.75])
    >>> gaps = np.abs(theta[:, None] - theta[None, :])
    >>> d = np.minimum(gaps, 1 - gaps)
    >>> CircularSeriation().fit(d).ordering_
    array([0, 2, 1, 3])
    """

    def __init__(self, enumerate_max: int = 1024):
        self.enumerate_max = enumerate_max

    def fit(self, X, y=None):
        """Run the solver on a dissimilarity matrix."""
        X = check_dissimilarity(np.asarray(X, dtype=float))
        result = recursive_seriation(X)
        self.n_features_in_ = X.shape[0]
        self.tree_ = result.tree
        self.stats_ = result.stats
        self.ordering_ = np.asarray(result.tree.leaves(), dtype=int)
        self.orderings_ = enumerate_orderings(result.tree, self.enumerate_max)
        return self

    def transform(self, X):
        """Conjugate a matrix by the fitted ordering."""
        check_is_fitted(self, "ordering_")
        X = np.asarray(X, dtype=float)
        n = self.n_features_in_
        if X.shape != (n, n):
            raise ValueError(
                "expected a %d x %d matrix, got %r" % (n, n, (X.shape,))
            )
        order = self.ordering_
        return X[np.ix_(order, order)]
