"""scikit-learn style wrapper around :func:`dimsolve.solve`.

The input of ``fit`` is a square 0/1 adjacency matrix, not a sample matrix:
one fit is one graph, and there is nothing to ``predict`` on unseen data.
``fit_predict`` returns the per-vertex labels of the fitted graph.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator

from .graph import Graph
from .ysolver import solve


def validate_adjacency(A) -> Graph:
    """Graph from a symmetric 0/1 matrix with zero diagonal.

    Anything with a ``toarray`` method (sparse matrices) is densified first.
    """
    if hasattr(A, "toarray"):
        A = A.toarray()
    A = np.asarray(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"adjacency matrix must be square, got shape {A.shape}")
    if A.size and not np.isin(A, (0, 1)).all():
        raise ValueError("adjacency matrix entries must be 0 or 1")
    if not np.array_equal(A, A.T):
        raise ValueError("adjacency matrix must be symmetric")
    if np.any(np.diag(A)):
        raise ValueError("adjacency matrix must have a zero diagonal (no self-loops)")
    us, vs = np.nonzero(np.triu(A, 1))
    return Graph(A.shape[0], zip(us.tolist(), vs.tolist()))


class DimEstimator(BaseEstimator):
    """Find a dominating induced matching of the graph given by ``X``.

    After ``fit``: ``has_dim_`` (bool), ``matching_`` (``(k, 2)`` int array,
    empty when there is none) and ``labels_`` (index of the matching edge
    covering each vertex, ``-1`` for unmatched vertices).
    """

    def __init__(self, allow_out_of_class: bool = False):
        self.allow_out_of_class = allow_out_of_class

    def fit(self, X, y=None):
        g = validate_adjacency(X)
        res = solve(g, allow_out_of_class=self.allow_out_of_class)
        self.n_features_in_ = g.n
        self.has_dim_ = res.has_dim
        edges = sorted(res.matching or [])
        self.matching_ = np.array(edges, dtype=int).reshape(-1, 2)
        labels = np.full(g.n, -1, dtype=int)
        for i, (u, v) in enumerate(edges):
            labels[u] = labels[v] = i
        self.labels_ = labels
        self.stage_ = res.stage
        return self

    def fit_predict(self, X, y=None):
        return self.fit(X).labels_
