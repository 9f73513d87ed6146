from __future__ import annotations

import numpy as np
import pytest
from sklearn.base import clone

from dimsolve import DimEstimator, validate_adjacency
from dimsolve.graph import verify_dim


def adjacency(n, edges):
    A = np.zeros((n, n), dtype=int)
    for u, v in edges:
        A[u, v] = A[v, u] = 1
    return A


def test_fit_path():
    A = adjacency(7, [(i, i + 1) for i in range(6)])
    est = DimEstimator().fit(A)
    assert est.has_dim_ and est.matching_.tolist() == [[1, 2], [4, 5]]
    assert est.labels_.tolist() == [-1, 0, 0, -1, 1, 1, -1]
    assert est.n_features_in_ == 7
    assert est.fit_predict(A).tolist() == est.labels_.tolist()


def test_fit_no_dim():
    est = DimEstimator().fit(adjacency(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))
    assert not est.has_dim_ and est.matching_.shape == (0, 2)
    assert (est.labels_ == -1).all()


def test_params_and_clone():
    est = DimEstimator(allow_out_of_class=True)
    assert est.get_params() == {"allow_out_of_class": True}
    assert clone(est).allow_out_of_class


def test_validate_adjacency():
    g = validate_adjacency(adjacency(3, [(0, 1), (1, 2)]))
    assert verify_dim(g, [(0, 1)])
    with pytest.raises(ValueError, match="square"):
        validate_adjacency(np.zeros((2, 3)))
    with pytest.raises(ValueError, match="symmetric"):
        validate_adjacency(np.array([[0, 1], [0, 0]]))
    with pytest.raises(ValueError, match="diagonal"):
        validate_adjacency(np.array([[1, 0], [0, 0]]))
    with pytest.raises(ValueError, match="0 or 1"):
        validate_adjacency(np.array([[0, 2], [2, 0]]))
    assert validate_adjacency(np.zeros((0, 0))).n == 0

    class Sparse:
        def toarray(self):
            return adjacency(2, [(0, 1)])

    assert validate_adjacency(Sparse()).m == 1
