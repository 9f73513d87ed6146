from __future__ import annotations

from itertools import chain, combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dimsolve.coloring import BLACK, WHITE, Coloring
from dimsolve.graph import Graph, cycle_graph, path_graph, verify_dim
from dimsolve.oracle import OracleLimit, OracleTooLarge, enumerate_all_dims, has_dim, oracle_solve
from support import graphs


def test_examples():
    assert sorted(enumerate_all_dims(path_graph(3))) == [[(0, 1)], [(1, 2)]]
    assert enumerate_all_dims(cycle_graph(4)) == []
    assert sorted(enumerate_all_dims(cycle_graph(3))) == [[(0, 1)], [(0, 2)], [(1, 2)]]
    assert enumerate_all_dims(path_graph(7)) == [[(1, 2), (4, 5)]]
    assert oracle_solve(Graph(1)) == []


def test_partial_colorings():
    p3 = path_graph(3)
    assert oracle_solve(p3, Coloring.from_dict(3, {0: BLACK})) == [(0, 1)]
    assert oracle_solve(p3, Coloring.from_dict(3, {1: WHITE})) is None
    pinned = Coloring.from_dict(3, {1: BLACK, 2: BLACK})
    pinned.mate[1], pinned.mate[2] = 2, 1
    assert oracle_solve(p3, pinned) == [(1, 2)]
    assert has_dim(p3) and not has_dim(cycle_graph(4))


def test_limits():
    with pytest.raises(OracleTooLarge):
        enumerate_all_dims(path_graph(21))
    assert len(enumerate_all_dims(path_graph(12), OracleLimit(max_dims=1))) == 1
    assert oracle_solve(path_graph(25), lim=OracleLimit(max_n=30)) is not None


def _all_edge_subsets(g):
    es = g.edge_list()
    return chain.from_iterable(combinations(es, k) for k in range(len(es) + 1))


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=7, max_p=0.5))
def test_matches_edge_subset_enumeration(g):
    if g.m > 12:
        return
    truth = sorted(sorted(m) for m in _all_edge_subsets(g) if verify_dim(g, m))
    assert sorted(enumerate_all_dims(g)) == truth


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=9), st.randoms(use_true_random=False))
def test_relabeling_permutes_output(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    moved = sorted(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in m) for m in enumerate_all_dims(g))
    assert moved == sorted(enumerate_all_dims(h))
