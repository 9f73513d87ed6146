from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dimsolve.coloring import BLACK, UNCOLORED, WHITE, Coloring
from dimsolve.graph import Graph, cycle_graph, path_graph, verify_dim
from dimsolve.oracle import oracle_solve
from dimsolve.patterns import sijk_pattern
from dimsolve.reduce import ReductionState
from dimsolve.s222free import S222Instance, complete_live, solve_s222free
from support import graphs


def test_examples():
    k2 = solve_s222free(S222Instance(path_graph(2), Coloring(2)))
    assert k2.matching() == [(0, 1)]
    assert solve_s222free(S222Instance(cycle_graph(4), Coloring(4))) is None
    mid = solve_s222free(S222Instance(path_graph(3), Coloring.from_dict(3, {1: BLACK})))
    assert mid.is_feasible(path_graph(3), complete=True)
    assert mid.color[1] == BLACK


def test_debug_class_check():
    s222 = sijk_pattern(2, 2, 2).as_graph()[0]
    with pytest.raises(ValueError):
        solve_s222free(S222Instance(s222, Coloring(7)), check=True)
    # without the check it is still exact
    assert (solve_s222free(S222Instance(s222, Coloring(7))) is None) == (oracle_solve(s222) is None)


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=12), st.data())
def test_oracle_equivalence_with_partial_colors(g, data):
    fixed = data.draw(st.dictionaries(st.integers(0, g.n - 1), st.sampled_from([BLACK, WHITE]), max_size=3))
    part = Coloring.from_dict(g.n, fixed)
    got = solve_s222free(S222Instance(g, part))
    truth = oracle_solve(g, part)
    assert (got is None) == (truth is None)
    if got is not None:
        assert got.is_feasible(g, complete=True)
        assert verify_dim(g, got.matching())
        for v, c in fixed.items():
            assert got.color[v] == c


def test_within_restricts_completion():
    g = Graph(5, [(0, 1), (2, 3), (3, 4)])
    s = ReductionState.initial(g)
    done = complete_live(s, within=frozenset({0, 1}))
    assert done.col.mate[0] == 1
    assert all(done.col.color[v] == UNCOLORED for v in (2, 3, 4))
    assert s.col.color[0] == UNCOLORED


def test_singleton_components_become_white():
    s = ReductionState.initial(Graph(2))
    done = complete_live(s)
    assert done.col.white() == [0, 1]
