from __future__ import annotations

from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dimsolve.graph import Graph, cycle_graph, path_graph
from dimsolve.patterns import (
    CATALOG,
    check_embedding,
    find_external_triangle,
    find_induced,
    find_peripheral_triangle,
    get_pattern,
    is_c4_edge,
    is_peripheral_triangle,
    is_sijk_free,
    iter_induced,
    iter_triangles,
    sijk_pattern,
)
from support import exhaustive_induced, graphs, named

SHAPES = {
    "K4": (4, 6),
    "Diamond": (4, 5),
    "Butterfly": (5, 6),
    "Paw": (4, 4),
    "C4": (4, 4),
    "C5": (5, 5),
    "Gem": (5, 7),
    "G1": (9, 11),
    "G2": (8, 10),
    "G3": (7, 9),
    "S222": (7, 6),
    "S223": (8, 7),
}


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_catalog_shapes(name):
    pg, _ = CATALOG[name].as_graph()
    assert (pg.n, pg.m) == SHAPES[name]
    assert nx.is_connected(nx.Graph(list(pg.edges)))
    # the pattern is found in itself, with a valid role map
    emb = find_induced(pg, CATALOG[name])
    assert emb is not None and check_embedding(pg, CATALOG[name], emb)


def test_specific_roles():
    d = CATALOG["Diamond"]
    assert d.degree("u") == 3 and d.degree("v2") == 3 and d.degree("v1") == 2
    paw = CATALOG["Paw"]
    assert paw.degree("a") == 1 and paw.degree("b") == 3
    assert sorted(CATALOG["Butterfly"].degree(r) for r in CATALOG["Butterfly"].roles) == [2, 2, 2, 2, 4]


def test_canonical_graphs():
    assert find_induced(named("K4"), "K4") is not None
    assert find_induced(named("gem"), "Gem") is not None
    assert find_induced(named("butterfly"), "Butterfly") is not None
    assert find_induced(cycle_graph(5), "C4") is None
    assert find_induced(cycle_graph(4), "C4") is not None
    # a K4 contains no induced C4 or paw
    assert find_induced(named("K4"), "Paw") is None


def test_sijk_free():
    s223 = sijk_pattern(2, 2, 3).as_graph()[0]
    assert not is_sijk_free(s223, 2, 2, 3)
    assert is_sijk_free(path_graph(20), 1, 1, 1)
    assert not is_sijk_free(Graph(4, [(0, 1), (0, 2), (0, 3)]), 1, 1, 1)
    assert is_sijk_free(sijk_pattern(2, 2, 2).as_graph()[0], 2, 2, 3)
    for bad in ((0, 1, 1), (2, 1, 3), (1, 2, 4)):
        with pytest.raises(ValueError):
            is_sijk_free(s223, *bad)


def test_get_pattern_names():
    assert get_pattern("diamond") is CATALOG["Diamond"]
    assert get_pattern("S322").name == "S223"
    assert get_pattern("s111").size == 4
    with pytest.raises(ValueError):
        get_pattern("S444")
    with pytest.raises(ValueError):
        get_pattern("hexagon")


def test_within_restriction():
    g = cycle_graph(5)
    assert find_induced(g, "C5", within=range(5)) is not None
    assert find_induced(g, "C5", within=range(4)) is None
    assert find_induced(path_graph(6), sijk_pattern(1, 1, 1)) is None


def test_iter_induced_counts_automorphic_copies():
    # C4 has 8 automorphisms
    assert len(list(iter_induced(cycle_graph(4), CATALOG["C4"]))) == 8


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7), st.sampled_from(sorted(CATALOG)))
def test_find_induced_matches_exhaustive(g, name):
    p = CATALOG[name]
    emb = find_induced(g, p)
    assert (emb is not None) == exhaustive_induced(g, p)
    if emb is not None:
        assert check_embedding(g, p, emb)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8))
def test_find_induced_matches_networkx(g):
    ng = nx.Graph()
    ng.add_nodes_from(range(g.n))
    ng.add_edges_from(g.edges)
    for name in ("Paw", "C4", "Diamond", "S222"):
        pg, _ = CATALOG[name].as_graph()
        gm = nx.algorithms.isomorphism.GraphMatcher(ng, nx.Graph(list(pg.edges)))
        assert (find_induced(g, name) is not None) == gm.subgraph_is_isomorphic()


def test_peripheral_triangles():
    # apex 0 with pendant path 0-3-4; triangle 0 1 2
    g = Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (3, 4)])
    assert find_peripheral_triangle(g) == (0, 1, 2)
    assert is_peripheral_triangle(g, (0, 1, 2))
    assert not is_peripheral_triangle(g, (1, 0, 2))
    assert find_peripheral_triangle(g, touching=[4]) is None
    assert find_peripheral_triangle(g, touching=[1]) == (0, 1, 2)
    # the apex's third neighbour alone does not make the triangle touch it
    assert find_peripheral_triangle(g, touching=[3]) is None
    assert find_peripheral_triangle(cycle_graph(3)) is None
    # restricting away vertex 4 leaves the triangle peripheral
    assert find_peripheral_triangle(g, within=[0, 1, 2, 3]) == (0, 1, 2)


def test_external_triangle_and_c4_edges():
    g = Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
    assert find_external_triangle(g, 0) == (1, 2)
    assert find_external_triangle(g, 0, forbidden=[1]) == (3, 4)
    assert find_external_triangle(g, 0, forbidden=[1, 3]) is None
    assert list(iter_triangles(g)) == [(0, 1, 2), (0, 3, 4)]
    assert list(iter_triangles(g, within=[0, 1, 2])) == [(0, 1, 2)]
    c4 = cycle_graph(4)
    assert is_c4_edge(c4, 0, 1) and not is_c4_edge(c4, 0, 1, within=[0, 1, 2])
    assert not is_c4_edge(named("K4"), 0, 1)


def test_exhaustive_helper_sanity():
    assert exhaustive_induced(cycle_graph(4), CATALOG["C4"])
    assert not exhaustive_induced(named("K4"), CATALOG["C4"])
    assert all(exhaustive_induced(CATALOG[n].as_graph()[0], CATALOG[n]) for n in ("Paw", "Gem"))
    assert list(combinations(range(3), 2))
