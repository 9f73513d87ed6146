"""Shared graph builders and reference checks for the test suite."""

from __future__ import annotations

from itertools import combinations, permutations

from hypothesis import strategies as st

from dimsolve.coloring import Coloring
from dimsolve.errors import Contradiction
from dimsolve.generate import SplitMix64
from dimsolve.graph import Graph, connected_components, cycle_graph, norm_edge, path_graph
from dimsolve.oracle import enumerate_all_dims, oracle_solve
from dimsolve.patterns import find_induced, sijk_pattern
from dimsolve.reduce import ReductionState
from dimsolve.s222free import complete_live

S223 = sijk_pattern(2, 2, 3)


def graph(n, edges):
    return Graph(n, edges)


def named(name: str) -> Graph:
    if name == "C3":
        return cycle_graph(3)
    if name == "C4":
        return cycle_graph(4)
    if name == "C5":
        return cycle_graph(5)
    if name == "K4":
        return Graph(4, combinations(range(4), 2))
    if name == "P7":
        return path_graph(7)
    if name == "gem":
        # hub 4 over the path 0-1-2-3
        return Graph(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)])
    if name == "butterfly":
        # centre 0; wings 1-2 and 3-4
        return Graph(5, [(1, 2), (3, 4), (0, 1), (0, 2), (0, 3), (0, 4)])
    raise KeyError(name)


@st.composite
def graphs(draw, min_n=1, max_n=10, max_p=0.7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, mask) if keep])


def random_graph(rng: SplitMix64, n: int, p: float) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def exact_has_dim(g: Graph) -> bool:
    return complete_live(ReductionState.initial(g)) is not None


def exact_with_edge(s: ReductionState, xy, within) -> bool:
    t = s.clone()
    try:
        t.force_edge(*xy)
    except Contradiction:
        return False
    return complete_live(t, within=within) is not None


def oracle_dims_with(g: Graph, xy):
    xy = norm_edge(*xy)
    return [m for m in enumerate_all_dims(g) if xy in m]


def exhaustive_induced(g: Graph, pattern) -> bool:
    """Whether some vertex tuple reproduces the pattern exactly (no search plan)."""
    pg, idx = pattern.as_graph()
    k = pg.n
    for vs in combinations(range(g.n), k):
        sub = {(a, b) for a, b in combinations(range(k), 2) if g.has_edge(vs[a], vs[b])}
        if len(sub) != pg.m:
            continue
        for perm in permutations(range(k)):
            if all(((perm[a], perm[b]) in sub or (perm[b], perm[a]) in sub) == pg.has_edge(a, b)
                   for a, b in combinations(range(k), 2)):
                return True
    return False


def core_graph(seed: int, extra: int = 8, tail: int = 5, p: float = 0.15, zb: str = "b1", cap: int = 400):
    """S_{2,2,3}-free graph containing a protected S_{2,2,2} with a contact vertex.

    Vertices: centre 0, arms 1-2, 3-4, 5-6; contact 7 sees 1, 2 and 3 (zb="b1")
    or 4 (zb="b2"); a path of ``tail`` vertices leaves 7. Extra vertices and
    random edges outside the core are repaired away from any S_{2,2,3} or K4.
    Returns None when the core itself cannot be kept.
    """
    rng = SplitMix64(seed)
    core = {(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6), (1, 7), (2, 7)}
    core.add((3, 7) if zb == "b1" else (4, 7))
    prev, nxt = 7, 8
    for _ in range(tail):
        core.add((prev, nxt))
        prev, nxt = nxt, nxt + 1
    n = nxt + extra
    edges = set(core)
    for u in range(n):
        for v in range(max(u + 1, 8), n):
            if rng.random() < p:
                edges.add((u, v))
    for _ in range(cap):
        comps = connected_components(Graph(n, edges))
        for c1, c2 in zip(comps, comps[1:]):
            edges.add(norm_edge(rng.choice(sorted(c1)), rng.choice(sorted(c2))))
        g = Graph(n, edges)
        emb = find_induced(g, S223) or find_induced(g, "K4")
        if emb is None:
            return g
        vs = sorted(set(emb.values()))
        cand = [(u, v) for i, u in enumerate(vs) for v in vs[i + 1:] if g.has_edge(u, v) and (u, v) not in core]
        if not cand:
            return None
        edges.discard(rng.choice(cand))
    return None


def reduced_has_dim(s: ReductionState) -> bool:
    """Oracle verdict on the alive part of ``s`` under its partial coloring."""
    alive = s.alive_vertices()
    back = {v: i for i, v in enumerate(alive)}
    sub = Graph(len(alive), [(back[u], back[v]) for u, v in s.graph.edges if u in back and v in back])
    part = Coloring(len(alive))
    for v, i in back.items():
        part.color[i] = s.col.color[v]
        w = s.col.mate[v]
        part.mate[i] = back.get(w, -1) if w >= 0 else -1
    return oracle_solve(sub, part) is not None
