"""Immutable simple undirected graphs and the basic d.i.m. predicates."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Adjacency is kept both as frozensets (membership) and as sorted tuples
    (deterministic iteration). Instances are never mutated after
    construction, so they can be shared between solver branches.
    """

    __slots__ = ("n", "edges", "adj", "nbrs")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        es: set[Edge] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            es.add(norm_edge(u, v))
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in es:
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.edges: frozenset[Edge] = frozenset(es)
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(a) for a in adj)
        self.nbrs: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.nbrs[v])

    def edge_list(self) -> list[Edge]:
        return sorted(self.edges)

    def relabel(self, perm: list[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass
class DistanceLevels:
    """BFS layers around an anchor edge: ``layers[0] == {x, y}``."""

    xy: Edge
    level: dict[int, int]
    layers: list[frozenset[int]]
    unreachable: frozenset[int] = field(default_factory=frozenset)

    def layer(self, i: int) -> frozenset[int]:
        if 0 <= i < len(self.layers):
            return self.layers[i]
        return frozenset()

    @property
    def depth(self) -> int:
        """Index of the deepest non-empty layer."""
        return len(self.layers) - 1


def distance_levels(
    g: Graph, xy: tuple[int, int], within: Optional[Iterable[int]] = None
) -> DistanceLevels:
    """Distance of every vertex to the edge ``xy``.

    ``within`` restricts the BFS to an induced subgraph; vertices outside it
    are ignored entirely. Vertices that cannot be reached are reported in
    ``unreachable`` instead of raising.
    """
    x, y = xy
    if not g.has_edge(x, y):
        raise ValueError(f"{xy} is not an edge")
    allowed = None if within is None else set(within)
    if allowed is not None and (x not in allowed or y not in allowed):
        raise ValueError(f"{xy} is not inside the restricted vertex set")
    level = {x: 0, y: 0}
    layers = [[x, y]]
    frontier = [x, y]
    while frontier:
        nxt = []
        d = len(layers)
        for u in frontier:
            for w in g.nbrs[u]:
                if w in level or (allowed is not None and w not in allowed):
                    continue
                level[w] = d
                nxt.append(w)
        if not nxt:
            break
        layers.append(nxt)
        frontier = nxt
    pool = g.vertices() if allowed is None else allowed
    unreachable = frozenset(v for v in pool if v not in level)
    return DistanceLevels(
        norm_edge(x, y), level, [frozenset(layer) for layer in layers], unreachable
    )


def _check_members(g: Graph, m: Iterable[tuple[int, int]]) -> list[Edge]:
    out = []
    for u, v in m:
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge of the graph")
        out.append(norm_edge(u, v))
    return out


def is_induced_matching(g: Graph, m: Iterable[tuple[int, int]]) -> bool:
    """True iff distinct members of ``m`` are at distance at least 2."""
    es = set(_check_members(g, m))
    owner: dict[int, Edge] = {}
    for e in es:
        for v in e:
            if v in owner:
                return False
            owner[v] = e
    for e in es:
        for v in e:
            for w in g.nbrs[v]:
                f = owner.get(w)
                if f is not None and f != e:
                    return False
    return True


def dim_violations(g: Graph, m: Iterable[tuple[int, int]]) -> list[Edge]:
    """Edges of ``g`` not intersected by exactly one member of ``m``, sorted."""
    es = _check_members(g, m)
    hits = [0] * g.n
    for u, v in set(es):
        hits[u] += 1
        hits[v] += 1
    bad = []
    mset = set(es)
    for e in g.edge_list():
        u, v = e
        # a member meets itself once even though both endpoints are hit
        count = hits[u] + hits[v] - (1 if e in mset else 0)
        if count != 1:
            bad.append(e)
    return bad


def verify_dim(g: Graph, m: Iterable[tuple[int, int]]) -> bool:
    """True iff every edge of ``g`` meets exactly one member of ``m``."""
    es = _check_members(g, m)
    if not is_induced_matching(g, es):
        return False
    return not dim_violations(g, es)


def connected_components(g: Graph, excluded: Iterable[int] = ()) -> list[frozenset[int]]:
    """Components of ``g - excluded``, ordered by their smallest vertex."""
    skip = set(excluded)
    seen = set(skip)
    comps = []
    for s in g.vertices():
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.nbrs[u]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(frozenset(comp))
    return comps


def components_within(g: Graph, vertices: Iterable[int]) -> list[frozenset[int]]:
    """Components of the subgraph induced by ``vertices``."""
    allowed = set(vertices)
    seen: set[int] = set()
    comps = []
    for s in sorted(allowed):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.nbrs[u]:
                if w in allowed and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(frozenset(comp))
    return comps


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``s`` relabelled to ``0..|s|-1``.

    Returns the graph and ``back`` with ``back[new] == old``; ids keep their
    relative order.
    """
    back = sorted(set(s))
    fwd = {v: i for i, v in enumerate(back)}
    edges = [
        (fwd[u], fwd[v]) for u, v in g.edges if u in fwd and v in fwd
    ]
    return Graph(len(back), edges), back


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def is_bipartite_within(g: Graph, vertices: Iterable[int]) -> bool:
    side: dict[int, int] = {}
    allowed = set(vertices)
    for s in sorted(allowed):
        if s in side:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.nbrs[u]:
                if w not in allowed:
                    continue
                if w not in side:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))
