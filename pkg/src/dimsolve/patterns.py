"""Induced occurrences of the fixed small graphs used by the solver.

Every pattern is a labelled graph with named roles. The matcher assigns
roles in a connected order, so each new role is drawn from the neighbours of
an already placed vertex; candidates are scanned in ascending id order, which
makes the first embedding found reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .graph import Graph


@dataclass(frozen=True)
class Pattern:
    name: str
    roles: tuple[str, ...]
    edges: frozenset[tuple[str, str]]
    order: tuple[str, ...]

    @property
    def size(self) -> int:
        return len(self.roles)

    def adjacent(self, r: str, s: str) -> bool:
        return (r, s) in self.edges or (s, r) in self.edges

    def degree(self, r: str) -> int:
        return sum(1 for s in self.roles if s != r and self.adjacent(r, s))

    def as_graph(self) -> tuple[Graph, dict[str, int]]:
        """The pattern itself as a host graph, roles numbered by ``roles``."""
        idx = {r: i for i, r in enumerate(self.roles)}
        return Graph(len(self.roles), ((idx[a], idx[b]) for a, b in self.edges)), idx


def _pattern(name: str, roles: str, edges: str, order: Optional[str] = None) -> Pattern:
    rs = tuple(roles.split())
    es = frozenset(tuple(e.split("-")) for e in edges.split())
    p = Pattern(name, rs, es, tuple((order or roles).split()))
    assert set(p.order) == set(rs)
    return p


def sijk_pattern(i: int, j: int, k: int) -> Pattern:
    """Subdivided claw with arm lengths ``i, j, k`` and centre ``u``."""
    arms = [("x", i), ("y", j), ("z", k)]
    roles = ["u"]
    edges = []
    for letter, length in arms:
        prev = "u"
        for t in range(1, length + 1):
            r = f"{letter}{t}"
            roles.append(r)
            edges.append((prev, r))
            prev = r
    # longest arm first: it prunes hardest
    order = ["u"]
    for letter, length in sorted(arms, key=lambda a: -a[1]):
        order.extend(f"{letter}{t}" for t in range(1, length + 1))
    return Pattern(f"S{i}{j}{k}", tuple(roles), frozenset(edges), tuple(order))


CATALOG: dict[str, Pattern] = {
    "K4": _pattern("K4", "v1 v2 v3 v4", "v1-v2 v1-v3 v1-v4 v2-v3 v2-v4 v3-v4"),
    "Diamond": _pattern(
        "Diamond", "v1 v2 v3 u", "v1-v2 v2-v3 u-v1 u-v2 u-v3", "u v2 v1 v3"
    ),
    "Butterfly": _pattern(
        "Butterfly", "v1 v2 v3 v4 u", "v1-v2 v3-v4 u-v1 u-v2 u-v3 u-v4", "u v1 v2 v3 v4"
    ),
    "Paw": _pattern("Paw", "a b c d", "a-b b-c c-d b-d", "b c d a"),
    "C4": _pattern("C4", "c1 c2 c3 c4", "c1-c2 c2-c3 c3-c4 c4-c1"),
    "C5": _pattern("C5", "c1 c2 c3 c4 c5", "c1-c2 c2-c3 c3-c4 c4-c5 c5-c1"),
    "Gem": _pattern(
        "Gem", "v1 v2 v3 v4 u", "v1-v2 v2-v3 v3-v4 u-v1 u-v2 u-v3 u-v4", "u v1 v2 v3 v4"
    ),
    "G1": _pattern(
        "G1",
        "x1 x2 x3 x4 x5 y1 z1 y3 z3",
        "x1-x2 x2-x3 x3-x4 x4-x5 x5-x1 x1-y1 x1-z1 y1-z1 x3-y3 x3-z3 y3-z3",
        "x1 y1 z1 x2 x3 y3 z3 x4 x5",
    ),
    "G2": _pattern(
        "G2",
        "x1 x2 x3 x4 x5 y1 z1 xs",
        "x1-x2 x2-x3 x3-x4 x4-x5 x5-x1 x1-y1 x1-z1 y1-z1 x2-xs x3-xs",
        "x2 x3 xs x1 y1 z1 x4 x5",
    ),
    "G3": _pattern(
        "G3",
        "x1 x2 x3 x4 x5 y xs",
        "x1-x2 x2-x3 x3-x4 x4-x5 x5-x1 x3-y y-x1 x4-xs x5-xs",
        "x4 x5 xs x3 x1 x2 y",
    ),
    "S222": sijk_pattern(2, 2, 2),
    "S223": sijk_pattern(2, 2, 3),
}


def get_pattern(name: str) -> Pattern:
    """Catalog lookup, case-insensitive; ``Sijk`` also accepts any arm lengths 1..3."""
    if name in CATALOG:
        return CATALOG[name]
    for key, p in CATALOG.items():
        if key.lower() == name.lower():
            return p
    if len(name) == 4 and name[0] in "sS" and name[1:].isdigit():
        i, j, k = sorted(int(c) for c in name[1:])
        if 1 <= i and k <= 3:
            return sijk_pattern(i, j, k)
    raise ValueError(f"unknown pattern {name!r}; known: {', '.join(CATALOG)}, Sijk")


def _plan(p: Pattern):
    """Per search step: (role, anchor index, must-see indices, must-miss indices, degree)."""
    plan = []
    for i, r in enumerate(p.order):
        earlier = p.order[:i]
        see = [j for j, s in enumerate(earlier) if p.adjacent(r, s)]
        miss = [j for j, s in enumerate(earlier) if not p.adjacent(r, s)]
        if i and not see:
            raise ValueError(f"search order of {p.name} is not connected at {r}")
        plan.append((r, see[0] if see else -1, see[1:], miss, p.degree(r)))
    return plan


_PLANS: dict[str, list] = {}


def iter_induced(
    g: Graph, p: Pattern, within: Optional[Iterable[int]] = None
) -> Iterator[dict[str, int]]:
    """All induced embeddings of ``p`` (as role maps), automorphic copies included."""
    plan = _PLANS.get(p.name)
    if plan is None or p.name not in CATALOG:
        plan = _plan(p)
        if p.name in CATALOG:
            _PLANS[p.name] = plan
    adj, nbrs = g.adj, g.nbrs
    if within is None:
        allowed = None
        deg = [len(a) for a in nbrs]
        starts = range(g.n)
    else:
        allowed = set(within)
        deg = [0] * g.n
        for v in allowed:
            deg[v] = sum(1 for w in nbrs[v] if w in allowed)
        starts = sorted(allowed)
    k = len(plan)
    host = [0] * k
    used: set[int] = set()

    def extend(i: int) -> Iterator[None]:
        if i == k:
            yield None
            return
        _, anchor, see, miss, pd = plan[i]
        pool = starts if anchor < 0 else nbrs[host[anchor]]
        for v in pool:
            if v in used or deg[v] < pd:
                continue
            if allowed is not None and v not in allowed:
                continue
            av = adj[v]
            if any(host[j] not in av for j in see):
                continue
            if any(host[j] in av for j in miss):
                continue
            host[i] = v
            used.add(v)
            yield from extend(i + 1)
            used.discard(v)

    for _ in extend(0):
        yield {plan[i][0]: host[i] for i in range(k)}


def find_induced(
    g: Graph, p: Pattern | str, within: Optional[Iterable[int]] = None
) -> Optional[dict[str, int]]:
    """First induced embedding of ``p`` in ``g`` (or in ``g[within]``), else None."""
    if isinstance(p, str):
        p = get_pattern(p)
    return next(iter_induced(g, p, within), None)


def check_embedding(g: Graph, p: Pattern, emb: dict[str, int]) -> bool:
    """Role map is injective and reproduces exactly the pattern's edges."""
    if set(emb) != set(p.roles) or len(set(emb.values())) != len(emb):
        return False
    for r, s in combinations(p.roles, 2):
        if g.has_edge(emb[r], emb[s]) != p.adjacent(r, s):
            return False
    return True


def is_sijk_free(g: Graph, i: int, j: int, k: int) -> bool:
    if not (1 <= i <= j <= k <= 3):
        raise ValueError(f"unsupported arm lengths ({i}, {j}, {k}); need 1 <= i <= j <= k <= 3")
    return find_induced(g, sijk_pattern(i, j, k)) is None


def find_peripheral_triangle(
    g: Graph, within: Optional[Iterable[int]] = None, touching: Optional[Iterable[int]] = None
) -> Optional[tuple[int, int, int]]:
    """Triangle ``(a, b, c)`` with ``deg(a) == 3`` and ``deg(b) == deg(c) == 2``.

    Degrees are taken inside ``within`` when given. With ``touching`` only
    triangles containing one of those vertices are reported.
    """
    allowed = None if within is None else set(within)

    def nb(v: int) -> list[int]:
        if allowed is None:
            return list(g.nbrs[v])
        return [w for w in g.nbrs[v] if w in allowed]

    hit: Optional[set[int]] = None
    if touching is None:
        apexes = sorted(allowed) if allowed is not None else list(g.vertices())
    else:
        hit = set(touching)
        cand: set[int] = set()
        for h in hit:
            if allowed is not None and h not in allowed:
                continue
            cand.add(h)
            cand.update(nb(h))
        apexes = sorted(cand)
    for a in apexes:
        na = nb(a)
        if len(na) != 3:
            continue
        for b, c in combinations(na, 2):
            if not g.has_edge(b, c):
                continue
            if hit is not None and not hit & {a, b, c}:
                continue
            if sorted(nb(b)) == sorted((a, c)) and sorted(nb(c)) == sorted((a, b)):
                return (a, b, c)
    return None


def is_peripheral_triangle(g: Graph, abc: tuple[int, int, int], within=None) -> bool:
    a, b, c = abc
    allowed = None if within is None else set(within)

    def nb(v: int) -> set[int]:
        return set(g.nbrs[v]) if allowed is None else {w for w in g.nbrs[v] if w in allowed}

    return (
        g.has_edge(a, b)
        and g.has_edge(a, c)
        and g.has_edge(b, c)
        and len(nb(a)) == 3
        and nb(b) == {a, c}
        and nb(c) == {a, b}
    )


def find_external_triangle(
    g: Graph, b2: int, forbidden: Iterable[int] = (), within: Optional[Iterable[int]] = None
) -> Optional[tuple[int, int]]:
    """Adjacent pair ``(m1, m2)`` of neighbours of ``b2`` avoiding ``forbidden``."""
    bad = set(forbidden)
    allowed = None if within is None else set(within)
    cands = [
        w for w in g.nbrs[b2] if w not in bad and (allowed is None or w in allowed)
    ]
    for m1, m2 in combinations(cands, 2):
        if g.has_edge(m1, m2):
            return (m1, m2)
    return None


def iter_triangles(g: Graph, within: Optional[Iterable[int]] = None) -> Iterator[tuple[int, int, int]]:
    """Triangles ``a < b < c`` in ascending order."""
    allowed = None if within is None else set(within)
    for a in g.vertices():
        if allowed is not None and a not in allowed:
            continue
        for b in g.nbrs[a]:
            if b <= a or (allowed is not None and b not in allowed):
                continue
            for c in g.nbrs[b]:
                if c <= b or (allowed is not None and c not in allowed):
                    continue
                if c in g.adj[a]:
                    yield (a, b, c)


def is_c4_edge(g: Graph, c: int, d: int, within: Optional[Iterable[int]] = None) -> bool:
    """Whether the edge ``cd`` lies on an induced 4-cycle ``c-d-q-p-c``."""
    allowed = None if within is None else set(within)
    for q in g.nbrs[d]:
        if q == c or q in g.adj[c] or (allowed is not None and q not in allowed):
            continue
        for p in g.nbrs[q]:
            if p in (c, d) or (allowed is not None and p not in allowed):
                continue
            if p in g.adj[c] and p not in g.adj[d]:
                return True
    return False
