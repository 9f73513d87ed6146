"""Anchor-edge stage: assume ``xy`` is a matching edge and color ``X``.

``X`` is ``{x, y}`` plus the first three distance levels of ``xy``. With
``x, y`` black, the first level is white, the second black, and every
isolated second-level vertex ``u_i`` takes its mate in its private set
``T_i`` of third-level neighbours. Picking the black vertex of one ``T_i``
forces a whole component of ``G[S2 + T_one]``, so only a few components
(at most three on S_{2,2,3}-free inputs) need branching.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .coloring import BLACK, UNCOLORED, WHITE
from .errors import Contradiction, Diagnostics, NoDimWithXy, StructureError
from .graph import DistanceLevels, Edge, components_within, distance_levels, is_bipartite_within, norm_edge
from .reduce import ReductionState


@dataclass
class XyContext:
    state: ReductionState
    xy: Edge
    scope: frozenset[int]
    levels: DistanceLevels
    n1_split: tuple[frozenset[int], frozenset[int], frozenset[int]]
    s2: list[int]
    t_sets: dict[int, list[int]]
    t_owner: dict[int, int]
    s3: frozenset[int]
    X: frozenset[int]
    Y: frozenset[int]
    n7_empty: bool
    diag: Diagnostics = field(default_factory=Diagnostics)

    def level(self, i: int) -> frozenset[int]:
        return self.levels.layer(i)


def on_p3(st: ReductionState, xy: Edge, scope) -> bool:
    """Whether ``xy`` lies on an induced P3 inside ``scope``."""
    x, y = xy
    g = st.graph
    for a, b in ((x, y), (y, x)):
        for w in g.nbrs[a]:
            if w != b and w in scope and not g.has_edge(w, b):
                return True
    return False


def init_xy(base: ReductionState, xy: Edge, scope, diag: Optional[Diagnostics] = None) -> XyContext:
    """Color ``x, y`` black and apply every reduction valid under ``xy`` in M."""
    diag = diag if diag is not None else Diagnostics()
    g = base.graph
    scope = frozenset(scope)
    x, y = norm_edge(*xy)
    if not g.has_edge(x, y) or x not in scope or y not in scope:
        raise ValueError(f"{xy} is not an edge of the current graph")
    lv = distance_levels(g, (x, y), scope)
    n1, n2, n3 = lv.layer(1), lv.layer(2), lv.layer(3)
    nxy = frozenset(w for w in n1 if g.has_edge(w, x) and g.has_edge(w, y))
    nx = frozenset(w for w in n1 if g.has_edge(w, x) and w not in nxy)
    ny = frozenset(w for w in n1 if g.has_edge(w, y) and w not in nxy)
    if not diag.check("n_xy_at_most_one", len(nxy) <= 1):
        raise StructureError(f"anchor {xy}: {len(nxy)} common neighbours")
    # facts on the first two levels
    if any(g.has_edge(a, b) for a, b in combinations(sorted(n1), 2)):
        raise NoDimWithXy("first level not independent")
    for v in n2:
        if sum(1 for w in g.nbrs[v] if w in n2) > 1:
            raise NoDimWithXy("second level is not a matching plus isolated vertices")
    n3_ok = is_bipartite_within(g, n3)
    diag.check("n3_bipartite", n3_ok)
    if not n3_ok:
        diag.note("n3_bipartite_rejections")
        raise NoDimWithXy("odd cycle in the third level")

    s = base.clone()
    try:
        s.force_edge(x, y, "anchor")
        m2 = sorted({norm_edge(v, w) for v in n2 for w in g.nbrs[v] if w in n2})
        for u, w in m2:
            s.force_edge(u, w, "m2")
        n4 = lv.layer(4)
        for a in sorted(n3):
            for b, c in combinations([w for w in g.nbrs[a] if w in n4], 2):
                if g.has_edge(b, c):
                    s.force_edge(b, c, "n4-triangle")
        m2v = {v for e in m2 for v in e}
        s2 = sorted(v for v in n2 if v not in m2v)
        s2set = set(s2)
        t_sets: dict[int, list[int]] = {u: [] for u in s2}
        t_owner: dict[int, int] = {}
        s3 = set()
        for t in sorted(n3):
            if any(w in m2v for w in g.nbrs[t]):
                continue
            owners = [w for w in g.nbrs[t] if w in s2set]
            if len(owners) == 1:
                t_sets[owners[0]].append(t)
                t_owner[t] = owners[0]
            elif owners:
                s3.add(t)
        # a vertex of T_i seeing two vertices of one T_j is the mate of u_i
        for t, u in sorted(t_owner.items()):
            seen: dict[int, int] = {}
            for w in g.nbrs[t]:
                o = t_owner.get(w)
                if o is not None and o != u:
                    seen[o] = seen.get(o, 0) + 1
            if any(c >= 2 for c in seen.values()):
                s.force_edge(u, t, "t-two-contacts")
        s.propagate()
    except Contradiction as exc:
        raise NoDimWithXy(str(exc)) from None
    X = frozenset({x, y}) | n1 | n2 | n3
    return XyContext(
        state=s,
        xy=(x, y),
        scope=scope,
        levels=lv,
        n1_split=(nx, ny, nxy),
        s2=s2,
        t_sets=t_sets,
        t_owner=t_owner,
        s3=frozenset(s3),
        X=X,
        Y=scope - X,
        n7_empty=lv.depth < 7,
        diag=diag,
    )


def trim_in_vertices(ctx: XyContext, s: ReductionState, u: int) -> list[int]:
    """Candidates for the black vertex of ``T_u`` after dropping duplicates.

    With an edge inside ``T_u`` the triangle it forms with ``u`` puts the
    black vertex on that edge. Pendant vertices hanging only from ``u``
    are interchangeable, so one of them represents all.
    """
    g = ctx.state.graph
    ts = ctx.t_sets[u]
    col = s.col.color
    tset = set(ts)
    for t in ts:
        for w in g.nbrs[t]:
            if w in tset and w > t:
                return [v for v in (t, w) if col[v] == UNCOLORED and s.alive[v]]
    out = []
    pendant_seen = False
    for t in ts:
        if col[t] != UNCOLORED or not s.alive[t]:
            continue
        nb = [w for w in g.nbrs[t] if w in ctx.scope]
        if nb == [u]:
            if pendant_seen:
                continue
            pendant_seen = True
        out.append(t)
    return out


def q_components(ctx: XyContext) -> list[frozenset[int]]:
    return components_within(ctx.state.graph, set(ctx.s2) | set(ctx.t_owner))


def _complete(s: ReductionState, comp) -> bool:
    return all(s.col.color[v] != UNCOLORED for v in comp if s.alive[v])


def _contacts_n4(ctx: XyContext, comp) -> bool:
    g = ctx.state.graph
    n4 = ctx.level(4)
    return any(w in n4 for v in comp for w in g.nbrs[v])


def seed(ctx: XyContext, s: ReductionState, t: int) -> Optional[ReductionState]:
    """Clone of ``s`` with ``t`` black and matched to its owner, propagated."""
    u = ctx.t_owner[t]
    c = s.clone()
    try:
        c.force_edge(u, t, "seed")
    except Contradiction:
        return None
    return c


def color_component(ctx: XyContext, s: ReductionState, comp, t: int) -> Optional[ReductionState]:
    """Seed ``t`` black; the state if ``comp`` ends fully colored, else None."""
    c = seed(ctx, s, t)
    if c is None or not _complete(c, comp):
        return None
    return c


def _open_t(ctx: XyContext, s: ReductionState, comp) -> Optional[int]:
    """Owner of the first ``T_i`` in ``comp`` without a black vertex."""
    col = s.col.color
    for u in ctx.s2:
        if u not in comp:
            continue
        if s.col.mate[u] >= 0:
            continue
        if any(col[t] == BLACK for t in ctx.t_sets[u]):
            continue
        return u
    return None


def _branch_comp(ctx: XyContext, s: ReductionState, comp, depth: int = 0):
    """All completions of ``comp`` reachable by seeding, in order."""
    u = _open_t(ctx, s, comp)
    if u is None:
        if _complete(s, comp):
            yield s
        else:
            ctx.diag.note("x_component_incomplete")
        return
    if depth:
        ctx.diag.note("x_unforced_branch")
    for t in trim_in_vertices(ctx, s, u):
        c = seed(ctx, s, t)
        if c is not None:
            yield from _branch_comp(ctx, c, comp, depth + 1)


def restrict_components(ctx: XyContext) -> tuple[ReductionState, list[frozenset[int]]]:
    """Settle forced and independent components; return the branching family."""
    s = ctx.state
    g = s.graph
    n4 = ctx.level(4)
    # a fourth-level vertex joined to a whole T_i with two or more members
    for u in ctx.s2:
        ts = ctx.t_sets[u]
        if len(ts) < 2:
            continue
        common = set(w for w in g.nbrs[ts[0]] if w in n4)
        for t in ts[1:]:
            common &= g.adj[t]
        if common:
            raise NoDimWithXy(f"vertex {min(common)} sees all of T({u})")
    qstar = []
    for comp in q_components(ctx):
        if _complete(s, comp):
            continue
        if not _contacts_n4(ctx, comp):
            done = next(_branch_comp(ctx, s, comp), None)
            if done is None:
                raise NoDimWithXy("independent component cannot be colored")
            s = done
            continue
        qstar.append(comp)
    if not ctx.diag.check("qstar_at_most_three", len(qstar) <= 3):
        raise StructureError(f"anchor {ctx.xy}: {len(qstar)} branching components")
    return s, qstar


def enumerate_X_colorings(ctx: XyContext) -> list[ReductionState]:
    """Every feasible X-coloring, each as a propagated state."""
    s, qstar = restrict_components(ctx)
    leaves = [s]
    for comp in qstar:
        nxt = []
        for st in leaves:
            if _complete(st, comp):
                nxt.append(st)
            else:
                nxt.extend(_branch_comp(ctx, st, comp))
        leaves = nxt
        if not leaves:
            break
    ctx.diag.x_colorings.append(len(leaves))
    return leaves


def x_coloring_ok(ctx: XyContext, s: ReductionState) -> bool:
    """Every third-level edge has exactly one black end, the mate of an ``u_i``."""
    g = s.graph
    col, mate = s.col.color, s.col.mate
    n3 = ctx.level(3)
    for v in n3:
        for w in g.nbrs[v]:
            if w in n3 and v < w and s.alive[v] and s.alive[w]:
                blacks = [a for a in (v, w) if col[a] == BLACK]
                if len(blacks) != 1 or mate[blacks[0]] not in ctx.level(2):
                    return False
    return True


__all__ = [
    "XyContext",
    "init_xy",
    "on_p3",
    "trim_in_vertices",
    "color_component",
    "restrict_components",
    "enumerate_X_colorings",
    "x_coloring_ok",
    "q_components",
]
