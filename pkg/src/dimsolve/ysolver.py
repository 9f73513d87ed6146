"""Extension of an X-coloring over ``Y`` and the top-level solver.

Each induced S_{2,2,2} ``H`` left in ``Y`` is removed by one sound step: a
white vertex, a forced edge, a peripheral triangle, or the deletion of a
component hanging from a cut vertex ``z`` (solved separately for the two
possible matching edges at ``z``). What remains is S_{2,2,2}-free and is
handed to :mod:`dimsolve.s222free`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .coloring import BLACK, UNCOLORED, WHITE, Coloring
from .errors import Contradiction, Diagnostics, NoDimWithXy, NotInClassError, StructureError
from .graph import Edge, Graph, components_within, connected_components, distance_levels, verify_dim
from .patterns import find_external_triangle, find_induced, get_pattern, is_sijk_free, iter_triangles
from .reduce import CriticalLift, ReductionState, preprocess_assumptions, Outcome
from .s222free import complete_live
from .xy import XyContext, enumerate_X_colorings, init_xy, on_p3

S222 = get_pattern("S222")


@dataclass
class S222Witness:
    d: int
    a: tuple[int, int]
    b: tuple[int, int]
    c: tuple[int, int]
    p: int
    z: int
    zb: str  # "b1" or "b2"
    tail: tuple[int, ...] = ()

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset((self.d, *self.a, *self.b, *self.c))


@dataclass(frozen=True)
class WhiteVertex:
    v: int


@dataclass(frozen=True)
class ForcedEdge:
    e: Edge
    white: int


@dataclass(frozen=True)
class BlackVertex:
    v: int


@dataclass(frozen=True)
class PeripheralTriangle:
    abc: tuple[int, int, int]


@dataclass(frozen=True)
class Critical:
    z: int
    a1: int
    a2: int
    component: frozenset[int]


Classification = Union[WhiteVertex, ForcedEdge, BlackVertex, PeripheralTriangle, Critical]


@dataclass
class DimResult:
    matching: Optional[list[Edge]]
    stage: str
    trace: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)
    diagnostics: Diagnostics = field(default_factory=Diagnostics)

    @property
    def has_dim(self) -> bool:
        return self.matching is not None


# -- Y-phase ------------------------------------------------------------------


def color_N4(ctx: XyContext, s: ReductionState) -> bool:
    """Fourth-level colors follow from the X-coloring; report whether all are set."""
    s.propagate()
    ok = all(s.col.color[v] != UNCOLORED for v in ctx.level(4) if s.alive[v])
    ctx.diag.check("n4_colored", ok)
    return ok


def _drop_settled(ctx: XyContext, s: ReductionState) -> None:
    """White and matched vertices of ``Y`` leave the graph."""
    col, mate = s.col.color, s.col.mate
    for v in ctx.Y:
        if s.alive[v] and (col[v] == WHITE or mate[v] >= 0):
            s.alive[v] = 0


def _alive_scope(ctx: XyContext, s: ReductionState) -> list[int]:
    return [v for v in ctx.scope if s.alive[v]]


def _normalize(g: Graph, emb: dict[str, int], z: int) -> Optional[tuple]:
    """Relabel arms so ``z`` sees both of arm a, one of arm b, none of arm c."""
    arms = [(emb["x1"], emb["x2"]), (emb["y1"], emb["y2"]), (emb["z1"], emb["z2"])]
    if g.has_edge(z, emb["u"]):
        return None
    hits = [sum(1 for v in arm if g.has_edge(z, v)) for arm in arms]
    if sorted(hits) != [0, 1, 2]:
        return None
    a = arms[hits.index(2)]
    b = arms[hits.index(1)]
    c = arms[hits.index(0)]
    zb = "b1" if g.has_edge(z, b[0]) else "b2"
    return emb["u"], a, b, c, zb


def find_witness(ctx: XyContext, s: ReductionState) -> Optional[S222Witness]:
    """First induced S_{2,2,2} in the live part of ``Y``, normalized around ``z``."""
    g = s.graph
    alive = _alive_scope(ctx, s)
    lv = distance_levels(g, ctx.xy, alive)
    F = [v for v in ctx.Y if s.alive[v] and s.is_live(v) and v in lv.level]
    if len(F) < 7:
        return None
    emb = find_induced(g, S222, F)
    if emb is None:
        return None
    H = set(emb.values())
    p = min(lv.level[h] for h in H)
    prev = lv.layer(p - 1)
    z = min(w for h in H for w in g.nbrs[h] if w in prev)
    norm = _normalize(g, emb, z)
    ctx.diag.check("witness_normal_form", norm is not None)
    if norm is None:
        raise StructureError(f"contact vertex {z} has no normal form against {sorted(H)}")
    d, a, b, c, zb = norm
    tail = [z]
    for lvl in range(p - 2, max(p - 6, -1), -1):
        nxt = [w for w in g.nbrs[tail[-1]] if w in lv.layer(lvl)]
        if not nxt:
            break
        tail.append(min(nxt))
    return S222Witness(d, a, b, c, p, z, zb, tuple(tail))


def _p_of_h(g: Graph, s: ReductionState, H: frozenset[int], alive: set[int]) -> list[int]:
    """Contacts of ``H`` that start an induced P4 whose other vertices avoid N[H]."""
    near = set(H)
    for h in H:
        near.update(w for w in g.nbrs[h] if w in alive)
    far = alive - near
    out = []
    for t in sorted(near - H):
        found = False
        for t2 in g.nbrs[t]:
            if t2 not in far:
                continue
            for t3 in g.nbrs[t2]:
                if t3 not in far or g.has_edge(t3, t):
                    continue
                for t4 in g.nbrs[t3]:
                    if t4 in far and t4 != t2 and not g.has_edge(t4, t) and not g.has_edge(t4, t2):
                        found = True
                        break
                if found:
                    break
            if found:
                break
        if found:
            out.append(t)
    return out


def _triangle_touching(s: ReductionState, H: frozenset[int]) -> Optional[tuple[int, int, int]]:
    g = s.graph
    live = set(s.live_vertices())
    for t in iter_triangles(g, live):
        if not (set(t) & H):
            continue
        for a in t:
            b, c = (v for v in t if v != a)
            nb_a = [w for w in g.nbrs[a] if w in live]
            if len(nb_a) != 3:
                continue
            if {w for w in g.nbrs[b] if w in live} == {a, c} and {w for w in g.nbrs[c] if w in live} == {a, b}:
                return (a, b, c)
    return None


def classify_witness(ctx: XyContext, s: ReductionState, w: S222Witness) -> Classification:
    g = s.graph
    a1, a2 = w.a
    b1, b2 = w.b
    zcol = s.col.color[w.z]
    if zcol == BLACK:
        return WhiteVertex(b2 if w.zb == "b2" else b1)
    if zcol == WHITE:
        return WhiteVertex(w.d)
    # z is uncolored: only possible far from X
    ok = w.p >= 6 and not ctx.n7_empty
    ctx.diag.check("contact_colored_when_near", ok)
    if not ok:
        raise StructureError(f"contact vertex {w.z} uncolored at level {w.p - 1}")
    H = w.vertices
    if w.zb == "b2":
        tri = _triangle_touching(s, H)
        if tri is not None:
            return PeripheralTriangle(tri)
        live = s.live_vertices()
        ext = find_external_triangle(g, b2, H | {w.z}, live)
        if ext is not None:
            return ForcedEdge(ext, b2)
        return WhiteVertex(w.d)
    # zb1: the triangle z a1 a2 puts the black on a2
    extra = [x for x in g.nbrs[a2] if s.is_live(x) and x not in (w.z, a1)]
    if extra:
        return WhiteVertex(min(extra))
    alive = set(_alive_scope(ctx, s))
    ph = _p_of_h(g, s, H, alive)
    ok = w.z in ph and len(ph) <= 3
    ctx.diag.check("p_of_h_shape", ok)
    if not ok:
        raise StructureError(f"P(H) = {ph} for contact {w.z}")
    if len(ph) > 1:
        return ForcedEdge((a1, a2), w.d)
    rest = [v for v in alive if v != w.z]
    comps = components_within(g, rest)
    K = next(c for c in comps if w.d in c)
    return Critical(w.z, a1, a2, K)


def _sub_solve(ctx: XyContext, s: ReductionState, scope: frozenset[int], anchor: Edge, depth: int):
    sub = s.clone()
    for v in range(g_n(s)):
        sub.alive[v] = 1 if v in scope else 0
    sub.lifts = []
    try:
        sub.propagate()
        res = dim_with_xy(sub, anchor, scope, ctx.diag, depth=depth + 1)
    except (Contradiction, NoDimWithXy):
        return None
    return res.lift()


def g_n(s: ReductionState) -> int:
    return s.graph.n


def delete_critical(ctx: XyContext, s: ReductionState, cr: Critical, depth: int = 0) -> None:
    g = s.graph
    z, a1, a2, K = cr.z, cr.a1, cr.a2, cr.component
    alive = [v for v in _alive_scope(ctx, s) if v != z]
    comps = components_within(g, alive)
    x = ctx.xy[0]
    others = [c for c in comps if c != K and x not in c]
    ok = not (K & ctx.X) and all(len(c) == 1 for c in others)
    ctx.diag.check("critical_cut_structure", ok)
    if not ok:
        raise StructureError(f"critical contact {z}: component structure violated")
    if s.col.mate[z] >= 0 and s.col.mate[z] in K:
        raise Contradiction(f"critical contact {z} matched into its component")
    sub_scope = K | {z}
    with_za2 = _sub_solve(ctx, s, sub_scope, (z, a2), depth)
    with_a1a2 = _sub_solve(ctx, s, sub_scope, (a1, a2), depth)
    if with_za2 is None and with_a1a2 is None:
        raise Contradiction(f"no completion of the component at {z}")
    s.trace.append(("critical", (z, a1, a2)))
    removed = K - {a1, a2}
    s.kill(removed)
    s.lifts.append(CriticalLift(z, a1, a2, frozenset(removed), with_za2, with_a1a2))
    if with_a1a2 is None:
        s.force_edge(z, a2, "critical-za2")
    elif with_za2 is None:
        s.force_edge(a1, a2, "critical-a1a2")
    else:
        s.force_black(a2, "critical-black")
    s.propagate([z, a1, a2] + [w for v in removed for w in g.nbrs[v]])


def apply_classification(ctx: XyContext, s: ReductionState, cls: Classification, depth: int = 0) -> None:
    if isinstance(cls, WhiteVertex):
        s.force_white(cls.v, "y-white")
    elif isinstance(cls, BlackVertex):
        s.force_black(cls.v, "y-black")
    elif isinstance(cls, ForcedEdge):
        s.force_white(cls.white, "y-white")
        s.force_edge(*cls.e, "y-edge")
    elif isinstance(cls, PeripheralTriangle):
        s.remove_triangle(*cls.abc)
    elif isinstance(cls, Critical):
        delete_critical(ctx, s, cls, depth)
    else:  # pragma: no cover
        raise TypeError(cls)


def _progress_key(s: ReductionState) -> tuple[int, int]:
    return (sum(s.alive), sum(1 for c in s.col.color if c != UNCOLORED))


def delete_s222_loop(ctx: XyContext, s: ReductionState, depth: int = 0) -> ReductionState:
    """Remove S_{2,2,2}s from ``Y`` until none is left; raises Contradiction."""
    while True:
        _drop_settled(ctx, s)
        w = find_witness(ctx, s)
        if w is None:
            return s
        before = _progress_key(s)
        cls = classify_witness(ctx, s, w)
        ctx.diag.note("y_" + type(cls).__name__)
        apply_classification(ctx, s, cls, depth)
        if _progress_key(s) == before:
            raise StructureError(f"no progress on witness {sorted(w.vertices)}")


def _finish(ctx: XyContext, s: ReductionState) -> Optional[ReductionState]:
    done = complete_live(s, within=ctx.scope)
    if done is None:
        return None
    if not all(done.col.color[v] != UNCOLORED for v in ctx.scope if done.alive[v]):
        return None
    return done


def dim_with_xy(
    base: ReductionState,
    xy: Edge,
    scope,
    diag: Optional[Diagnostics] = None,
    depth: int = 0,
) -> ReductionState:
    """A complete state whose matching contains ``xy``; raises NoDimWithXy."""
    ctx = init_xy(base, xy, scope, diag)
    leaves = enumerate_X_colorings(ctx)
    if not leaves:
        raise NoDimWithXy("no feasible X-coloring")
    if not ctx.level(4):
        for leaf in leaves:
            if not all(leaf.col.color[v] != UNCOLORED for v in ctx.scope if leaf.alive[v]):
                ctx.diag.note("x_leaf_incomplete")
            done = _finish(ctx, leaf)
            if done is not None:
                return done
        raise NoDimWithXy("no X-coloring completes")
    for leaf in leaves:
        s = leaf.clone()
        try:
            color_N4(ctx, s)
            delete_s222_loop(ctx, s, depth)
        except Contradiction:
            continue
        done = _finish(ctx, s)
        if done is not None:
            return done
    raise NoDimWithXy("no X-coloring extends over Y")


# -- top level ----------------------------------------------------------------


def _single_edge(g: Graph, comp: frozenset[int]) -> Optional[Edge]:
    for u, v in sorted(g.edges):
        if u not in comp:
            continue
        rest = comp - {u, v}
        if all(g.has_edge(w, u) != g.has_edge(w, v) for w in rest) and not any(
            g.has_edge(p, q) for p in rest for q in g.nbrs[p] if q in rest
        ):
            return (u, v)
    return None


def _anchor_order(s: ReductionState, comp: frozenset[int]) -> list[Edge]:
    g = s.graph
    edges = sorted(e for e in g.edges if e[0] in comp and e[1] in comp)
    edges = [e for e in edges if on_p3(s, e, comp)]
    col = s.col.color
    return sorted(edges, key=lambda e: (0 if BLACK in (col[e[0]], col[e[1]]) else 1, e))


def _colored_single_edge(s: ReductionState, comp: frozenset[int]) -> Optional[ReductionState]:
    g = s.graph
    for u, v in sorted(e for e in g.edges if e[0] in comp and e[1] in comp):
        t = s.clone()
        try:
            t.force_edge(u, v, "single")
        except Contradiction:
            continue
        if all(t.col.color[w] != UNCOLORED for w in comp):
            return t
    return None


def _exact(s: ReductionState, comp: frozenset[int]) -> Optional[ReductionState]:
    return complete_live(s, within=comp)


def solve_active(
    s: ReductionState,
    comp: frozenset[int],
    diag: Diagnostics,
    in_class: bool = True,
    anchor: Optional[Edge] = None,
) -> Optional[ReductionState]:
    """Complete ``s`` on one live component, or None when it has no d.i.m."""
    if len(comp) == 1:
        (v,) = comp
        t = s.clone()
        try:
            t.set_white(v)
            t.propagate([v])
        except Contradiction:
            return None
        return t
    if not in_class:
        diag.note("exact_out_of_class")
        return _exact(s, comp)
    one = _colored_single_edge(s, comp)
    if one is not None:
        return one
    anchors = _anchor_order(s, comp)
    if anchor is not None:
        anchors = [e for e in anchors if e == tuple(sorted(anchor))]
    for xy in anchors:
        try:
            return dim_with_xy(s, xy, comp, diag)
        except NoDimWithXy:
            continue
        except StructureError:
            diag.note("structure_fallback")
            return _exact(s, comp)
    return None


def solve(
    g: Graph,
    allow_out_of_class: bool = False,
    diag: Optional[Diagnostics] = None,
    anchor: Optional[Edge] = None,
    check_class: bool = True,
) -> DimResult:
    """Decide whether ``g`` has a dominating induced matching and return one."""
    diag = diag if diag is not None else Diagnostics()
    in_class = True
    if check_class and not is_sijk_free(g, 2, 2, 3):
        if not allow_out_of_class:
            raise NotInClassError("input contains an induced S_{2,2,3}")
        in_class = False
    s = ReductionState.initial(g)
    for comp in connected_components(g):
        if len(comp) < 2:
            continue
        e = _single_edge(g, comp)
        if e is not None:
            s.force_edge(*e, "single")
    out = preprocess_assumptions(s)
    if out.kind == Outcome.NO_DIM:
        return DimResult(None, "preprocess", s.trace, diag)
    for comp in components_within(g, s.live_vertices()):
        if not any(s.is_live(v) for v in comp):
            continue
        nxt = solve_active(s, comp, diag, in_class, anchor)
        if nxt is None:
            return DimResult(None, "anchors", s.trace, diag)
        s = nxt
    try:
        s.propagate()
    except Contradiction:  # pragma: no cover - completed states are consistent
        raise RuntimeError("completed state is inconsistent")
    col = s.lift()
    m = col.matching()
    if not verify_dim(g, m):
        raise RuntimeError(f"assembled matching {m} is not a d.i.m.")
    return DimResult(m, "solved", s.trace, diag)
