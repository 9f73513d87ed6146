"""Reduction engine: forcing propagation, the three reductions, normalization.

A :class:`ReductionState` never relabels vertices. The current graph is the
subgraph of the original one induced by the *live* vertices: alive, not
white, not yet matched. A white vertex whose neighbours are all black, or a
matched pair whose other neighbours are all white, imposes nothing further,
so dropping it from the live graph is exactly Vertex Reduction and Edge
Reduction. Vertices removed by the peripheral triangle rule or by critical
deletion are marked dead and colored later from the recorded lifts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterable, Optional

from .coloring import BLACK, UNCOLORED, WHITE, Coloring
from .errors import Contradiction
from .graph import Edge, Graph, norm_edge
from .patterns import find_induced, get_pattern, is_c4_edge, iter_induced


class Outcome(Enum):
    PROGRESS = "progress"
    NO_CHANGE = "no-change"
    CONTRADICTION = "contradiction"
    NO_DIM = "no-dim"


@dataclass(frozen=True)
class StepOutcome:
    kind: Outcome
    reason: str = ""

    @property
    def ok(self) -> bool:
        return self.kind in (Outcome.PROGRESS, Outcome.NO_CHANGE)


PROGRESS = StepOutcome(Outcome.PROGRESS)
NO_CHANGE = StepOutcome(Outcome.NO_CHANGE)


@dataclass
class TriangleLift:
    """Colors a removed peripheral triangle once ``u`` has its final color.

    ``options`` lists the triangle edges still allowed by the colors the
    triangle carried when it was removed.
    """

    a: int
    b: int
    c: int
    u: int
    options: tuple[Edge, ...]


@dataclass
class CriticalLift:
    """Restores a deleted component from one of two precomputed colorings."""

    z: int
    a1: int
    a2: int
    removed: frozenset[int]
    with_za2: Optional[Coloring]
    with_a1a2: Optional[Coloring]


@dataclass
class ReductionState:
    graph: Graph
    alive: bytearray
    col: Coloring
    forced: list[Edge] = field(default_factory=list)
    trace: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)
    lifts: list = field(default_factory=list)

    @classmethod
    def initial(cls, g: Graph, within: Optional[Iterable[int]] = None) -> "ReductionState":
        if within is None:
            alive = bytearray([1]) * g.n
        else:
            alive = bytearray(g.n)
            for v in within:
                alive[v] = 1
        return cls(g, alive, Coloring(g.n))

    def clone(self) -> "ReductionState":
        return ReductionState(
            self.graph,
            bytearray(self.alive),
            self.col.copy(),
            list(self.forced),
            list(self.trace),
            list(self.lifts),
        )

    # -- views -------------------------------------------------------------

    def is_live(self, v: int) -> bool:
        return bool(self.alive[v]) and self.col.color[v] != WHITE and self.col.mate[v] < 0

    def alive_vertices(self) -> list[int]:
        return [v for v in range(self.graph.n) if self.alive[v]]

    def live_vertices(self) -> list[int]:
        col, mate, alive = self.col.color, self.col.mate, self.alive
        return [v for v in range(self.graph.n) if alive[v] and col[v] != WHITE and mate[v] < 0]

    def live_nbrs(self, v: int) -> list[int]:
        return [w for w in self.graph.nbrs[v] if self.is_live(w)]

    def alive_nbrs(self, v: int) -> list[int]:
        return [w for w in self.graph.nbrs[v] if self.alive[w]]

    def is_complete(self) -> bool:
        return all(self.col.color[v] != UNCOLORED for v in self.alive_vertices())

    # -- primitive coloring moves (raise Contradiction) --------------------

    def set_white(self, v: int) -> bool:
        c = self.col.color[v]
        if c == WHITE:
            return False
        if c == BLACK:
            raise Contradiction(f"vertex {v} needed white but is black")
        self.col.color[v] = WHITE
        return True

    def set_black(self, v: int) -> bool:
        c = self.col.color[v]
        if c == BLACK:
            return False
        if c == WHITE:
            raise Contradiction(f"vertex {v} needed black but is white")
        self.col.color[v] = BLACK
        return True

    def match(self, u: int, w: int) -> bool:
        mate = self.col.mate
        if mate[u] == w:
            return False
        if not self.graph.has_edge(u, w):
            raise Contradiction(f"{u} and {w} are not adjacent")
        if mate[u] >= 0 or mate[w] >= 0:
            raise Contradiction(f"{u} or {w} already matched elsewhere")
        if not (self.alive[u] and self.alive[w]):
            raise Contradiction(f"cannot match removed vertex in ({u}, {w})")
        self.set_black(u)
        self.set_black(w)
        mate[u], mate[w] = w, u
        return True

    def kill(self, vs: Iterable[int]) -> None:
        for v in vs:
            self.alive[v] = 0

    # -- forcing rules -----------------------------------------------------

    def propagate(self, seeds: Optional[Iterable[int]] = None) -> bool:
        """Apply the forcing rules to fixpoint; raise Contradiction on failure.

        Rules, over alive vertices only: a white vertex makes its neighbours
        black; a matched vertex makes its other neighbours white; an
        unmatched black vertex takes its only black neighbour or its only
        remaining candidate as mate; an uncolored vertex with two black
        neighbours is white. Returns whether anything changed.
        """
        g, alive = self.graph, self.alive
        color, mate = self.col.color, self.col.mate
        if seeds is None:
            pending = list(range(g.n))
        else:
            # a seed's neighbours may react to its new color too
            pending = list(dict.fromkeys(w for v in seeds for w in (v, *g.nbrs[v])))
        queued = bytearray(g.n)
        for v in pending:
            queued[v] = 1
        changed = False

        def touch(v: int) -> None:
            if not queued[v]:
                queued[v] = 1
                pending.append(v)
            for w in g.nbrs[v]:
                if alive[w] and not queued[w]:
                    queued[w] = 1
                    pending.append(w)

        while pending:
            v = pending.pop()
            queued[v] = 0
            if not alive[v]:
                continue
            c = color[v]
            if c == WHITE:
                for w in g.nbrs[v]:
                    if not alive[w]:
                        continue
                    if color[w] == WHITE:
                        raise Contradiction(f"white edge {norm_edge(v, w)}")
                    if color[w] == UNCOLORED:
                        color[w] = BLACK
                        changed = True
                        touch(w)
            elif c == BLACK:
                m = mate[v]
                if m >= 0:
                    for w in g.nbrs[v]:
                        if w == m or not alive[w]:
                            continue
                        if color[w] == BLACK:
                            raise Contradiction(f"black vertex {w} next to matched {v}")
                        if color[w] == UNCOLORED:
                            color[w] = WHITE
                            changed = True
                            touch(w)
                    continue
                blacks = []
                cands = []
                for w in g.nbrs[v]:
                    if not alive[w]:
                        continue
                    if color[w] == BLACK:
                        blacks.append(w)
                    elif color[w] == UNCOLORED:
                        cands.append(w)
                if len(blacks) > 1:
                    raise Contradiction(f"black vertex {v} has two black neighbours")
                if len(blacks) == 1:
                    self.match(v, blacks[0])
                    changed = True
                    touch(v)
                    touch(blacks[0])
                elif not cands:
                    raise Contradiction(f"black vertex {v} has no possible mate")
                elif len(cands) == 1:
                    w = cands[0]
                    self.match(v, w)
                    changed = True
                    touch(v)
                    touch(w)
            else:
                nb = 0
                for w in g.nbrs[v]:
                    if alive[w] and color[w] == BLACK:
                        if mate[w] >= 0:
                            nb = 2
                            break
                        nb += 1
                if nb >= 2:
                    color[v] = WHITE
                    changed = True
                    touch(v)
        return changed

    # -- reductions (raise Contradiction) ----------------------------------

    def force_white(self, v: int, kind: str = "white") -> None:
        if not self.alive[v]:
            raise ValueError(f"vertex {v} is not in the current graph")
        self.trace.append((kind, (v,)))
        self.set_white(v)
        self.propagate([v])

    def force_black(self, v: int, kind: str = "black") -> None:
        if not self.alive[v]:
            raise ValueError(f"vertex {v} is not in the current graph")
        self.trace.append((kind, (v,)))
        self.set_black(v)
        self.propagate([v])

    def force_edge(self, u: int, w: int, kind: str = "edge") -> None:
        if not (self.alive[u] and self.alive[w] and self.graph.has_edge(u, w)):
            raise ValueError(f"({u}, {w}) is not an edge of the current graph")
        e = norm_edge(u, w)
        self.trace.append((kind, e))
        if self.col.mate[u] != w:
            self.match(u, w)
            self.forced.append(e)
        self.propagate([u, w])

    def remove_triangle(self, a: int, b: int, c: int) -> None:
        """Peripheral triangle reduction on the live graph; ``a`` is the apex."""
        nb_a = [w for w in self.live_nbrs(a) if w not in (b, c)]
        if len(nb_a) != 1 or set(self.live_nbrs(b)) != {a, c} or set(self.live_nbrs(c)) != {a, b}:
            raise ValueError(f"({a}, {b}, {c}) is not a peripheral triangle")
        u = nb_a[0]
        col = self.col.color
        options = []
        for e in ((a, b), (a, c), (b, c)):
            other = ({a, b, c} - set(e)).pop()
            if col[e[0]] != WHITE and col[e[1]] != WHITE and col[other] != BLACK:
                options.append(e)
        if not options:
            raise Contradiction(f"peripheral triangle {(a, b, c)} admits no edge")
        self.trace.append(("triangle", (a, b, c)))
        self.kill((a, b, c))
        self.lifts.append(TriangleLift(a, b, c, u, tuple(options)))
        has_ab = any(a in e for e in options)
        has_bc = (b, c) in options
        if not has_bc:
            self.set_white(u)
        elif not has_ab:
            self.set_black(u)
        self.propagate([u])

    # -- answer reconstruction ---------------------------------------------

    def lift(self) -> Coloring:
        """Complete coloring of the original graph from a complete live state."""
        col = self.col.copy()
        for rec in reversed(self.lifts):
            if isinstance(rec, TriangleLift):
                want_bc = col.color[rec.u] == BLACK
                pick = None
                for e in rec.options:
                    if (e == (rec.b, rec.c)) == want_bc:
                        pick = e
                        break
                if pick is None:
                    raise RuntimeError("triangle lift has no option for the final color of u")
                for v in (rec.a, rec.b, rec.c):
                    col.color[v] = WHITE
                    col.mate[v] = -1
                p, q = pick
                col.color[p] = col.color[q] = BLACK
                col.mate[p], col.mate[q] = q, p
            elif isinstance(rec, CriticalLift):
                use_za2 = col.mate[rec.z] == rec.a2 or col.mate[rec.z] == rec.a1
                sub = rec.with_za2 if use_za2 else rec.with_a1a2
                if sub is None:
                    raise RuntimeError("critical lift has no coloring for the chosen edge")
                for v in rec.removed | {rec.a1, rec.a2, rec.z}:
                    col.color[v] = sub.color[v]
                    col.mate[v] = sub.mate[v]
        return col


def _attempt(s: ReductionState, fn, *args) -> StepOutcome:
    try:
        fn(*args)
    except Contradiction as exc:
        return StepOutcome(Outcome.CONTRADICTION, str(exc))
    return PROGRESS


def vertex_reduction(s: ReductionState, v: int) -> StepOutcome:
    return _attempt(s, s.force_white, v)


def edge_reduction(s: ReductionState, uw: tuple[int, int]) -> StepOutcome:
    return _attempt(s, s.force_edge, uw[0], uw[1])


def peripheral_triangle_reduction(s: ReductionState, abc: tuple[int, int, int]) -> StepOutcome:
    return _attempt(s, s.remove_triangle, *abc)


def propagate_forcing(s: ReductionState) -> StepOutcome:
    try:
        changed = s.propagate()
    except Contradiction as exc:
        return StepOutcome(Outcome.CONTRADICTION, str(exc))
    return PROGRESS if changed else NO_CHANGE


# -- Assumptions normalization ------------------------------------------------

FORCED_EDGE_ROLES: dict[str, tuple[tuple[str, str], ...]] = {
    "Diamond": (("u", "v2"),),
    "Butterfly": (("v1", "v2"), ("v3", "v4")),
    "G1": (("y1", "z1"), ("y3", "z3"), ("x4", "x5")),
    # only y1z1: a d.i.m. may use x2x3 with x5 mated outside the copy.
    # Forcing y1z1 whitens x1, which already destroys the copy.
    "G2": (("y1", "z1"),),
    "G3": (("x4", "x5"),),
}


def find_paw_c4_leaf(g: Graph, live: Iterable[int]) -> Optional[dict[str, int]]:
    """Paw ``a-b`` + triangle ``bcd`` whose edge ``cd`` lies on an induced C4."""
    live = set(live)
    for emb in iter_induced(g, get_pattern("Paw"), live):
        if is_c4_edge(g, emb["c"], emb["d"], live):
            return emb
    return None


def find_small_degree_white(g: Graph, live: Iterable[int]) -> Optional[tuple[str, int]]:
    """A live vertex forced white by its degree: a pendant of a triangle vertex,
    or a degree-2 vertex on an induced C4."""
    live = set(live)
    for v in sorted(live):
        nb = [w for w in g.nbrs[v] if w in live]
        if len(nb) == 1:
            a = nb[0]
            na = [w for w in g.nbrs[a] if w in live and w != v]
            if any(g.has_edge(p, q) for p, q in combinations(na, 2)):
                return ("pendant", v)
        elif len(nb) == 2:
            p, q = nb
            if g.has_edge(p, q):
                continue
            if any(r != v and r in live and r in g.adj[q] for r in g.nbrs[p]):
                return ("c4-degree", v)
    return None


def normalize_degrees(s: ReductionState) -> bool:
    """Small-degree white vertices to fixpoint; raises Contradiction."""
    changed = False
    while True:
        hit = find_small_degree_white(s.graph, s.live_vertices())
        if hit is None:
            return changed
        s.force_white(hit[1], hit[0])
        changed = True


def _preprocess(s: ReductionState, patterns: tuple[str, ...]) -> bool:
    g = s.graph
    changed = False
    if find_induced(g, "K4", s.live_vertices()) is not None:
        s.trace.append(("k4", tuple(find_induced(g, "K4", s.live_vertices()).values())))
        raise Contradiction("induced K4")
    for name in patterns:
        if name == "Paw":
            while True:
                emb = find_paw_c4_leaf(g, s.live_vertices())
                if emb is None:
                    break
                s.force_white(emb["a"], "paw-leaf")
                changed = True
            continue
        p = get_pattern(name)
        while True:
            emb = find_induced(g, p, s.live_vertices())
            if emb is None:
                break
            for r1, r2 in FORCED_EDGE_ROLES[name]:
                u, w = emb[r1], emb[r2]
                if s.col.mate[u] == w:
                    continue
                s.force_edge(u, w, name.lower())
            changed = True
    changed |= normalize_degrees(s)
    return changed


DEFAULT_ORDER = ("Diamond", "Butterfly", "G1", "G2", "G3", "Paw")


def preprocess_assumptions(
    s: ReductionState, order: tuple[str, ...] = DEFAULT_ORDER
) -> StepOutcome:
    """Normalize the live graph: no K4, diamond, butterfly, G1, G2, G3, paw leaf
    on a C4 edge, and no small-degree forced-white vertex.

    Every rule holds in every d.i.m., so any contradiction means the whole
    graph has none. Induced patterns cannot reappear after vertices leave the
    live graph, so one pass per pattern suffices; the degree rules run last.
    """
    try:
        s.propagate()
        changed = _preprocess(s, order)
    except Contradiction as exc:
        return StepOutcome(Outcome.NO_DIM, str(exc))
    return PROGRESS if changed else NO_CHANGE
