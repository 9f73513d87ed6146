"""Completion of a partial coloring on the S_{2,2,2}-free residual.

This is an exact branch-and-propagate search standing in for a dedicated
polynomial routine: same interface, exponential worst case, correct on every
graph. Live components are solved independently; failed (component, colors)
pairs are memoized.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .coloring import BLACK, UNCOLORED, Coloring
from .errors import Contradiction
from .graph import Graph, components_within
from .patterns import find_induced
from .reduce import ReductionState


@dataclass
class S222Instance:
    f: Graph
    partial: Coloring


def _key(s: ReductionState, comp: frozenset[int]) -> tuple:
    col, mate = s.col.color, s.col.mate
    return (comp, tuple((v, col[v], mate[v]) for v in sorted(comp)))


def _pick(s: ReductionState, comp: frozenset[int]) -> int:
    best, best_deg = -1, -1
    col = s.col.color
    for v in sorted(comp):
        d = sum(1 for w in s.graph.nbrs[v] if w in comp)
        # an unmatched black vertex has to be resolved anyway; do it first
        if col[v] == BLACK:
            d += s.graph.n
        if d > best_deg:
            best, best_deg = v, d
    return best


def _solve_comp(s: ReductionState, comp: frozenset[int], memo: set) -> Optional[ReductionState]:
    key = _key(s, comp)
    if key in memo:
        return None
    v = _pick(s, comp)
    branches = []
    if s.col.color[v] == UNCOLORED:
        branches.append(("white", v))
    for w in s.graph.nbrs[v]:
        if w in comp and s.col.color[w] == UNCOLORED:
            branches.append(("match", w))
    for kind, w in branches:
        t = s.clone()
        try:
            if kind == "white":
                t.set_white(v)
            else:
                t.match(v, w)
            t.propagate([v, w])
        except Contradiction:
            continue
        done = complete_live(t, memo, within=comp)
        if done is not None:
            return done
    memo.add(key)
    return None


def complete_live(
    s: ReductionState, memo: Optional[set] = None, within: Optional[frozenset[int]] = None
) -> Optional[ReductionState]:
    """Extend ``s`` to a complete coloring of its alive vertices, or None.

    ``s`` must already be propagated. The returned state is a new object.
    """
    if memo is None:
        memo = set()
    live = s.live_vertices()
    if within is not None:
        live = [v for v in live if v in within]
    out = s
    for comp in components_within(s.graph, live):
        if len(comp) == 1:
            (v,) = comp
            if out.col.color[v] == BLACK:
                return None
            if out is s:
                out = s.clone()
            try:
                out.set_white(v)
                out.propagate([v])
            except Contradiction:
                return None
            continue
        sub = _solve_comp(out, comp, memo)
        if sub is None:
            return None
        if out is s:
            out = s.clone()
        for v in comp:
            out.col.color[v] = sub.col.color[v]
            out.col.mate[v] = sub.col.mate[v]
    if out is s:
        out = s.clone()
    if within is None and not out.is_complete():
        # vertices outside any live component are decided by propagation
        try:
            out.propagate()
        except Contradiction:
            return None
        if not out.is_complete():
            return None
    return out


def solve_s222free(inst: S222Instance, check: bool = False) -> Optional[Coloring]:
    """A complete feasible coloring of ``inst.f`` extending ``inst.partial``, or None."""
    if check and find_induced(inst.f, "S222") is not None:
        raise ValueError("instance contains an induced S_{2,2,2}")
    s = ReductionState(inst.f, bytearray([1]) * inst.f.n, inst.partial.copy())
    try:
        s.propagate()
    except Contradiction:
        return None
    done = complete_live(s)
    if done is None:
        return None
    return done.col
