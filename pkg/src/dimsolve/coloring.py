"""Black/white vertex colorings standing in for a d.i.m.

Black vertices are the endpoints of matching edges; white vertices form an
independent set. A complete coloring is feasible exactly when every black
vertex has exactly one black neighbour, and then the black-black edges are a
dominating induced matching.
"""

from __future__ import annotations

from enum import IntEnum
from typing import Iterable, Optional

from .graph import Edge, Graph, norm_edge


class Color(IntEnum):
    UNCOLORED = 0
    BLACK = 1
    WHITE = 2


UNCOLORED, BLACK, WHITE = Color.UNCOLORED, Color.BLACK, Color.WHITE


class Coloring:
    """Partial coloring plus the matched mate of each paired black vertex."""

    __slots__ = ("color", "mate")

    def __init__(self, n: int, color: Optional[bytearray] = None, mate: Optional[list[int]] = None):
        self.color = bytearray(n) if color is None else color
        self.mate = [-1] * n if mate is None else mate

    @classmethod
    def from_dict(cls, n: int, colors: dict[int, Color]) -> "Coloring":
        c = cls(n)
        for v, col in colors.items():
            c.color[v] = col
        return c

    @classmethod
    def from_matching(cls, g: Graph, m: Iterable[tuple[int, int]]) -> "Coloring":
        c = cls(g.n, bytearray([WHITE]) * g.n)
        for u, v in m:
            c.color[u] = c.color[v] = BLACK
            c.mate[u], c.mate[v] = v, u
        return c

    def copy(self) -> "Coloring":
        return Coloring(len(self.color), bytearray(self.color), list(self.mate))

    def __len__(self) -> int:
        return len(self.color)

    def __getitem__(self, v: int) -> Color:
        return Color(self.color[v])

    def is_complete(self, vertices: Optional[Iterable[int]] = None) -> bool:
        vs = range(len(self.color)) if vertices is None else vertices
        return all(self.color[v] != UNCOLORED for v in vs)

    def black(self) -> list[int]:
        return [v for v, c in enumerate(self.color) if c == BLACK]

    def white(self) -> list[int]:
        return [v for v, c in enumerate(self.color) if c == WHITE]

    def matching(self) -> list[Edge]:
        return sorted({norm_edge(v, w) for v, w in enumerate(self.mate) if w >= 0})

    def is_feasible(self, g: Graph, complete: bool = False) -> bool:
        """Feasibility of this coloring on ``g``.

        Partial: whites independent, every black has at most one black
        neighbour, recorded mates are symmetric black edges. Complete
        additionally requires every vertex colored and exactly one black
        neighbour per black vertex.
        """
        col, mate = self.color, self.mate
        for v in g.vertices():
            c = col[v]
            if c == UNCOLORED:
                if complete:
                    return False
                continue
            if c == WHITE:
                if any(col[w] == WHITE for w in g.nbrs[v]):
                    return False
                continue
            blacks = [w for w in g.nbrs[v] if col[w] == BLACK]
            if len(blacks) > 1 or (complete and len(blacks) != 1):
                return False
            if mate[v] >= 0 and (mate[v] not in blacks or mate[mate[v]] != v):
                return False
        return True

    def __repr__(self) -> str:
        sym = {UNCOLORED: ".", BLACK: "B", WHITE: "W"}
        return "Coloring(" + "".join(sym[c] for c in self.color) + ")"
