"""Brute-force ground truth: enumerate black/white colorings directly.

Deliberately independent of the propagation engine. Vertices are colored in
id order; a branch is cut as soon as it has a white-white edge, a black
vertex with two black neighbours, or a black vertex whose neighbourhood is
fully decided without exactly one black neighbour.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .coloring import BLACK, UNCOLORED, WHITE, Coloring
from .graph import Edge, Graph, norm_edge


@dataclass(frozen=True)
class OracleLimit:
    max_n: int = 20
    max_dims: Optional[int] = None


class OracleTooLarge(ValueError):
    pass


def _search(g: Graph, fixed: Optional[Coloring], lim: OracleLimit, want: Optional[int]):
    n = g.n
    if n > lim.max_n:
        raise OracleTooLarge(f"oracle refuses n={n} > {lim.max_n}")
    # a vertex's neighbourhood is decided once its largest neighbour is
    last = [max(g.nbrs[v] + (v,)) for v in range(n)]
    closes: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        closes[last[v]].append(v)
    col = [UNCOLORED] * n
    nblack = [0] * n
    out: list[list[Edge]] = []
    pre = fixed.color if fixed is not None else None
    pre_mate = fixed.mate if fixed is not None else None

    def consistent_closed(i: int) -> bool:
        for v in closes[i]:
            if col[v] == BLACK and nblack[v] != 1:
                return False
        return True

    def rec(i: int) -> bool:
        if i == n:
            m = sorted({norm_edge(v, w) for v in range(n) if col[v] == BLACK
                        for w in g.nbrs[v] if col[w] == BLACK})
            if pre_mate is not None:
                ms = set(m)
                for v, w in enumerate(pre_mate):
                    if w >= 0 and norm_edge(v, w) not in ms:
                        return False
            out.append(m)
            return want is not None and len(out) >= want
        choices = (WHITE, BLACK)
        if pre is not None and pre[i] != UNCOLORED:
            choices = (pre[i],)
        for c in choices:
            ok = True
            if c == WHITE:
                for w in g.nbrs[i]:
                    if w < i and col[w] == WHITE:
                        ok = False
                        break
                if not ok:
                    continue
                col[i] = WHITE
                if consistent_closed(i) and rec(i + 1):
                    return True
                col[i] = UNCOLORED
            else:
                bn = [w for w in g.nbrs[i] if w < i and col[w] == BLACK]
                if len(bn) > 1 or any(nblack[w] >= 1 for w in bn):
                    continue
                col[i] = BLACK
                nblack[i] = len(bn)
                for w in bn:
                    nblack[w] += 1
                if consistent_closed(i) and rec(i + 1):
                    return True
                for w in bn:
                    nblack[w] -= 1
                nblack[i] = 0
                col[i] = UNCOLORED
        return False

    rec(0)
    return out


def enumerate_all_dims(g: Graph, lim: OracleLimit = OracleLimit()) -> list[list[Edge]]:
    """Every d.i.m. of ``g`` as a sorted edge list, in lexicographic coloring order."""
    return _search(g, None, lim, lim.max_dims)


def oracle_solve(
    g: Graph, partial: Optional[Coloring] = None, lim: OracleLimit = OracleLimit()
) -> Optional[list[Edge]]:
    """Some d.i.m. whose coloring extends ``partial`` (colors and recorded mates)."""
    res = _search(g, partial, lim, 1)
    return res[0] if res else None


def has_dim(g: Graph, partial: Optional[Coloring] = None) -> bool:
    return oracle_solve(g, partial) is not None
