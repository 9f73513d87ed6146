"""DIMACS-style edge-list files.

::

    c any comment
    p dim <n> <m>
    e <u> <v>        (m lines, 1-based ids)

Internally vertices are 0-based; conversion happens only here and in the CLI.
"""

from __future__ import annotations

from typing import Iterable, TextIO

from .graph import Edge, Graph, norm_edge


class FormatError(ValueError):
    """Malformed edge-list input; ``line`` is 1-based (0 when not line-specific)."""

    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}" if line else msg)
        self.line = line
        self.msg = msg


def _int(tok: str, lineno: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(lineno, f"{what} {tok!r} is not an integer") from None


def parse_edge_list(text: str) -> Graph:
    n = m = None
    header_line = 0
    seen: dict[Edge, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        toks = raw.split()
        if not toks or toks[0] == "c":
            continue
        tag = toks[0]
        if tag == "p":
            if n is not None:
                raise FormatError(lineno, f"second header (first on line {header_line})")
            if len(toks) != 4 or toks[1] != "dim":
                raise FormatError(lineno, "header must read 'p dim <n> <m>'")
            n = _int(toks[2], lineno, "vertex count")
            m = _int(toks[3], lineno, "edge count")
            if n < 0 or m < 0:
                raise FormatError(lineno, "counts must be nonnegative")
            header_line = lineno
        elif tag == "e":
            if n is None:
                raise FormatError(lineno, "edge before the 'p dim' header")
            if len(toks) != 3:
                raise FormatError(lineno, "edge line must read 'e <u> <v>'")
            u = _int(toks[1], lineno, "vertex")
            v = _int(toks[2], lineno, "vertex")
            for x in (u, v):
                if not 1 <= x <= n:
                    raise FormatError(lineno, f"vertex {x} outside 1..{n}")
            if u == v:
                raise FormatError(lineno, f"self-loop at {u}")
            e = norm_edge(u - 1, v - 1)
            if e in seen:
                raise FormatError(lineno, f"duplicate edge {u}-{v} (first on line {seen[e]})")
            seen[e] = lineno
        else:
            raise FormatError(lineno, f"unknown line type {tag!r}")
    if n is None:
        raise FormatError(0, "missing 'p dim <n> <m>' header")
    if len(seen) != m:
        raise FormatError(header_line, f"header announces {m} edges, file has {len(seen)}")
    return Graph(n, seen)


def read_edge_list(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def format_edge_list(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p dim {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edge_list())
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph, out: TextIO, comments: Iterable[str] = ()) -> None:
    out.write(format_edge_list(g, comments))


def format_matching(m: Iterable[tuple[int, int]]) -> str:
    """``u1-v1 u2-v2 ...`` in 1-based ids, sorted."""
    return " ".join(f"{u + 1}-{v + 1}" for u, v in sorted(norm_edge(*e) for e in m))


def parse_matching(text: str) -> list[Edge]:
    """Inverse of the CLI matching syntax: ``"1-2,3-4"`` (commas or spaces)."""
    out = []
    for tok in text.replace(",", " ").split():
        parts = tok.split("-")
        if len(parts) != 2:
            raise FormatError(0, f"matching edge {tok!r} is not of the form u-v")
        u = _int(parts[0], 0, "vertex")
        v = _int(parts[1], 0, "vertex")
        if u < 1 or v < 1:
            raise FormatError(0, f"matching edge {tok!r} uses a non-positive id")
        out.append(norm_edge(u - 1, v - 1))
    return out
