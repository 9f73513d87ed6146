"""Seeded instance generators.

Randomness comes from SplitMix64 so that a (mode, n, p, seed) tuple names the
same graph in any implementation::

    state = (state + 0x9E3779B97F4A7C15) mod 2^64
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 mod 2^64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB mod 2^64
    return z ^ (z >> 31)

Uniform floats use the top 53 bits; bounded integers use rejection on the
top bits of the output.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import Edge, Graph, connected_components, norm_edge, verify_dim
from .patterns import find_induced, sijk_pattern

MASK = (1 << 64) - 1
S223 = sijk_pattern(2, 2, 3)


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return z ^ (z >> 31)

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)``."""
        if n <= 0:
            raise ValueError("bound must be positive")
        bits = max(1, (n - 1).bit_length())
        while True:
            r = self.next_u64() >> (64 - bits)
            if r < n:
                return r

    def choice(self, seq: Sequence):
        return seq[self.below(len(seq))]

    def shuffle(self, xs: list) -> None:
        for i in range(len(xs) - 1, 0, -1):
            j = self.below(i + 1)
            xs[i], xs[j] = xs[j], xs[i]

    def derive(self, k: int) -> int:
        return SplitMix64(self.state ^ (k * 0xD1B54A32D192ED03 & MASK)).next_u64()


@dataclass(frozen=True)
class GenSpec:
    n: int
    p: float
    seed: int
    mode: str = "random"
    k: int = 0
    n_white: int = 0


class GenerationError(RuntimeError):
    pass


def _permute(rng: SplitMix64, n: int, edges, extra=()):
    perm = list(range(n))
    rng.shuffle(perm)
    g = Graph(n, ((perm[u], perm[v]) for u, v in edges))
    return g, [norm_edge(perm[u], perm[v]) for u, v in extra]


def _bridge(rng: SplitMix64, n: int, edges: set[Edge]) -> None:
    comps = connected_components(Graph(n, edges))
    for c1, c2 in zip(comps, comps[1:]):
        u = rng.choice(sorted(c1))
        v = rng.choice(sorted(c2))
        edges.add(norm_edge(u, v))


def _embedding_edges(g: Graph, emb: dict[str, int]) -> list[Edge]:
    vs = sorted(set(emb.values()))
    return [(u, v) for i, u in enumerate(vs) for v in vs[i + 1:] if g.has_edge(u, v)]


def gen_random_s223free(spec: GenSpec, retries: int = 8) -> Graph:
    """Connected S_{2,2,3}-free and K4-free graph: G(n, p), then repair."""
    n = spec.n
    if n < 1:
        raise ValueError("n must be positive")
    seed = spec.seed
    for attempt in range(retries):
        rng = SplitMix64(seed)
        edges = {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < spec.p}
        cap = 50 * n + 100
        for _ in range(cap):
            _bridge(rng, n, edges)
            g = Graph(n, edges)
            emb = find_induced(g, S223) or find_induced(g, "K4")
            if emb is None:
                out, _ = _permute(rng, n, g.edges)
                return out
            edges.discard(rng.choice(_embedding_edges(g, emb)))
        seed = rng.derive(attempt + 1)
    raise GenerationError(f"no S_{{2,2,3}}-free graph for {spec}")


def _non_bridges(n: int, edges: set[Edge], cands: list[Edge]) -> list[Edge]:
    out = []
    for e in cands:
        rest = edges - {e}
        if len(connected_components(Graph(n, rest))) == 1:
            out.append(e)
    return out


def gen_planted(spec: GenSpec, retries: int = 8) -> tuple[Graph, list[Edge]]:
    """Connected S_{2,2,3}-free graph with a planted d.i.m. of ``spec.k`` edges.

    Vertices ``0..2k-1`` are black in pairs, the rest white; only
    white-black edges are added, so the pairs stay a d.i.m. throughout.
    """
    k, nw = spec.k, spec.n_white
    n = 2 * k + nw
    if k < 1:
        raise ValueError("need at least one planted edge")
    if k > 1 and nw == 0:
        raise ValueError("several planted edges need white vertices to connect them")
    seed = spec.seed
    planted = [(2 * i, 2 * i + 1) for i in range(k)]
    whites = list(range(2 * k, n))
    blacks = list(range(2 * k))
    for attempt in range(retries):
        rng = SplitMix64(seed)
        edges: set[Edge] = set(planted)
        for w in whites:
            for b in blacks:
                if rng.random() < spec.p:
                    edges.add(norm_edge(w, b))
            if not any(norm_edge(w, b) in edges for b in blacks):
                edges.add(norm_edge(w, rng.choice(blacks)))
        ok = False
        for _ in range(40 * n + 100):
            comps = connected_components(Graph(n, edges))
            if len(comps) > 1:
                # join two components through a white vertex of one of them
                c1, c2 = comps[0], comps[1]
                w_side, b_side = (c1, c2) if any(v >= 2 * k for v in c1) else (c2, c1)
                w = rng.choice(sorted(v for v in w_side if v >= 2 * k))
                b = rng.choice(sorted(v for v in b_side if v < 2 * k))
                edges.add(norm_edge(w, b))
                continue
            g = Graph(n, edges)
            emb = find_induced(g, S223)
            if emb is None:
                ok = True
                break
            cands = [e for e in _embedding_edges(g, emb) if e not in planted]
            cands = _non_bridges(n, edges, cands)
            if cands:
                edges.discard(rng.choice(cands))
            else:
                # every deletable edge is a bridge: add a white-black chord
                # inside the embedding instead, which breaks it as well
                vs = sorted(set(emb.values()))
                chords = [norm_edge(w, b) for w in vs if w >= 2 * k for b in vs
                          if b < 2 * k and not g.has_edge(w, b)]
                if not chords:
                    break
                edges.add(rng.choice(chords))
        if ok:
            g, moved = _permute(rng, n, edges, planted)
            if not verify_dim(g, moved):  # pragma: no cover - construction invariant
                raise GenerationError("planted matching lost")
            return g, sorted(moved)
        seed = rng.derive(attempt + 1)
    raise GenerationError(f"no planted instance for {spec}")


def generate(spec: GenSpec):
    if spec.mode == "random":
        return gen_random_s223free(spec), None
    if spec.mode == "planted":
        return gen_planted(spec)
    raise ValueError(f"unknown mode {spec.mode!r}")
