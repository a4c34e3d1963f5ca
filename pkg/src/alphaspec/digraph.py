"""Finite simple digraphs on vertex set {0, ..., n-1}.

Loops are forbidden, antiparallel pairs (digons) are allowed.  The adjacency
structure is kept both as a frozenset of arcs (the identity of the digraph)
and as per-vertex neighbour bitmasks, which all combinatorial routines run on.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Digraph",
    "DegreeProfile",
    "NotStronglyConnected",
    "from_arcs",
    "is_strongly_connected",
    "girth",
    "clique_number",
    "vertex_connectivity",
    "arc_connectivity",
    "degree_profile",
    "join",
    "union",
    "induced",
    "is_isomorphic",
    "from_text",
    "to_text",
]


class NotStronglyConnected(ValueError):
    """Raised when an operation needs strong connectivity and the input lacks it."""


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: frozenset[tuple[int, int]]

    # cached_property writes straight into __dict__, which a frozen dataclass allows
    @cached_property
    def out_masks(self) -> tuple[int, ...]:
        rows = [0] * self.n
        for u, v in self.arcs:
            rows[u] |= 1 << v
        return tuple(rows)

    @cached_property
    def in_masks(self) -> tuple[int, ...]:
        cols = [0] * self.n
        for u, v in self.arcs:
            cols[v] |= 1 << u
        return tuple(cols)

    @cached_property
    def sorted_arcs(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.arcs))

    @property
    def num_arcs(self) -> int:
        return len(self.arcs)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def out_neighbors(self, u: int) -> tuple[int, ...]:
        return tuple(_bits(self.out_masks[u]))

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self.in_masks[v]))

    def out_degree(self, u: int) -> int:
        return self.out_masks[u].bit_count()

    def in_degree(self, v: int) -> int:
        return self.in_masks[v].bit_count()

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.float64)
        for u, v in self.arcs:
            a[u, v] = 1.0
        return a

    def add_arcs(self, new: Iterable[tuple[int, int]]) -> "Digraph":
        return from_arcs(self.n, self.arcs | set(new))

    def remove_arcs(self, gone: Iterable[tuple[int, int]]) -> "Digraph":
        gone = set(gone)
        missing = gone - self.arcs
        if missing:
            raise ValueError(f"cannot remove absent arc {sorted(missing)[0]}")
        return Digraph(self.n, self.arcs - gone)

    def relabel(self, perm: Sequence[int]) -> "Digraph":
        """Image under vertex map i -> perm[i]; perm must be a permutation of range(n)."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm is not a permutation of the vertex set")
        return Digraph(self.n, frozenset((perm[u], perm[v]) for u, v in self.arcs))

    def reverse(self) -> "Digraph":
        return Digraph(self.n, frozenset((v, u) for u, v in self.arcs))

    def __repr__(self) -> str:  # pragma: no cover - debug aid
        return f"Digraph(n={self.n}, arcs={sorted(self.arcs)})"


@dataclass(frozen=True)
class DegreeProfile:
    out_degrees: tuple[int, ...]
    in_degrees: tuple[int, ...]
    min_out: int
    max_out: int
    min_in: int
    min_over_both: int


def from_arcs(n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
    """Validating constructor: vertices in range, no loops, duplicates collapsed."""
    if n < 1:
        raise ValueError(f"need at least one vertex, got n={n}")
    arc_set = set()
    for arc in arcs:
        u, v = arc
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"arc {(u, v)} out of range for n={n}")
        if u == v:
            raise ValueError(f"loop at vertex {u} is not allowed")
        arc_set.add((u, v))
    return Digraph(n, frozenset(arc_set))


# ---------------------------------------------------------------------------
# bitmask internals (shared with the enumeration scan, which bypasses Digraph)

def _bits(mask: int):
    while mask:
        b = mask & -mask
        mask ^= b
        yield b.bit_length() - 1


def _reach(rows: Sequence[int], start_mask: int) -> int:
    """Set of vertices reachable from the seed mask, seed included."""
    seen = start_mask
    frontier = start_mask
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            m ^= b
            nxt |= rows[b.bit_length() - 1]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def _transpose(rows: Sequence[int], n: int) -> list[int]:
    cols = [0] * n
    for i in range(n):
        m = rows[i]
        bi = 1 << i
        while m:
            b = m & -m
            m ^= b
            cols[b.bit_length() - 1] |= bi
    return cols


def _is_strong(rows: Sequence[int], cols: Sequence[int], n: int) -> bool:
    full = (1 << n) - 1
    if _reach(rows, 1) != full:
        return False
    return _reach(cols, 1) == full


def _girth(rows: Sequence[int], cols: Sequence[int], n: int) -> int | None:
    for i in range(n):
        if rows[i] & cols[i]:
            return 2
    best = None
    for v in range(n):
        bit_v = 1 << v
        seen = frontier = rows[v]
        depth = 1
        limit = (best or n + 1) - 1
        while frontier and depth < limit:
            nxt = 0
            m = frontier
            while m:
                b = m & -m
                m ^= b
                nxt |= rows[b.bit_length() - 1]
            depth += 1
            frontier = nxt & ~seen
            seen |= frontier
            if frontier & bit_v:
                best = depth
                break
        if best == 3:
            break
    return best


def _clique_number(und: Sequence[int], n: int) -> int:
    """Max clique of the undirected graph given by symmetric bitmask rows.

    Bron-Kerbosch with pivoting; the pivot is the vertex of P|X covering the
    most of P, and only non-covered candidates branch.
    """
    best = 1 if n >= 1 else 0

    def expand(size: int, p: int, x: int) -> None:
        nonlocal best
        if p == 0:
            if x == 0 and size > best:
                best = size
            return
        if size + p.bit_count() <= best:
            return
        pivot = -1
        cover = -1
        m = p | x
        while m:
            b = m & -m
            m ^= b
            u = b.bit_length() - 1
            c = (p & und[u]).bit_count()
            if c > cover:
                cover = c
                pivot = u
        cand = p & ~und[pivot]
        while cand:
            b = cand & -cand
            cand ^= b
            v = b.bit_length() - 1
            expand(size + 1, p & und[v], x & und[v])
            p ^= b
            x |= b

    expand(0, (1 << n) - 1, 0)
    return best


def _unit_maxflow(radj: list[int], s: int, t: int, cap: int) -> int:
    """Max flow on a unit-capacity digraph given as residual bitmask rows.

    radj is mutated (arcs flip as paths are augmented).  Stops once the flow
    reaches cap, since callers only need min(flow, cap).
    """
    flow = 0
    bit_t = 1 << t
    while flow < cap:
        parent = {}
        seen = 1 << s
        frontier = seen
        while frontier and not (seen & bit_t):
            nxt = 0
            m = frontier
            while m:
                b = m & -m
                m ^= b
                u = b.bit_length() - 1
                new = radj[u] & ~seen & ~nxt
                mm = new
                while mm:
                    bb = mm & -mm
                    mm ^= bb
                    parent[bb.bit_length() - 1] = u
                nxt |= new
            frontier = nxt
            seen |= nxt
        if not (seen & bit_t):
            break
        v = t
        while v != s:
            u = parent[v]
            radj[u] &= ~(1 << v)
            radj[v] |= 1 << u
            v = u
        flow += 1
    return flow


def _arc_connectivity(rows: Sequence[int], cols: Sequence[int], n: int) -> int:
    douts = [rows[i].bit_count() for i in range(n)]
    dins = [cols[i].bit_count() for i in range(n)]
    best = min(min(douts), min(dins))
    # every arc cut separates vertex 0 from some vertex or vice versa
    order = sorted(range(1, n), key=lambda v: min(douts[v], dins[v]))
    for v in order:
        for s, t in ((0, v), (v, 0)):
            if best == 1:
                return 1
            f = _unit_maxflow(list(rows), s, t, best)
            if f < best:
                best = f
    return best


def _vertex_connectivity(
    rows: Sequence[int], cols: Sequence[int], n: int, upper: int | None = None
) -> int:
    full = (1 << n) - 1
    if all(rows[i] == full ^ (1 << i) for i in range(n)):
        return n - 1  # complete digraph: no cut set exists, n-1 by convention
    douts = [rows[i].bit_count() for i in range(n)]
    dins = [cols[i].bit_count() for i in range(n)]
    best = min(min(douts), min(dins))
    if upper is not None and upper < best:
        best = upper
    pairs = [
        (u, v)
        for u in range(n)
        for v in range(n)
        if u != v and not (rows[u] >> v) & 1
    ]
    pairs.sort(key=lambda p: douts[p[0]] + dins[p[1]])
    for u, v in pairs:
        if best == 1:
            return 1
        # split network: node i is "out(i)", node n+i is "in(i)", in->out cap 1
        radj = [rows[i] << n for i in range(n)]
        radj.extend(1 << i for i in range(n))
        f = _unit_maxflow(radj, u, n + v, best)
        if f < best:
            best = f
    return best


# ---------------------------------------------------------------------------
# public operations

def is_strongly_connected(G: Digraph) -> bool:
    """True when every ordered vertex pair is joined by a directed path."""
    if G.n == 1:
        return True
    return _is_strong(G.out_masks, G.in_masks, G.n)


def girth(G: Digraph) -> int | None:
    """Length of a shortest directed cycle, or None when the digraph is acyclic."""
    return _girth(G.out_masks, G.in_masks, G.n)


def clique_number(G: Digraph) -> int:
    """Largest vertex set inducing a complete subdigraph (all digons present)."""
    und = [G.out_masks[i] & G.in_masks[i] for i in range(G.n)]
    return _clique_number(und, G.n)


def _require_connectivity_input(G: Digraph) -> None:
    if G.n < 2:
        raise ValueError("connectivity is undefined on a single vertex")
    if not is_strongly_connected(G):
        raise NotStronglyConnected("connectivity requires a strongly connected digraph")


def vertex_connectivity(G: Digraph) -> int:
    """Minimum vertices whose deletion breaks strong connectivity (n-1 if complete)."""
    _require_connectivity_input(G)
    return _vertex_connectivity(G.out_masks, G.in_masks, G.n)


def arc_connectivity(G: Digraph) -> int:
    """Minimum arcs whose deletion breaks strong connectivity."""
    _require_connectivity_input(G)
    return _arc_connectivity(G.out_masks, G.in_masks, G.n)


def degree_profile(G: Digraph) -> DegreeProfile:
    outs = tuple(m.bit_count() for m in G.out_masks)
    ins = tuple(m.bit_count() for m in G.in_masks)
    return DegreeProfile(
        out_degrees=outs,
        in_degrees=ins,
        min_out=min(outs),
        max_out=max(outs),
        min_in=min(ins),
        min_over_both=min(min(outs), min(ins)),
    )


def union(G: Digraph, H: Digraph) -> Digraph:
    """Disjoint union; H's vertices are shifted up by G.n."""
    shifted = ((u + G.n, v + G.n) for u, v in H.arcs)
    return Digraph(G.n + H.n, G.arcs | frozenset(shifted))


def join(G: Digraph, H: Digraph) -> Digraph:
    """Disjoint union plus all digons between the two parts."""
    base = union(G, H)
    cross = set()
    for u in range(G.n):
        for v in range(G.n, G.n + H.n):
            cross.add((u, v))
            cross.add((v, u))
    return Digraph(base.n, base.arcs | frozenset(cross))


def induced(G: Digraph, vertices: Iterable[int]) -> Digraph:
    """Subdigraph induced by the given vertices, relabelled in sorted order."""
    keep = sorted(set(vertices))
    if not keep:
        raise ValueError("induced subdigraph needs at least one vertex")
    for v in keep:
        if not 0 <= v < G.n:
            raise ValueError(f"vertex {v} out of range for n={G.n}")
    pos = {v: i for i, v in enumerate(keep)}
    arcs = frozenset(
        (pos[u], pos[v]) for u, v in G.arcs if u in pos and v in pos
    )
    return Digraph(len(keep), arcs)


def is_isomorphic(G: Digraph, H: Digraph) -> bool:
    """Permutation search with degree-signature pruning; intended for n <= 8."""
    if G.n != H.n or G.num_arcs != H.num_arcs:
        return False
    n = G.n
    sig_g = [(G.out_degree(v), G.in_degree(v)) for v in range(n)]
    sig_h = [(H.out_degree(v), H.in_degree(v)) for v in range(n)]
    if sorted(sig_g) != sorted(sig_h):
        return False
    # most constrained first: rare signature, then high degree
    from collections import Counter

    freq = Counter(sig_g)
    order = sorted(range(n), key=lambda v: (freq[sig_g[v]], -sum(sig_g[v])))
    g_rows, g_cols = G.out_masks, G.in_masks
    h_rows, h_cols = H.out_masks, H.in_masks
    mapping = [-1] * n
    used = [False] * n

    def extend(idx: int) -> bool:
        if idx == n:
            return True
        u = order[idx]
        for w in range(n):
            if used[w] or sig_h[w] != sig_g[u]:
                continue
            ok = True
            for j in range(idx):
                v = order[j]
                x = mapping[v]
                if ((g_rows[u] >> v) & 1) != ((h_rows[w] >> x) & 1):
                    ok = False
                    break
                if ((g_cols[u] >> v) & 1) != ((h_cols[w] >> x) & 1):
                    ok = False
                    break
            if ok:
                mapping[u] = w
                used[w] = True
                if extend(idx + 1):
                    return True
                used[w] = False
                mapping[u] = -1
        return False

    return extend(0)


# ---------------------------------------------------------------------------
# text format:  "n <N>" header, one "u v" line per arc, '#' comments

def to_text(G: Digraph) -> str:
    lines = [f"n {G.n}"]
    lines.extend(f"{u} {v}" for u, v in G.sorted_arcs)
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Digraph:
    n = None
    arcs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if n is not None:
                raise ValueError(f"line {lineno}: duplicate vertex-count line")
            if len(parts) != 2 or not parts[1].isdigit():
                raise ValueError(f"line {lineno}: expected 'n <count>'")
            n = int(parts[1])
            continue
        if n is None:
            raise ValueError(f"line {lineno}: arc before the 'n <count>' header")
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ValueError(f"line {lineno}: non-integer arc endpoint") from exc
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"line {lineno}: arc {(u, v)} out of range for n={n}")
        if u == v:
            raise ValueError(f"line {lineno}: loop at vertex {u} is not allowed")
        arcs.append((u, v))
    if n is None:
        raise ValueError("missing 'n <count>' header line")
    try:
        return from_arcs(n, arcs)
    except ValueError as exc:
        raise ValueError(str(exc)) from None
