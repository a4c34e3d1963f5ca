"""Generators for the named digraph families.

All generators are deterministic and use fixed vertex numbering conventions:

* ``c_ng(n, g)``       -- cycle 0..g-1 plus a path through g..n-1 back to 0.
* ``b_nd(n, d)``       -- complete digraph on the last d vertices plus a
                          directed path through the n-d external vertices.
* ``k_nkm(n, k, m)``   -- blocks V1 = [0, m), S = [m, m+k), V2 = [m+k, n);
                          digons inside blocks and between S and the rest,
                          one-way arcs V1 -> V2.
* ``g0(n, d, alpha)``  -- d nearly equal parts, digons between parts,
                          an extremal tournament inside each part.
* ``h4(n, k, a)``      -- two complete blocks, all arcs from the second to the
                          first, and all arcs from a k-subset of the first to
                          a k-subset of the second.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .digraph import Digraph, from_arcs

__all__ = [
    "FamilySpec",
    "basic_family",
    "path",
    "cycle",
    "complete",
    "c_ng",
    "b_nd",
    "k_nkm",
    "tournament",
    "g0",
    "h4",
    "circulant",
    "build_family",
]

TOURNAMENT_KINDS = ("transitive", "rotational", "brualdi_li", "extremal_bruteforce")
BRUTEFORCE_CAP = 7  # 2^21 orientations; n = 7 additionally needs the long-runs flag


def path(n: int) -> Digraph:
    """Directed path 0 -> 1 -> ... -> n-1 (not strongly connected for n >= 2)."""
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return Digraph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Digraph:
    if n < 2:
        raise ValueError(f"directed cycle needs n >= 2, got {n}")
    return Digraph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Digraph:
    if n < 1:
        raise ValueError(f"complete digraph needs n >= 1, got {n}")
    return Digraph(n, frozenset((u, v) for u in range(n) for v in range(n) if u != v))


def basic_family(kind: str, n: int) -> Digraph:
    builders = {"path": path, "cycle": cycle, "complete": complete}
    if kind not in builders:
        raise ValueError(f"unknown basic family {kind!r}; expected one of {sorted(builders)}")
    return builders[kind](n)


def c_ng(n: int, g: int, primed: bool = False) -> Digraph:
    """Cycle of length g with a path through the remaining vertices.

    Vertices 0..g-1 form the cycle; the path leaves the cycle at g-1, runs
    through g, g+1, ..., n-1 and re-enters at 0.  The primed variant re-enters
    at g-1 instead, closing a second short cycle.
    """
    if not 2 <= g <= n - 1:
        raise ValueError(f"need 2 <= g <= n-1, got g={g}, n={n}")
    arcs = [(i, i + 1) for i in range(g - 1)]
    arcs.append((g - 1, 0))
    arcs.extend((i, i + 1) for i in range(g - 1, n - 1))
    arcs.append((n - 1, g - 1) if primed else (n - 1, 0))
    return from_arcs(n, arcs)


def b_nd(n: int, d: int, primed: bool = False) -> Digraph:
    """Complete digraph on the last d vertices with an attached directed path.

    The path starts at clique vertex n-d, runs through the external vertices
    0..n-d-1 in order, and ends at clique vertex n-1.  The primed variant
    sends the last path arc back to the start vertex n-d instead.
    """
    if not 2 <= d <= n - 1:
        raise ValueError(f"need 2 <= d <= n-1, got d={d}, n={n}")
    start = n - d
    end = n - 1
    arcs = [
        (u, v)
        for u in range(n - d, n)
        for v in range(n - d, n)
        if u != v
    ]
    prev = start
    for x in range(n - d):
        arcs.append((prev, x))
        prev = x
    arcs.append((prev, start) if primed else (prev, end))
    return from_arcs(n, arcs)


def k_nkm(n: int, k: int, m: int) -> Digraph:
    """Complete split-like digraph with a k-vertex cut S.

    V1 (m vertices), S (k vertices) and V2 (n-k-m vertices) are each complete;
    S is joined by digons to everything; V1 sends one-way arcs to V2.
    """
    if k < 1 or m < 1 or n - k - m < 1:
        raise ValueError(f"need k >= 1, m >= 1 and n-k-m >= 1, got n={n}, k={k}, m={m}")
    v1 = range(0, m)
    s = range(m, m + k)
    v2 = range(m + k, n)
    arcs: list[tuple[int, int]] = []
    for block in (v1, s, v2):
        arcs.extend((u, v) for u in block for v in block if u != v)
    for u in s:
        for v in list(v1) + list(v2):
            arcs.append((u, v))
            arcs.append((v, u))
    arcs.extend((u, v) for u in v1 for v in v2)
    return from_arcs(n, arcs)


def _transitive(n: int) -> Digraph:
    return Digraph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))


def _rotational(n: int) -> Digraph:
    if n % 2 == 0:
        raise ValueError(f"rotational tournament needs odd n, got {n}")
    half = (n - 1) // 2
    return Digraph(
        n, frozenset((i, (i + s) % n) for i in range(n) for s in range(1, half + 1))
    )


def _brualdi_li(n: int) -> Digraph:
    """Two transitive halves; upper-half vertex i beats lower-half vertex j iff i >= j."""
    if n % 2 != 0 or n < 2:
        raise ValueError(f"this tournament is defined for even n >= 2, got {n}")
    m = n // 2
    arcs = []
    for i in range(m):
        for j in range(i + 1, m):
            arcs.append((i, j))
            arcs.append((m + i, m + j))
    for i in range(m):
        for j in range(m):
            if i >= j:
                arcs.append((i, m + j))
            else:
                arcs.append((m + j, i))
    return from_arcs(n, arcs)


def _tournament_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _tournament_from_code(n: int, code: int, pairs: list[tuple[int, int]]) -> Digraph:
    arcs = []
    for p, (i, j) in enumerate(pairs):
        if (code >> p) & 1:
            arcs.append((i, j))
        else:
            arcs.append((j, i))
    return Digraph(n, frozenset(arcs))


def _radius_batch_eig(adj: np.ndarray, alpha: float) -> np.ndarray:
    """Spectral radii of alpha matrices for a stack of adjacency matrices.

    Dense eigenvalues instead of power iteration: tournaments may be
    reducible, where the certified power path refuses to run.
    """
    m = (1.0 - alpha) * adj
    idx = np.arange(adj.shape[1])
    m[:, idx, idx] += alpha * adj.sum(axis=2)
    return np.abs(np.linalg.eigvals(m)).max(axis=1)


def _extremal_tournament(n: int, alpha: float, long_runs_enabled: bool) -> Digraph:
    if n > BRUTEFORCE_CAP:
        raise ValueError(
            f"exhaustive tournament search is capped at n = {BRUTEFORCE_CAP}, got {n}"
        )
    if n == BRUTEFORCE_CAP and not long_runs_enabled:
        raise ValueError(
            f"n = {BRUTEFORCE_CAP} scans 2^{BRUTEFORCE_CAP * (BRUTEFORCE_CAP - 1) // 2} "
            "orientations; enable long runs to allow it"
        )
    if n == 1:
        return Digraph(1, frozenset())
    pairs = _tournament_pairs(n)
    nbits = len(pairs)
    total = 1 << nbits
    chunk = 4096
    best_val = -np.inf
    best_code = 0
    rows_idx = np.array([p[0] for p in pairs])
    cols_idx = np.array([p[1] for p in pairs])
    for lo in range(0, total, chunk):
        codes = np.arange(lo, min(lo + chunk, total), dtype=np.int64)
        bits = (codes[:, None] >> np.arange(nbits)) & 1
        adj = np.zeros((codes.size, n, n), dtype=np.float64)
        adj[:, rows_idx, cols_idx] = bits
        adj[:, cols_idx, rows_idx] = 1 - bits
        vals = _radius_batch_eig(adj, alpha)
        cmax = float(vals.max())
        if cmax > best_val + 1e-12:
            tie = np.flatnonzero(vals >= cmax - 1e-12)
            best_val = cmax
            best_code = int(codes[tie[0]])
    return _tournament_from_code(n, best_code, pairs)


def tournament(
    kind: str,
    n: int,
    alpha: float | None = None,
    long_runs_enabled: bool = False,
) -> Digraph:
    """Named tournament generators plus the exhaustive extremal search."""
    if n < 1:
        raise ValueError(f"tournament needs n >= 1, got {n}")
    if kind == "transitive":
        return _transitive(n)
    if kind == "rotational":
        return _rotational(n)
    if kind == "brualdi_li":
        return _brualdi_li(n)
    if kind == "extremal_bruteforce":
        if alpha is None:
            alpha = 0.0
        return _extremal_tournament(n, float(alpha), long_runs_enabled)
    raise ValueError(f"unknown tournament kind {kind!r}; expected one of {TOURNAMENT_KINDS}")


def g0(n: int, d: int, alpha: float, long_runs_enabled: bool = False) -> Digraph:
    """d nearly equal parts with all digons between parts and extremal
    tournaments inside parts.

    At alpha = 0 the inner tournament is rotational (odd part) or the
    two-transitive-halves tournament (even part); for alpha > 0 no closed-form
    winner is known, so each part runs the exhaustive search (part size <= 7).
    """
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    l, r = divmod(n, d)
    sizes = [l + 1] * r + [l] * (d - r)
    inner: dict[int, Digraph] = {}
    for size in set(sizes):
        if alpha == 0.0:
            inner[size] = _rotational(size) if size % 2 else _brualdi_li(size)
        else:
            inner[size] = _extremal_tournament(size, float(alpha), long_runs_enabled)
    arcs: list[tuple[int, int]] = []
    offsets = []
    start = 0
    for size in sizes:
        offsets.append((start, size))
        t = inner[size]
        arcs.extend((start + u, start + v) for u, v in t.arcs)
        start += size
    for ai, (sa, za) in enumerate(offsets):
        for bi, (sb, zb) in enumerate(offsets):
            if ai == bi:
                continue
            arcs.extend((sa + u, sb + v) for u in range(za) for v in range(zb))
    return from_arcs(n, arcs)


def h4(n: int, k: int, a: int) -> Digraph:
    """Two complete blocks of sizes a and n-a; every arc from the second block
    back to the first; all k*k arcs from the first k vertices of block one to
    the first k vertices of block two."""
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if not k + 2 <= a <= n - k - 2:
        raise ValueError(f"need k+2 <= a <= n-k-2, got n={n}, k={k}, a={a}")
    arcs = []
    for block in (range(0, a), range(a, n)):
        arcs.extend((u, v) for u in block for v in block if u != v)
    arcs.extend((y, x) for y in range(a, n) for x in range(0, a))
    arcs.extend((u, a + w) for u in range(k) for w in range(k))
    return from_arcs(n, arcs)


def circulant(n: int, steps: Iterable[int]) -> Digraph:
    """Arcs i -> i+s (mod n) for every step s; step 1 must be present."""
    steps = sorted(set(int(s) for s in steps))
    if n < 2:
        raise ValueError(f"circulant needs n >= 2, got {n}")
    if not steps:
        raise ValueError("steps must be nonempty")
    if any(not 1 <= s <= n - 1 for s in steps):
        raise ValueError(f"steps must lie in [1, n-1], got {steps}")
    if 1 not in steps:
        raise ValueError("step 1 is required so the digraph is strongly connected")
    return Digraph(n, frozenset((i, (i + s) % n) for i in range(n) for s in steps))


@dataclass(frozen=True)
class FamilySpec:
    """A named family plus its parameters, as parsed from CLI flags."""

    name: str
    params: dict = field(default_factory=dict)

    def build(self) -> Digraph:
        return build_family(self.name, **self.params)


def build_family(name: str, **params) -> Digraph:
    builders = {
        "path": path,
        "cycle": cycle,
        "complete": complete,
        "c_ng": c_ng,
        "b_nd": b_nd,
        "k_nkm": k_nkm,
        "tournament": tournament,
        "g0": g0,
        "h4": h4,
        "circulant": circulant,
    }
    if name not in builders:
        raise ValueError(f"unknown family {name!r}; expected one of {sorted(builders)}")
    return builders[name](**params)
