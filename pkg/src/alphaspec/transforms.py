"""Arc surgeries whose effect on the spectral radius is order-controlled."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .digraph import Digraph

__all__ = ["TransformRecord", "redirect_in_arcs", "subdivide_arc"]


@dataclass(frozen=True)
class TransformRecord:
    before: Digraph
    after: Digraph
    kind: str
    details: dict


def redirect_in_arcs(G: Digraph, p: int, q: int, sources: Iterable[int]) -> TransformRecord:
    """Move the in-arcs of p coming from the given sources over to q.

    Every source must currently point at p and must not already point at q
    (and must differ from q), so the move neither drops nor duplicates arcs.
    When the Perron entry of q weakly dominates that of p, the move cannot
    decrease the spectral radius.
    """
    for v in (p, q):
        if not 0 <= v < G.n:
            raise ValueError(f"vertex {v} out of range for n={G.n}")
    if p == q:
        raise ValueError("p and q must be distinct")
    src = sorted(set(int(t) for t in sources))
    if not src:
        raise ValueError("need at least one source vertex")
    for t in src:
        if not 0 <= t < G.n:
            raise ValueError(f"source {t} out of range for n={G.n}")
        if t == q:
            raise ValueError(f"source {t} coincides with the target q")
        if not G.has_arc(t, p):
            raise ValueError(f"source {t} is not an in-neighbor of p={p}")
        if G.has_arc(t, q):
            raise ValueError(f"source {t} already points at q={q}")
    after = Digraph(
        G.n,
        (G.arcs - {(t, p) for t in src}) | {(t, q) for t in src},
    )
    return TransformRecord(
        before=G,
        after=after,
        kind="redirect_in_arcs",
        details={"p": p, "q": q, "sources": tuple(src)},
    )


def _is_big_cycle(G: Digraph) -> bool:
    # a strongly connected digraph with all out-degrees 1 is a directed cycle
    if G.n < 3 or G.num_arcs != G.n:
        return False
    if any(m.bit_count() != 1 for m in G.out_masks):
        return False
    from .digraph import is_strongly_connected

    return is_strongly_connected(G)


def subdivide_arc(G: Digraph, arc: tuple[int, int]) -> TransformRecord:
    """Replace arc (u, v) by u -> w -> v with w a fresh vertex.

    Refused on directed cycles of length >= 3, where the radius comparison
    the operation exists for is vacuous (the digon is accepted: subdividing
    it gives the directed triangle).  Subdivision never increases the radius
    of a strongly connected digraph.
    """
    u, v = arc
    if not G.has_arc(u, v):
        raise ValueError(f"arc {(u, v)} is absent")
    if _is_big_cycle(G):
        raise ValueError(
            "subdividing a directed cycle only yields a longer cycle; "
            "the comparison this operation supports excludes that case"
        )
    w = G.n
    after = Digraph(G.n + 1, (G.arcs - {(u, v)}) | {(u, w), (w, v)})
    return TransformRecord(
        before=G,
        after=after,
        kind="subdivide_arc",
        details={"arc": (u, v), "new_vertex": w},
    )
