"""Arc surgeries and their radius monotonicity on seeded random inputs."""
import numpy as np
import pytest

from alphaspec import (
    TransformRecord,
    b_nd,
    c_ng,
    complete,
    cycle,
    from_arcs,
    is_isomorphic,
    is_strongly_connected,
    redirect_in_arcs,
    spectral_radius,
    spectral_radius_general,
    subdivide_arc,
)


def random_strong(rng, n):
    perm = rng.permutation(n)
    arcs = {(int(perm[i]), int(perm[(i + 1) % n])) for i in range(n)}
    for u in range(n):
        for v in range(n):
            if u != v and rng.random() < 0.3:
                arcs.add((u, v))
    return from_arcs(n, arcs)


# ---------------------------------------------------------------------------
# redirecting in-arcs

def test_redirect_c4_exact_arcs():
    rec = redirect_in_arcs(cycle(4), 0, 2, [3])
    assert isinstance(rec, TransformRecord)
    assert rec.kind == "redirect_in_arcs"
    assert rec.details == {"p": 0, "q": 2, "sources": (3,)}
    assert rec.before == cycle(4)
    assert rec.after.arcs == frozenset({(0, 1), (1, 2), (2, 3), (3, 2)})
    assert not is_strongly_connected(rec.after)


def test_redirect_preserves_arc_count():
    g = complete(5).remove_arcs([(0, 1), (2, 1)])
    rec = redirect_in_arcs(g, 0, 1, [2])  # 2 -> 0 becomes 2 -> 1
    assert rec.after.num_arcs == g.num_arcs
    assert rec.after.has_arc(2, 1) and not rec.after.has_arc(2, 0)


def test_redirect_validation():
    g = cycle(4)
    with pytest.raises(ValueError):
        redirect_in_arcs(g, 0, 0, [3])
    with pytest.raises(ValueError):
        redirect_in_arcs(g, 0, 2, [])
    with pytest.raises(ValueError):
        redirect_in_arcs(g, 0, 2, [1])  # 1 is not an in-neighbor of 0
    with pytest.raises(ValueError):
        redirect_in_arcs(g, 0, 2, [2])  # source coincides with the target
    with pytest.raises(ValueError):
        redirect_in_arcs(g, 0, 5, [3])


def test_redirect_rejects_existing_target_arc():
    g = cycle(3).add_arcs([(2, 1)])
    # 2 -> 0 exists but 2 -> 1 does too, so the move would collapse arcs
    with pytest.raises(ValueError):
        redirect_in_arcs(g, 0, 1, [2])


def test_redirect_monotone_when_target_dominates():
    # move in-arcs toward the vertex with the larger Perron entry: the
    # radius may only go up (weakly)
    rng = np.random.default_rng(1234)
    done = 0
    while done < 40:
        g = random_strong(rng, int(rng.integers(3, 7)))
        alpha = float(rng.uniform(0.0, 0.9))
        res = spectral_radius(g, alpha)
        x = res.perron
        order = np.argsort(-x)
        q = int(order[0])
        found = None
        for p in map(int, order[1:]):
            if x[q] < x[p]:
                continue
            cands = [
                t
                for t in g.in_neighbors(p)
                if t != q and not g.has_arc(t, q)
            ]
            if cands:
                found = (p, cands[: 1 + int(rng.integers(0, len(cands)))])
                break
        if found is None:
            continue
        p, srcs = found
        rec = redirect_in_arcs(g, p, q, srcs)
        rad_after = spectral_radius_general(rec.after, alpha)
        assert rad_after >= res.radius - 1e-9
        done += 1


# ---------------------------------------------------------------------------
# subdividing arcs

def test_subdivide_digon_gives_triangle():
    rec = subdivide_arc(complete(2), (0, 1))
    assert rec.after.n == 3
    assert is_isomorphic(rec.after, cycle(3))
    assert rec.details == {"arc": (0, 1), "new_vertex": 2}


def test_subdivide_tail_extends_family():
    rec = subdivide_arc(c_ng(6, 3), (3, 4))
    assert rec.after.n == 7
    assert is_isomorphic(rec.after, c_ng(7, 3))


def test_subdivide_rejects_long_cycles_and_missing_arcs():
    with pytest.raises(ValueError):
        subdivide_arc(cycle(5), (0, 1))
    with pytest.raises(ValueError):
        subdivide_arc(complete(3), (0, 0))
    with pytest.raises(ValueError):
        subdivide_arc(c_ng(5, 2), (0, 2))


def test_subdivide_never_increases_radius():
    cases = [
        (complete(4), (0, 1)),
        (b_nd(6, 3), (3, 4)),
        (c_ng(6, 2), (0, 1)),
        (complete(2), (0, 1)),
    ]
    rng = np.random.default_rng(77)
    for _ in range(30):
        g = random_strong(rng, int(rng.integers(3, 7)))
        if g.num_arcs > g.n:  # not a bare cycle
            arcs = sorted(g.arcs)
            cases.append((g, arcs[int(rng.integers(0, len(arcs)))]))
    for g, arc in cases:
        for alpha in (0.0, 0.5):
            before = spectral_radius(g, alpha).radius
            rec = subdivide_arc(g, arc)
            after = spectral_radius(rec.after, alpha).radius
            assert after <= before + 1e-9, (g, arc, alpha)


def test_subdivide_keeps_strong_connectivity():
    rng = np.random.default_rng(99)
    for _ in range(20):
        g = random_strong(rng, 5)
        if g.num_arcs == g.n:
            continue
        arc = sorted(g.arcs)[0]
        assert is_strongly_connected(subdivide_arc(g, arc).after)
