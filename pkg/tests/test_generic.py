"""Finite-stage generic construction and its verification."""

import pytest

from amalgam.generic import (
    build_generic,
    graph_digest,
    pattern_catalogue,
    verify_age,
    verify_injectivity,
)
from amalgam.graphs import graph, ordered_graph
from amalgam.kernel import PreconditionError, strong_cached
from amalgam.zoo import get_class

KD = get_class("kd")
KPLT = get_class("kp-lt")
KPF = get_class("kp-forall")


def test_empty_build():
    m, log = build_generic(KD, 0, 2, seed=1)
    assert m.n == 0 and log.records == []


def test_catalogue_bound_two_for_kd():
    pats = pattern_catalogue(KD, 2)
    shapes = sorted((len(p.base), p.shape.n, len(p.shape.edges)) for p in pats)
    # empty into vertex, empty into each pair kind, vertex into each pair kind
    assert shapes == [(0, 1, 0), (0, 2, 0), (0, 2, 1), (1, 2, 0), (1, 2, 1)]


def test_catalogue_bound_capped():
    with pytest.raises(PreconditionError):
        pattern_catalogue(KD, 6)


def test_build_serves_vertex_and_edge_tasks():
    m, _ = build_generic(KD, 30, 2, seed=3)
    # the catalogue forces closed single vertices, a closed edge, and a
    # second component (the nonadjacent-pair task needs unreachability)
    assert m.n >= 3 and m.edges
    edges = sorted(m.edges)
    assert strong_cached(KD, (0,), m)
    assert strong_cached(KD, edges[0], m)
    from amalgam.graphs import distance_matrix, INF

    d = distance_matrix(m)
    assert any(d[u][v] == INF for u in m.vertices for v in m.vertices)


def test_build_determinism_and_seed_sensitivity():
    _, log1 = build_generic(KD, 25, 2, seed=9)
    _, log2 = build_generic(KD, 25, 2, seed=9)
    _, log3 = build_generic(KD, 25, 2, seed=10)
    assert log1.digest() == log2.digest()
    assert log1.digest() != log3.digest()


def test_build_chain_is_strong_at_every_stage():
    _, log = build_generic(KD, 20, 2, seed=5, keep_snapshots=True)
    snaps = log.snapshots
    for prev, nxt in zip(snaps, snaps[1:]):
        assert strong_cached(KD, tuple(prev.vertices), nxt)


def test_build_coverage_monotone():
    _, log = build_generic(KD, 30, 2, seed=4, keep_snapshots=True)
    unmet_counts = []
    for snap in log.snapshots[::5]:
        unmet_counts.append(len(verify_injectivity(KD, snap, 2).unmet))
    assert all(a >= b for a, b in zip(unmet_counts, unmet_counts[1:]))
    assert unmet_counts[-1] == 0


def test_build_kp_lt_grows_paths_to_catalogue_bound():
    m, _ = build_generic(KPLT, 40, 3, seed=2)
    assert KPF.membership(m)
    # successor-edge runs of two edges exist (the catalogue's largest),
    # and every run is anchored at a vertex with no lower edge
    runs = []
    for start in m.vertices:
        down, up = None, None
        for y in m.neighbors(start):
            if m.order[y] < m.order[start]:
                down = y
        if down is not None:
            continue
        length = 0
        cur = start
        while True:
            nxt = [y for y in m.neighbors(cur) if m.order[y] > m.order[cur]]
            if not nxt:
                break
            cur = nxt[0]
            length += 1
        runs.append(length)
    assert runs and max(runs) == 2


def test_verify_injectivity_reports_unmet():
    two_isolated = graph(2)
    rep = verify_injectivity(KD, two_isolated, 2)
    # the edge extension of a vertex has nowhere to land
    assert any(p.shape.edges for p, _ in rep.unmet)
    assert rep.total > 0 and rep.met < rep.total


def test_verify_injectivity_anchor_restriction():
    m = graph(3)
    full = verify_injectivity(KD, m, 2)
    trimmed = verify_injectivity(KD, m, 2, anchors_within=(0,))
    assert trimmed.total < full.total


def test_verify_age():
    m, _ = build_generic(KD, 10, 2, seed=1)
    assert verify_age(KD, m)
    assert verify_age(KPF, ordered_graph(3, [(0, 1)]))
    assert not verify_age(KPF, graph(3, [(0, 2)], order=(0, 1, 2)))
    assert verify_age(KD, graph(0))


def test_stage_log_format_and_digest():
    m, log = build_generic(KD, 5, 2, seed=0)
    text = log.format()
    assert text.startswith("# build kd")
    assert f"digest {log.digest()}" in text
    assert graph_digest(m) == log.records[-1].snapshot
