"""Closure fixpoints, resolutions, and the closedness certificate."""

import pytest

from amalgam.canon import subsets
from amalgam.closure import (
    ChiStrategy,
    ClosureMode,
    enumerate_minimal_resolutions,
    is_closed_copy,
    is_minimal_resolution,
    mcl,
    resolve,
)
from amalgam.graphs import cycle_graph, graph, ordered_graph
from amalgam.kernel import (
    BudgetExceededError,
    PreconditionError,
    is_strong_bruteforce,
    members_up_to,
    strong_cached,
)
from amalgam.zoo import get_class

KD = get_class("kd")
KH = get_class("kh")
KPLT = get_class("kp-lt")
KPF = get_class("kp-forall")
KM = get_class("km")


def test_mcl_four_cycle_adds_both_geodesics():
    rep = mcl(KD, (0, 2), cycle_graph(4))
    assert rep.result == (0, 1, 2, 3)
    assert rep.mode is ClosureMode.MCL
    assert rep.layers[0] == (0, 2)


def test_mcl_of_strong_set_is_identity():
    rep = mcl(KD, (0, 1), cycle_graph(4))
    assert rep.result == (0, 1)


def test_mcl_kp_forall_spreads_over_component():
    chain = ordered_graph(3, [(0, 1), (1, 2)])
    assert mcl(KPF, (1,), chain).result == (0, 1, 2)


def test_resolve_four_cycle_takes_one_geodesic():
    c4 = cycle_graph(4)
    assert resolve(KD, (0, 2), c4).result == (0, 1, 2)
    assert resolve(KD, (0, 2), c4, ChiStrategy("revlex")).result == (0, 2, 3)


def test_resolve_of_strong_set_is_identity():
    assert resolve(KD, (0, 1), cycle_graph(4)).result == (0, 1)


def test_resolve_kp_lt_descends_to_minimum():
    p5 = ordered_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    assert resolve(KPLT, (3,), p5).result == (0, 1, 2, 3)


def test_resolve_requires_comparator():
    with pytest.raises(PreconditionError):
        resolve(KH, (0, 2), cycle_graph(4))


def test_resolve_contained_in_mcl_everywhere():
    for m in members_up_to(KD, 5):
        for a in subsets(m.vertices):
            r = resolve(KD, a, m)
            big = mcl(KD, a, m)
            assert set(r.result) <= set(big.result)
            assert is_strong_bruteforce(KD, r.result, m)
            assert is_strong_bruteforce(KD, big.result, m)


def test_layer_growth_within_resource_bound():
    rep = resolve(KD, (0, 2), cycle_graph(4))
    for prev, nxt in zip(rep.layers, rep.layers[1:]):
        assert set(prev) < set(nxt)
        # each sweep adds at most one extension per base subset
        assert len(nxt) - len(prev) <= (1 << len(prev)) * 4


def test_minimal_resolution_examples():
    c4 = cycle_graph(4)
    assert is_minimal_resolution(KD, (0, 2), (0, 1, 2), c4)
    assert not is_minimal_resolution(KD, (0, 2), (0, 1, 2, 3), c4)
    assert is_minimal_resolution(KD, (0, 1), (0, 1), c4)
    with pytest.raises(PreconditionError):
        is_minimal_resolution(KD, (0, 2), (0, 2), c4)  # not a resolution


def test_enumerate_minimal_resolutions_four_cycle():
    sets = enumerate_minimal_resolutions(KD, (0, 2), cycle_graph(4))
    assert sets == [(0, 1, 2), (0, 2, 3)]
    for b in sets:
        assert is_strong_bruteforce(KD, b, cycle_graph(4))


def test_enumerate_minimal_resolutions_strong_input():
    assert enumerate_minimal_resolutions(KD, (0, 1), cycle_graph(4)) == [(0, 1)]


def test_unique_resolutions_match_mcl_for_intersection_classes():
    for m in members_up_to(KH, 4):
        for a in subsets(m.vertices):
            sets = enumerate_minimal_resolutions(KH, a, m)
            assert len(sets) == 1
            assert sets[0] == mcl(KH, a, m).result


def test_is_closed_copy_examples():
    c4 = cycle_graph(4)
    assert is_closed_copy(KD, (0, 1, 2), c4)
    assert not is_closed_copy(KD, (0, 2), c4)
    assert is_closed_copy(KD, (0, 1, 2, 3), c4)
    # a longer joining path closed off while a shorter one exists outside
    m = graph(5, [(0, 2), (2, 3), (1, 3), (0, 4), (1, 4)])
    long_way = (0, 1, 2, 3)
    assert strong_cached(KD, (0, 1, 2, 3), m) is False
    assert not is_closed_copy(KD, long_way, m)


def test_is_closed_copy_rejects_non_finitary():
    with pytest.raises(PreconditionError):
        is_closed_copy(KM, (0, 1), cycle_graph(4))
    with pytest.raises(PreconditionError):
        is_closed_copy(KH, (0, 1), cycle_graph(4))


def test_boundary_flag_marks_exits_from_interior():
    c4 = cycle_graph(4)
    rep = resolve(KD, (0, 2), c4, interior=(0, 1, 2))
    assert not rep.boundary_flag
    rep = resolve(KD, (0, 2), c4, interior=(0, 2, 3))
    assert rep.boundary_flag


def test_budget_guard_on_large_ambient(monkeypatch):
    big = graph(14)
    with pytest.raises(BudgetExceededError):
        # unbounded bases over a large ambient are refused
        mcl(get_class("kalpha", "618/1000"), (0,), big)
