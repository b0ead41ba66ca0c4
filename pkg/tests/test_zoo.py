"""The registered classes: fast predicates, predimension, registry."""

from fractions import Fraction

import pytest

from amalgam.graphs import cycle_graph, graph, ordered_graph, path_graph
from amalgam.kernel import PreconditionError
from amalgam.zoo import (
    AlphaParam,
    ExactZeroError,
    class_names,
    get_class,
    kalpha_dn_obstruction,
    kalpha_is_strong,
    kalpha_membership,
    kc_is_strong,
    kd_is_strong,
    kh_is_strong,
    kh_predim,
    km_is_strong,
    kp_exists_strong,
    kp_forall_strong,
    kp_membership,
    predimension,
)


# -- kd ------------------------------------------------------------------------


def test_kd_edge_endpoints_strong():
    assert kd_is_strong((0, 1), graph(2, [(0, 1)]))
    assert kd_is_strong((0, 1), path_graph(4))


def test_kd_antipodal_pair_not_strong():
    assert not kd_is_strong((0, 2), cycle_graph(4))


def test_kd_consecutive_arc_on_six_cycle():
    assert kd_is_strong((0, 1, 2), cycle_graph(6))
    assert not kd_is_strong((0, 1, 3), cycle_graph(6))


# -- kc ------------------------------------------------------------------------


def test_kc_whole_ambient():
    assert kc_is_strong((0, 1, 2, 3), cycle_graph(4))


def test_kc_distance_two_pair_on_cycle():
    assert not kc_is_strong((0, 2), cycle_graph(4))


def test_kc_isolated_pair_with_far_component():
    m = graph(4, [(2, 3)])
    assert kc_is_strong((0, 1), m)


def test_kc_ignores_chorded_walks():
    # the long way around 1 -> 2 -> 0 -> 3 is not an induced path (0 and
    # 1 are adjacent), so it does not obstruct strength
    m = graph(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
    assert kc_is_strong((0, 1, 3), m)


# -- kh ------------------------------------------------------------------------


def test_kh_deficiency_values():
    assert kh_predim(path_graph(4)) == 0
    assert kh_predim(graph(4, [(0, 1), (0, 2), (0, 3)])) == 1
    assert kh_predim(graph(0)) == 0


def test_kh_bridged_pair_not_strong():
    m = graph(3, [(0, 2), (1, 2)])
    assert not kh_is_strong((0, 1), m)


def test_kh_whole_and_singleton():
    m = cycle_graph(5)
    assert kh_is_strong(tuple(m.vertices), m)
    assert kh_is_strong((0,), m)


# -- km ------------------------------------------------------------------------


def test_km_whole_ambient_and_singleton():
    m = cycle_graph(5)
    assert km_is_strong(tuple(m.vertices), m)
    assert km_is_strong((2,), m)


def test_km_longer_detour_between_connected_pair():
    # the pair is joined by an edge; a detour of length three makes the
    # longest joining path grow
    m = graph(4, [(0, 1), (0, 2), (2, 3), (1, 3)])
    assert not km_is_strong((0, 1), m)


def test_km_unjoined_pairs_impose_nothing():
    # no path inside the pair alone, so a bridge outside is no obstruction
    m = graph(3, [(0, 2), (1, 2)])
    assert km_is_strong((0, 1), m)


# -- kp family --------------------------------------------------------------------


def test_kp_membership_requires_successor_edges():
    assert kp_membership(ordered_graph(3, [(0, 1), (1, 2)]))
    assert not kp_membership(graph(3, [(0, 2)], order=(0, 1, 2)))
    with pytest.raises(PreconditionError):
        kp_membership(graph(2))


def test_kp_forall_component_containment():
    chain = ordered_graph(3, [(0, 1), (1, 2)])
    assert not kp_forall_strong((1,), chain)
    assert kp_forall_strong((0, 1, 2), chain)
    isolated = ordered_graph(3)
    assert kp_forall_strong((1,), isolated)


def test_kp_exists_bullets_on_mid_path():
    chain = ordered_graph(3, [(0, 1), (1, 2)])  # ranks 0 < 1 < 2
    assert not kp_exists_strong((1,), chain, "lt")
    assert kp_exists_strong((0, 1), chain, "lt")
    assert not kp_exists_strong((1, 2), chain, "lt")
    assert kp_exists_strong((1, 2), chain, "gt")
    assert not kp_exists_strong((0, 1), chain, "gt")
    assert kp_exists_strong((0, 1), chain, "eq")
    assert kp_exists_strong((1, 2), chain, "eq")
    assert not kp_exists_strong((1,), chain, "eq")


def test_kp_isolated_vertices_always_strong():
    isolated = ordered_graph(4)
    for variant in ("lt", "gt", "eq"):
        assert kp_exists_strong((0, 2), isolated, variant)


# -- kalpha -----------------------------------------------------------------------


def test_kalpha_membership_edgeless():
    alpha = AlphaParam(618, 1000)
    assert kalpha_membership(graph(3), alpha)
    assert kalpha_membership(graph(0), alpha)


def test_kalpha_common_neighbor_not_strong():
    alpha = AlphaParam(618, 1000)
    m = graph(3, [(0, 2), (1, 2)])
    # relative predimension 1 - 2*alpha < 0
    assert not kalpha_is_strong((0, 1), m, alpha)
    assert kalpha_is_strong((0, 1, 2), m, alpha)


def test_kalpha_exact_zero_rejected():
    from amalgam.graphs import complete_graph

    with pytest.raises(ExactZeroError):
        kalpha_membership(complete_graph(5), AlphaParam(1, 2))


def test_alpha_param_validation():
    assert str(AlphaParam(618, 1000)) == "309/500"
    assert AlphaParam(2, 4).value == Fraction(1, 2)
    with pytest.raises(ValueError):
        AlphaParam(3, 2)
    with pytest.raises(ValueError):
        AlphaParam(0, 5)


def obstruction_oracle(alpha: Fraction) -> int:
    """Closed form: first n with 2 - n(2 alpha - 1) strictly negative."""
    threshold = 2 / (2 * alpha - 1)
    n = int(threshold)
    while Fraction(2) - n * (2 * alpha - 1) >= 0:
        n += 1
    return n


COMMON_NEIGHBOR = graph(3, [(0, 2), (1, 2)])


@pytest.mark.parametrize("num, den", [(618, 1000), (13, 20), (8, 13), (7, 11)])
def test_kalpha_obstruction_matches_closed_form(num, den):
    alpha = AlphaParam(num, den)
    n, witness = kalpha_dn_obstruction(graph(2), COMMON_NEIGHBOR, alpha)
    assert n == obstruction_oracle(alpha.value)
    assert predimension(witness, alpha) < 0
    assert witness.n == 2 + n and len(witness.edges) == 2 * n


def test_kalpha_obstruction_at_618_is_nine():
    n, _ = kalpha_dn_obstruction(graph(2), COMMON_NEIGHBOR, AlphaParam(618, 1000))
    assert n == 9


@pytest.mark.parametrize("num, den", [(51, 100), (3, 4)])
def test_kalpha_obstruction_exact_zero_raises(num, den):
    # rational slopes whose amalgam predimension lands exactly on zero
    with pytest.raises(ExactZeroError):
        kalpha_dn_obstruction(graph(2), COMMON_NEIGHBOR, AlphaParam(num, den))


def test_kalpha_obstruction_requires_biminimal_pair():
    not_biminimal = graph(3, [(0, 2)])  # pendant, relative predimension positive
    with pytest.raises(PreconditionError):
        kalpha_dn_obstruction(graph(2), not_biminimal, AlphaParam(618, 1000))


def test_predimension_additive_over_free_amalgams():
    from amalgam.kernel import free_amalgam

    alpha = AlphaParam(618, 1000)
    base = graph(2)
    d1 = free_amalgam((0, 1), base, COMMON_NEIGHBOR)
    d2 = free_amalgam((0, 1), d1, COMMON_NEIGHBOR)
    step = predimension(COMMON_NEIGHBOR, alpha) - predimension(base, alpha)
    assert predimension(d1, alpha) == predimension(base, alpha) + step
    assert predimension(d2, alpha) == predimension(d1, alpha) + step


# -- registry ---------------------------------------------------------------------


def test_registry_names_and_lookup():
    names = class_names()
    for expected in ["kd", "kc", "kh", "km", "kp-forall", "kp-lt", "kp-gt", "kp-eq", "kalpha"]:
        assert expected in names
    assert get_class("kalpha", "618/1000").name == "kalpha[309/500]"
    assert get_class("kalpha").name.startswith("kalpha[")
    with pytest.raises(KeyError):
        get_class("nope")


def test_registry_finitary_flags():
    assert get_class("kd").finitary
    assert get_class("kp-lt").finitary
    assert not get_class("km").finitary
    assert not get_class("kh-eq").finitary
