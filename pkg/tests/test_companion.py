"""Companion derivation, coincidence, round trips, counterexample search."""

import pytest

from amalgam.canon import subsets
from amalgam.companion import (
    biminimal_coincide,
    derive_forall,
    find_free_amalg_counterexample,
    roundtrip_check,
)
from amalgam.graphs import longest_path_len_between
from amalgam.kernel import PreconditionError, check_axioms, members_up_to
from amalgam.zoo import get_class

KD = get_class("kd")
KC = get_class("kc")
KH = get_class("kh")
KM = get_class("km")
KPF = get_class("kp-forall")


def test_derive_forall_kd_agrees_with_kc_bound_five():
    derived = derive_forall(KD)
    for m in members_up_to(KD, 5):
        for a in subsets(m.vertices):
            assert derived.strong(a, m) == KC.strong(a, m)


def test_derive_forall_kp_lt_agrees_with_forall_bound_four():
    derived = derive_forall(get_class("kp-lt"))
    for m in members_up_to(KPF, 4):
        for a in subsets(m.vertices):
            assert derived.strong(a, m) == KPF.strong(a, m)


def test_derive_forall_reflexive():
    derived = derive_forall(KD)
    for m in members_up_to(KD, 4):
        assert derived.strong(tuple(m.vertices), m)


def test_derive_forall_satisfies_intersection_axiom():
    report = check_axioms(derive_forall(KD), 4)
    assert report.all_passed()


def test_derive_forall_deterministic_across_runs():
    d1 = derive_forall(KD)
    d2 = derive_forall(KD)
    for m in members_up_to(KD, 4):
        for a in subsets(m.vertices):
            assert d1.strong(a, m) == d2.strong(a, m)


def test_coincide_kc_kh_bound_five():
    assert biminimal_coincide(KC, KH, 5).passed


def test_coincide_kd_with_its_derived_forall():
    assert biminimal_coincide(KD, derive_forall(KD), 5).passed


def test_coincide_language_mismatch_immediate():
    verdict = biminimal_coincide(KD, KPF, 6)
    assert not verdict.passed and "language" in verdict.reason


def test_coincide_membership_mismatch():
    # the predimension class sheds its first graphs at five vertices
    # (nine or more edges), where membership stops agreeing with kd
    kalpha = get_class("kalpha", "618/1000")
    verdict = biminimal_coincide(KD, kalpha, 5)
    assert not verdict.passed and verdict.reason == "membership mismatch"
    assert verdict.witness_graph is not None
    assert verdict.witness_graph.n == 5 and len(verdict.witness_graph.edges) >= 9


def test_roundtrip_kc_kd_bound_five():
    assert roundtrip_check(KC, KD, 5).passed


@pytest.mark.parametrize("variant", ["kp-lt", "kp-gt", "kp-eq"])
def test_roundtrip_kp_forall_with_each_companion(variant):
    assert roundtrip_check(KPF, get_class(variant), 5).passed


def test_roundtrip_idempotent_on_intersection_class():
    assert roundtrip_check(KC, KC, 4).passed


def test_roundtrip_requires_intersection_axiom_on_base():
    with pytest.raises(PreconditionError):
        roundtrip_check(KD, KC, 4)


def test_km_counterexample_found_and_replayable():
    w = find_free_amalg_counterexample(KM, 5, 1)
    assert w is not None
    assert w.failed != "membership"
    # the way around through both bridges is longer than anything in c
    grew = False
    ci = w.c_image
    for i in range(len(ci)):
        for j in range(i + 1, len(ci)):
            lc = longest_path_len_between(w.c, i, j)
            ld = longest_path_len_between(w.d, ci[i], ci[j])
            if lc is not None and ld is not None and ld > lc:
                grew = True
    assert grew


def test_kd_and_kh_have_no_counterexample_small():
    assert find_free_amalg_counterexample(KD, 4, 1) is None
    assert find_free_amalg_counterexample(KH, 4, 1) is None


def test_kd_free_amalgamation_ext_two():
    assert find_free_amalg_counterexample(KD, 3, 2) is None
