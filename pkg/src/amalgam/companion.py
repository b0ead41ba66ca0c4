"""Derived companions and cross-class comparisons.

The universal companion of a class keeps its membership and declares a
pair strong exactly when every realized minimal-pair extension over the
smaller side stays inside it.  Two classes coincide as abstract
structures when they share membership and classify every small pair
identically as biminimal or not; the round trip through an existential
companion is checked this way.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .canon import canonical_key, pair_colors, subsets
from .graphs import FiniteGraph, VertexSet, induced, vset
from .kernel import (
    ClassSpec,
    check_axioms,
    check_budget,
    extension_graphs,
    free_amalgam_parts,
    is_biminimal_pair_abstract,
    is_minimal_pair_in,
    member_graphs,
    members_up_to,
    strong_cached,
    PreconditionError,
)


def derive_forall(spec: ClassSpec) -> ClassSpec:
    """The universal companion: same membership, strength demanding that
    every minimal-pair extension over a base inside ``a`` realized in the
    ambient stays inside ``a``.  Evaluated lazily with memoization keyed
    on canonical forms."""
    memo: dict[tuple, bool] = {}

    def strong(a: VertexSet, m: FiniteGraph) -> bool:
        a = vset(a, m.n)
        key = canonical_key(m, pair_colors(m, a))
        hit = memo.get(key)
        if hit is not None:
            return hit
        result = True
        aset = set(a)
        for x in subsets(a):
            rest = [v for v in m.vertices if v not in set(x)]
            done = False
            for size in range(1, len(rest) + 1):
                for t in combinations(rest, size):
                    if set(t) <= aset:
                        continue
                    if is_minimal_pair_in(spec, m, x, t):
                        result = False
                        done = True
                        break
                if done:
                    break
            if done:
                break
        memo[key] = result
        return result

    return ClassSpec(
        name=f"forall({spec.name})",
        membership=spec.membership,
        strong=strong,
        requires_order=spec.requires_order,
        membership_trivial=spec.membership_trivial,
    )


@dataclass(frozen=True)
class CoincidenceVerdict:
    passed: bool
    reason: str
    witness_graph: FiniteGraph | None = None
    witness_base: VertexSet | None = None


def biminimal_coincide(spec1: ClassSpec, spec2: ClassSpec, max_total: int) -> CoincidenceVerdict:
    """Do the two classes share membership and classify every pair with at
    most ``max_total`` vertices identically as biminimal or not?"""
    if spec1.requires_order != spec2.requires_order:
        return CoincidenceVerdict(False, "languages differ (order presence)")
    probe = spec1 if not spec1.membership_trivial else spec2
    for g in members_up_to(probe, max_total):
        if spec1.membership(g) != spec2.membership(g):
            return CoincidenceVerdict(False, "membership mismatch", g)
    if not (spec1.membership_trivial and spec2.membership_trivial):
        # membership agreed on one side's members; check the other way too
        other = spec2 if probe is spec1 else spec1
        for g in members_up_to(other, max_total):
            if spec1.membership(g) != spec2.membership(g):
                return CoincidenceVerdict(False, "membership mismatch", g)

    seen: set[tuple] = set()
    for y in members_up_to(spec1, max_total):
        for base in subsets(y.vertices, y.n - 1):
            key = canonical_key(y, pair_colors(y, base))
            if key in seen:
                continue
            seen.add(key)
            b1 = is_biminimal_pair_abstract(spec1, y, base)
            b2 = is_biminimal_pair_abstract(spec2, y, base)
            if b1 != b2:
                return CoincidenceVerdict(False, "biminimal classification differs", y, base)
    return CoincidenceVerdict(True, "classes coincide at this bound")


def roundtrip_check(base: ClassSpec, companion: ClassSpec, bound: int) -> CoincidenceVerdict:
    """Does deriving the universal companion of ``companion`` recover
    ``base``?  ``base`` must pass the intersection axiom empirically."""
    report = check_axioms(base, min(bound, 4))
    if not report.passed("A6"):
        raise PreconditionError(f"{base.name} lacks universal closures (A6 fails empirically)")
    return biminimal_coincide(base, derive_forall(companion), bound)


@dataclass(frozen=True)
class FreeAmalgWitness:
    """A triple breaking free amalgamation, with where each side landed in
    the failed amalgam and which check failed."""

    a: FiniteGraph
    b: FiniteGraph
    c: FiniteGraph
    d: FiniteGraph
    b_image: tuple[int, ...]
    c_image: tuple[int, ...]
    failed: str


def find_free_amalg_counterexample(spec: ClassSpec, max_a: int, max_ext: int) -> FreeAmalgWitness | None:
    """Search strong-extension triples for a free amalgam that leaves the
    class or fails to keep a side strong.

    Order: increasing shared-part size, then extension sizes, canonical
    within; the first failure found is returned, None when the search
    space is exhausted.
    """
    check_budget((max_a + 1) * (1 << (2 * max_a + max_ext)), "free amalgamation counterexample search")
    for na in range(max_a + 1):
        for a_graph in member_graphs(spec, na):
            shared = tuple(range(na))
            exts: list[FiniteGraph] = []
            for k in range(1, max_ext + 1):
                exts.extend(
                    e for e in extension_graphs(a_graph, k, member=spec.membership)
                    if strong_cached(spec, shared, e)
                )
            for b_graph in exts:
                for c_graph in exts:
                    parts = free_amalgam_parts(shared, b_graph, c_graph)
                    if not spec.membership(parts.graph):
                        return FreeAmalgWitness(
                            a_graph, b_graph, c_graph, parts.graph,
                            parts.b_image, parts.c_image, "membership",
                        )
                    if not strong_cached(spec, vset(parts.b_image), parts.graph):
                        return FreeAmalgWitness(
                            a_graph, b_graph, c_graph, parts.graph,
                            parts.b_image, parts.c_image, "left side not strong",
                        )
                    if not strong_cached(spec, vset(parts.c_image), parts.graph):
                        return FreeAmalgWitness(
                            a_graph, b_graph, c_graph, parts.graph,
                            parts.b_image, parts.c_image, "right side not strong",
                        )
    return None
