"""Closure computations inside a finite ambient graph.

Two fixpoints are computed over a base set: the maximal closure (every
realized minimal-pair extension is added, layer by layer) and the choice
resolution (one comparator-minimal biminimal extension per base subset,
selected by a deterministic strategy).  Resolutions in general are strong
supersets; minimal ones carry no strong proper sub-superset, and without
the intersection axiom they need not be unique.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from .canon import subsets
from .kernel import (
    BudgetExceededError,
    ClassSpec,
    Cmp,
    PreconditionError,
    check_budget,
    compare_realized,
    is_minimal_pair_in,
    realized_biminimal_extensions,
    resolves,
    strong_cached,
)
from .graphs import FiniteGraph, VertexSet, vset


class ClosureMode(Enum):
    MCL = "MCL"
    RESOLVE = "RESOLVE"


@dataclass(frozen=True)
class ChiStrategy:
    """Deterministic choice of one comparator-minimal realized extension.

    ``tiebreak`` orders the comparator-minimal candidates by their vertex
    sets: "lex" takes the least, "revlex" the greatest.
    """

    tiebreak: str = "lex"

    def choose(self, spec: ClassSpec, x: VertexSet, m: FiniteGraph, realized) -> VertexSet:
        minimal = [
            t
            for t in realized
            if not any(
                t2 != t and compare_realized(spec, m, x, t2, t) is Cmp.LESS for t2 in realized
            )
        ]
        if not minimal:
            raise PreconditionError("no realized extensions to choose from")
        ordered = sorted(minimal)
        return ordered[0] if self.tiebreak == "lex" else ordered[-1]


@dataclass
class ClosureReport:
    """Result of a closure computation with its fixpoint trace."""

    input: VertexSet
    result: VertexSet
    layers: list[VertexSet]
    mode: ClosureMode
    minimal: bool | None = None
    alternatives: int | None = None
    boundary_flag: bool = False


def _base_sizes(spec: ClassSpec, m: FiniteGraph) -> int:
    if m.n <= 12:
        return m.n
    if spec.bimin_base_bound is None:
        raise BudgetExceededError("minimal-pair bases unbounded and ambient too large")
    return spec.bimin_base_bound


def _mark_boundary(result: VertexSet, interior: VertexSet | None) -> bool:
    return interior is not None and not set(result) <= set(interior)


def mcl(
    spec: ClassSpec,
    a: VertexSet,
    m: FiniteGraph,
    max_new: int | None = None,
    interior: VertexSet | None = None,
) -> ClosureReport:
    """Maximal closure: iteratively add every minimal-pair extension over
    subsets of the current layer that is realized inside ``m``.

    The result is strong in ``m`` (verified).  ``interior``, when given,
    marks the report when the fixpoint leaves it (ambient-truncation
    bookkeeping for windowed ambients).
    """
    a = vset(a, m.n)
    base_cap = _base_sizes(spec, m)
    current = set(a)
    layers = [a]
    while True:
        added: set[int] = set()
        for x in subsets(sorted(current), base_cap):
            rest = [v for v in m.vertices if v not in set(x)]
            top = len(rest) if max_new is None else min(max_new, len(rest))
            if spec.bimin_ext_bound is not None and m.n > 12:
                # large ambient: minimal-pair extension parts stay within
                # one vertex of the biminimal bound for these classes
                top = min(top, spec.bimin_ext_bound + 1)
            for size in range(1, top + 1):
                for t in combinations(rest, size):
                    if set(t) <= current:
                        continue
                    if is_minimal_pair_in(spec, m, x, t):
                        added |= set(t)
        if not added - current:
            break
        current |= added
        layers.append(vset(current))
    result = vset(current)
    if not strong_cached(spec, result, m):
        raise RuntimeError(f"maximal closure of {a} is not strong in the ambient ({spec.name})")
    return ClosureReport(a, result, layers, ClosureMode.MCL, boundary_flag=_mark_boundary(result, interior))


def resolve(
    spec: ClassSpec,
    a: VertexSet,
    m: FiniteGraph,
    chi: ChiStrategy | None = None,
    max_new: int | None = None,
    interior: VertexSet | None = None,
) -> ClosureReport:
    """Choice resolution: the fixpoint of adding, for each base subset of
    the current layer, the strategy's comparator-minimal realized
    biminimal extension.  Strong in ``m`` (verified), contains ``a``."""
    if spec.bimin_compare is None:
        raise PreconditionError(f"class {spec.name} has no biminimal comparator")
    chi = chi or ChiStrategy()
    a = vset(a, m.n)
    base_cap = spec.bimin_base_bound if spec.bimin_base_bound is not None else _base_sizes(spec, m)
    current = set(a)
    layers = [a]
    while True:
        added: set[int] = set()
        for x in subsets(sorted(current), base_cap):
            realized = realized_biminimal_extensions(spec, x, m, max_new)
            if not realized:
                continue
            added |= set(chi.choose(spec, x, m, realized))
        if not added - current:
            break
        current |= added
        layers.append(vset(current))
    result = vset(current)
    if not strong_cached(spec, result, m):
        raise RuntimeError(f"choice resolution of {a} is not strong in the ambient ({spec.name})")
    return ClosureReport(a, result, layers, ClosureMode.RESOLVE, boundary_flag=_mark_boundary(result, interior))


def is_minimal_resolution(spec: ClassSpec, a: VertexSet, b: VertexSet, m: FiniteGraph) -> bool:
    """Is ``b`` a resolution of ``a`` in ``m`` (strong superset) with no
    proper sub-resolution?"""
    a, b = vset(a, m.n), vset(b, m.n)
    if not set(a) <= set(b):
        raise PreconditionError("a must be contained in b")
    extra = [v for v in b if v not in set(a)]
    if len(extra) > 12:
        raise BudgetExceededError("sub-resolution scan capped at 12 extra vertices")
    if not strong_cached(spec, b, m):
        raise PreconditionError("b is not a resolution of a")
    for t in subsets(extra, len(extra) - 1):
        sub = vset(set(a) | set(t))
        if strong_cached(spec, sub, m):
            return False
    return True


def _violation(spec: ClassSpec, cur: frozenset[int], m: FiniteGraph, base_cap: int, max_new: int | None):
    """First unresolved obstruction over the current set, or None.

    With a comparator: a realized biminimal extension with no realized
    resolver inside the set; candidates to branch on are its resolvers.
    Without one: a realized minimal-pair extension leaving the set, whose
    only candidate is itself.
    """
    cur_sorted = sorted(cur)
    if spec.bimin_compare is not None:
        for x in subsets(cur_sorted, base_cap):
            realized = realized_biminimal_extensions(spec, x, m, max_new)
            inside = [t for t in realized if set(t) <= cur]
            for t_prime in realized:
                if set(t_prime) <= cur:
                    continue
                if not any(resolves(spec, m, x, t, t_prime) for t in inside):
                    branches = [t for t in realized if resolves(spec, m, x, t, t_prime)]
                    return x, t_prime, branches
        return None
    for x in subsets(cur_sorted, base_cap):
        rest = [v for v in m.vertices if v not in set(x)]
        top = len(rest) if max_new is None else min(max_new, len(rest))
        for size in range(1, top + 1):
            for t in combinations(rest, size):
                if set(t) <= cur:
                    continue
                if is_minimal_pair_in(spec, m, x, t):
                    return x, t, [t]
    return None


def enumerate_minimal_resolutions(
    spec: ClassSpec, a: VertexSet, m: FiniteGraph, bound: int | None = None, max_new: int | None = None
) -> list[VertexSet]:
    """All minimal resolutions of ``a`` in ``m`` up to ``bound`` vertices.

    Complete obstruction-driven search: any resolution must contain a
    resolver of every unresolved obstruction, so branching over resolvers
    reaches every minimal resolution.  Deterministic order.
    """
    a = vset(a, m.n)
    bound = m.n if bound is None else bound
    base_cap = _base_sizes(spec, m)
    found: dict[VertexSet, None] = {}
    seen: set[frozenset[int]] = set()
    stack = [frozenset(a)]
    steps = 0
    while stack:
        cur = stack.pop()
        if cur in seen:
            continue
        seen.add(cur)
        steps += 1
        check_budget(steps * 8, "minimal resolution search")
        cur_v = vset(cur)
        if strong_cached(spec, cur_v, m):
            found[cur_v] = None
            continue
        hit = _violation(spec, cur, m, base_cap, max_new)
        if hit is None:
            raise RuntimeError(
                f"{spec.name}: set {cur_v} is not strong yet carries no obstruction; "
                "strength and the pair machinery disagree"
            )
        _x, _t, branches = hit
        for t in branches:
            nxt = cur | set(t)
            if len(nxt) <= bound:
                stack.append(frozenset(nxt))
    results = [b for b in found if not any(b2 != b and set(b2) <= set(b) for b2 in found)]
    results.sort(key=lambda b: (len(b), b))
    return results


def is_closed_copy(spec: ClassSpec, b: VertexSet, m: FiniteGraph, max_new: int | None = None) -> bool:
    """Executable closedness certificate for finitary classes: no
    biminimal extension realized in ``m`` over a base inside ``b`` lies
    strictly below every one realized inside ``b``."""
    if spec.bimin_compare is None or not spec.finitary:
        raise PreconditionError(f"class {spec.name} is not finitary")
    b = vset(b, m.n)
    bset = set(b)
    base_cap = spec.bimin_base_bound if spec.bimin_base_bound is not None else len(b)
    for x in subsets(b, base_cap):
        realized = realized_biminimal_extensions(spec, x, m, max_new)
        inside = [t for t in realized if set(t) <= bset]
        for t_prime in realized:
            # vacuously below-all when nothing is realized inside b
            if all(compare_realized(spec, m, x, t_prime, t) is Cmp.LESS for t in inside):
                return False
    return True
