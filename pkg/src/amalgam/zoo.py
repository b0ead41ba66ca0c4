"""The registered amalgamation classes.

Unordered classes (all on the class of every finite simple graph):

* ``kd``  strength is distance preservation (isometric inclusion).
* ``kc``  strength forbids paths between nonadjacent pairs from leaving
  the subset; this is the all-pairs closure companion of ``kd``.
* ``kh``  strength is nonnegativity of the Hamiltonicity deficiency
  ``H(A) = |A| - lambda(A)`` over all relative extensions.
* ``km``  strength is longest-path preservation between pairs; registered
  as the counterexample target for free amalgamation.
* ``kh-eq``  the all-paths-equivalent resolution variant; non-finitary.

Ordered classes (linear order, edges only between order-successors):

* ``kp-forall``  strength is connected-component containment.
* ``kp-lt`` / ``kp-gt`` / ``kp-eq``  resolution variants where the
  predecessor edge, the successor edge, or either one resolves a vertex.

Parametric:

* ``kalpha``  predimension strength ``|B0 - A| - alpha * e(B0/A) > 0``
  with an exact rational ``alpha`` standing in for an irrational; any
  evaluation landing exactly on zero raises :class:`ExactZeroError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .graphs import (
    INF,
    FiniteGraph,
    VertexSet,
    distance_matrix,
    enumerate_simple_paths,
    induced,
    longest_path_len_between,
    longest_path_order,
    vset,
)
from .kernel import (
    BudgetExceededError,
    ClassSpec,
    Cmp,
    PreconditionError,
    check_budget,
    free_amalgam_parts,
    is_biminimal_pair_abstract,
)


class ExactZeroError(ArithmeticError):
    """A predimension evaluation landed exactly on zero: the chosen
    rational slope behaves rationally on this instance, pick another."""


# -- distance preservation (kd) ----------------------------------------------


@lru_cache(maxsize=400_000)
def _dm(g: FiniteGraph):
    return distance_matrix(g)


def kd_is_strong(a: VertexSet, m: FiniteGraph) -> bool:
    """Distances between vertices of ``a`` agree in the induced
    substructure and in ``m`` (unreachable counts as equal).

    The induced side runs BFS within the subset mask, so restriction
    distances can only shrink under comparison, and a mismatch is exactly
    a shortcut through outside vertices.
    """
    a = vset(a, m.n)
    if len(a) < 2:
        return True
    dm = _dm(m)
    adj = m.adj
    amask = 0
    for v in a:
        amask |= 1 << v
    for idx, src in enumerate(a):
        targets = [v for v in a[idx + 1 :]]
        row = dm[src]
        pending = 0
        for v in targets:
            pending |= 1 << v
        seen = 1 << src
        frontier = seen
        d = 0
        while frontier and pending & ~seen:
            d += 1
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            nxt &= amask & ~seen
            seen |= nxt
            f = nxt & pending
            while f:
                low = f & -f
                if row[low.bit_length() - 1] != d:
                    return False
                f ^= low
            frontier = nxt
        f = pending & ~seen
        while f:
            low = f & -f
            if row[low.bit_length() - 1] != INF:
                return False
            f ^= low
    return True


def _kd_compare(x: FiniteGraph, y1: FiniteGraph, y2: FiniteGraph) -> Cmp:
    # biminimal extensions of a nonadjacent pair are joining paths;
    # shorter paths resolve longer ones
    if y1.n < y2.n:
        return Cmp.LESS
    if y1.n > y2.n:
        return Cmp.GREATER
    return Cmp.EQUIV


# -- path containment (kc) ----------------------------------------------------


def _is_induced_path(g: FiniteGraph, p: tuple[int, ...]) -> bool:
    edges = 0
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if g.has_edge(p[i], p[j]):
                edges += 1
    return edges == len(p) - 1


@lru_cache(maxsize=200_000)
def _induced_paths(g: FiniteGraph, a: int, b: int) -> tuple[tuple[int, ...], ...]:
    return tuple(p for p in enumerate_simple_paths(g, a, b, g.n) if _is_induced_path(g, p))


def kc_is_strong(a: VertexSet, m: FiniteGraph) -> bool:
    """Every induced path of length at least 2 between nonadjacent
    vertices of ``a`` stays inside ``a``.

    Adjacent pairs impose nothing, and chorded paths are excluded because
    a chord yields a proper sub-extension that already connects the pair;
    only induced joining paths are minimal extensions here.  This is what
    makes the class the closure companion of ``kd`` and lets it coincide
    with ``kh``.
    """
    a = vset(a, m.n)
    aset = set(a)
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            u, v = a[i], a[j]
            if m.has_edge(u, v):
                continue
            for p in _induced_paths(m, u, v):
                if not aset.issuperset(p):
                    return False
    return True


# -- Hamiltonicity deficiency (kh) ---------------------------------------------


def kh_predim(g: FiniteGraph) -> int:
    """H(g): vertex count minus the order of a longest simple path."""
    return g.n - longest_path_order(g)


def kh_is_strong(a: VertexSet, m: FiniteGraph) -> bool:
    """No relative extension may lower the deficiency: for every a0
    inside a and b0 inside m - a, H(a0 + b0) >= H(a0)."""
    a = vset(a, m.n)
    if m.n > 12:
        raise BudgetExceededError("kh strength is exponential; ambient capped at 12 vertices")
    rest = [v for v in m.vertices if v not in set(a)]
    from itertools import combinations

    a_subs = [vset(c) for k in range(len(a) + 1) for c in combinations(a, k)]
    for kb in range(1, len(rest) + 1):
        for b0 in combinations(rest, kb):
            for a0 in a_subs:
                both = vset(set(a0) | set(b0))
                lam_both = longest_path_order(induced(m, both))
                lam_a0 = longest_path_order(induced(m, a0))
                if (len(both) - lam_both) - (len(a0) - lam_a0) < 0:
                    return False
    return True


# -- longest-path preservation (km) ---------------------------------------------


def km_is_strong(a: VertexSet, m: FiniteGraph) -> bool:
    """For every pair of ``a`` joined by a path inside the induced
    substructure, the longest simple path between them in ``m`` is no
    longer than the longest one inside.

    Pairs with no joining path inside ``a`` impose nothing; that vacuous
    case is what the free-amalgamation counterexample hinges on (two
    extensions each harmlessly bridging a gap combine into a long way
    around).
    """
    a = vset(a, m.n)
    if len(a) < 2:
        return True
    if m.n > 12:
        raise BudgetExceededError("km strength needs exact longest paths; ambient capped at 12")
    ia = induced(m, a)
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            la = longest_path_len_between(ia, i, j)
            if la is None:
                continue
            lm = longest_path_len_between(m, a[i], a[j])
            if lm is not None and lm > la:
                return False
    return True


def _km_compare(x: FiniteGraph, y1: FiniteGraph, y2: FiniteGraph) -> Cmp:
    # longer joining paths resolve shorter ones under longest-path
    # preservation, so longer means lower in the resolution order
    if y1.n > y2.n:
        return Cmp.LESS
    if y1.n < y2.n:
        return Cmp.GREATER
    return Cmp.EQUIV


def _all_equiv_compare(x: FiniteGraph, y1: FiniteGraph, y2: FiniteGraph) -> Cmp:
    return Cmp.EQUIV


# -- ordered successor-path classes (kp family) -----------------------------------


def kp_membership(g: FiniteGraph) -> bool:
    """Ordered graph whose edges join only order-successor pairs."""
    if g.order is None:
        raise PreconditionError("kp membership needs an ordered graph")
    return all(abs(g.order[u] - g.order[v]) == 1 for u, v in g.edges)


def _edge_neighbors(m: FiniteGraph, x: int) -> tuple[int | None, int | None]:
    """(lower edge-neighbor, upper edge-neighbor) of x; in a member each
    side has at most one since edges join successor pairs."""
    down = up = None
    for y in m.neighbors(x):
        if m.order[y] < m.order[x]:  # type: ignore[index]
            if down is None or m.order[y] > m.order[down]:  # type: ignore[index]
                down = y
        else:
            if up is None or m.order[y] < m.order[up]:  # type: ignore[index]
                up = y
    return down, up


def kp_forall_strong(a: VertexSet, m: FiniteGraph) -> bool:
    """Every connected component of ``m`` meeting ``a`` lies inside it."""
    a = vset(a, m.n)
    aset = set(a)
    seen: set[int] = set()
    for start in a:
        if start in seen:
            continue
        stack = [start]
        comp = set()
        while stack:
            u = stack.pop()
            if u in comp:
                continue
            comp.add(u)
            stack.extend(m.neighbors(u))
        seen |= comp
        if not comp <= aset:
            return False
    return True


def kp_exists_strong(a: VertexSet, m: FiniteGraph, variant: str) -> bool:
    """Resolution strength for the three successor-path companions.

    ``lt``: the predecessor extension resolves everything, so a realized
    lower edge forces the lower neighbor into ``a`` and a realized upper
    edge is resolved by either neighbor.  ``gt`` is the mirror image and
    ``eq`` lets either realized edge resolve both.
    """
    a = vset(a, m.n)
    aset = set(a)
    for x in a:
        down, up = _edge_neighbors(m, x)
        has_down = down is not None
        has_up = up is not None
        down_in = has_down and down in aset
        up_in = has_up and up in aset
        if variant == "lt":
            if has_down and not down_in:
                return False
            if has_up and not (up_in or down_in):
                return False
        elif variant == "gt":
            if has_up and not up_in:
                return False
            if has_down and not (down_in or up_in):
                return False
        elif variant == "eq":
            if (has_down or has_up) and not (down_in or up_in):
                return False
        else:
            raise ValueError(f"unknown variant {variant!r}")
    return True


def _kp_direction(y: FiniteGraph) -> str:
    # y extends a single base vertex 0 by vertex 1 with an edge
    return "down" if y.order[1] < y.order[0] else "up"  # type: ignore[index]


def _kp_compare(variant: str):
    def cmp(x: FiniteGraph, y1: FiniteGraph, y2: FiniteGraph) -> Cmp:
        if variant == "eq":
            return Cmp.EQUIV
        d1, d2 = _kp_direction(y1), _kp_direction(y2)
        if d1 == d2:
            return Cmp.EQUIV
        low = "down" if variant == "lt" else "up"
        return Cmp.LESS if d1 == low else Cmp.GREATER

    return cmp


# -- predimension classes (kalpha) -------------------------------------------------


@dataclass(frozen=True)
class AlphaParam:
    """Exact rational slope in (0, 1) standing in for an irrational."""

    numerator: int
    denominator: int

    def __post_init__(self) -> None:
        frac = Fraction(self.numerator, self.denominator)
        if not 0 < frac < 1:
            raise ValueError("alpha must lie strictly between 0 and 1")
        object.__setattr__(self, "numerator", frac.numerator)
        object.__setattr__(self, "denominator", frac.denominator)

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


def predimension(g: FiniteGraph, alpha: AlphaParam) -> Fraction:
    """|g| - alpha * (edge count), exact."""
    return Fraction(g.n) - alpha.value * len(g.edges)


def _relative_predim(m: FiniteGraph, a: VertexSet, b0: VertexSet, alpha: AlphaParam) -> Fraction:
    ga = induced(m, a)
    gb = induced(m, b0)
    return Fraction(len(b0) - len(a)) - alpha.value * (len(gb.edges) - len(ga.edges))


def kalpha_is_strong(a: VertexSet, m: FiniteGraph, alpha: AlphaParam) -> bool:
    """Every proper extension of ``a`` inside ``m`` has strictly positive
    relative predimension.  Exact zero raises :class:`ExactZeroError`."""
    a = vset(a, m.n)
    rest = [v for v in m.vertices if v not in set(a)]
    check_budget(1 << len(rest), "kalpha subset enumeration")
    from itertools import combinations

    for k in range(1, len(rest) + 1):
        for extra in combinations(rest, k):
            b0 = vset(set(a) | set(extra))
            val = _relative_predim(m, a, b0, alpha)
            if val == 0:
                raise ExactZeroError(
                    f"relative predimension hits zero exactly at alpha={alpha}; choose a different alpha"
                )
            if val < 0:
                return False
    return True


def kalpha_membership(g: FiniteGraph, alpha: AlphaParam) -> bool:
    return kalpha_is_strong((), g, alpha)


def kalpha_dn_obstruction(x: FiniteGraph, y: FiniteGraph, alpha: AlphaParam, n_cap: int = 100_000):
    """Free amalgams of increasing multiplicity as a companion obstruction.

    ``(x, y)`` must be a biminimal pair for the predimension class (base
    as prefix of y).  Builds the free amalgam of ``x`` with n copies of
    ``y`` for n = 1, 2, ... and returns ``(n, witness)`` at the first n
    whose total predimension goes negative; such a witness rules out any
    free resolution companion, since one copy would resolve the base and
    the rest would be strong extensions.
    """
    spec = kalpha_spec(alpha)
    base = tuple(range(x.n))
    if induced(y, base) != x:
        raise PreconditionError("x must be the induced prefix of y")
    if not is_biminimal_pair_abstract(spec, y, base):
        raise PreconditionError("pair is not biminimal for the predimension class")
    d = x
    for n in range(1, n_cap + 1):
        d = free_amalgam_parts(base, d, y).graph
        val = predimension(d, alpha)
        if val == 0:
            raise ExactZeroError(
                f"predimension of the {n}-fold amalgam is exactly zero at alpha={alpha}"
            )
        if val < 0:
            return n, d
    raise BudgetExceededError(f"no negative predimension within {n_cap} copies")


# -- the registry --------------------------------------------------------------------


def _all_graphs_member(g: FiniteGraph) -> bool:
    return g.order is None


def kd_spec() -> ClassSpec:
    return ClassSpec(
        name="kd",
        membership=_all_graphs_member,
        strong=kd_is_strong,
        bimin_compare=_kd_compare,
        finitary=True,
        membership_trivial=True,
        bimin_base_bound=2,
    )


def kc_spec() -> ClassSpec:
    return ClassSpec(
        name="kc",
        membership=_all_graphs_member,
        strong=kc_is_strong,
        membership_trivial=True,
        bimin_base_bound=2,
    )


def kh_spec() -> ClassSpec:
    return ClassSpec(
        name="kh",
        membership=_all_graphs_member,
        strong=kh_is_strong,
        membership_trivial=True,
        bimin_base_bound=2,
    )


def km_spec() -> ClassSpec:
    return ClassSpec(
        name="km",
        membership=_all_graphs_member,
        strong=km_is_strong,
        bimin_compare=_km_compare,
        finitary=False,
        membership_trivial=True,
    )


def kh_all_paths_equal_spec() -> ClassSpec:
    """The resolution variant of ``kh``/``kc`` where all joining paths are
    equivalent; non-finitary because each equivalence class is infinite."""

    def strong(a: VertexSet, m: FiniteGraph) -> bool:
        a = vset(a, m.n)
        aset = set(a)
        for i in range(len(a)):
            for j in range(i + 1, len(a)):
                u, v = a[i], a[j]
                if m.has_edge(u, v):
                    continue
                paths = _induced_paths(m, u, v)
                if not paths:
                    continue
                if not any(aset.issuperset(p) for p in paths):
                    return False
        return True

    return ClassSpec(
        name="kh-eq",
        membership=_all_graphs_member,
        strong=strong,
        bimin_compare=_all_equiv_compare,
        finitary=False,
        membership_trivial=True,
        bimin_base_bound=2,
    )


def kp_forall_spec() -> ClassSpec:
    return ClassSpec(
        name="kp-forall",
        membership=kp_membership,
        strong=kp_forall_strong,
        requires_order=True,
        bimin_base_bound=1,
        bimin_ext_bound=1,
    )


def kp_exists_spec(variant: str) -> ClassSpec:
    if variant not in ("lt", "gt", "eq"):
        raise ValueError(f"unknown kp variant {variant!r}")
    return ClassSpec(
        name=f"kp-{variant}",
        membership=kp_membership,
        strong=lambda a, m, _v=variant: kp_exists_strong(a, m, _v),
        bimin_compare=_kp_compare(variant),
        requires_order=True,
        finitary=True,
        bimin_base_bound=1,
        bimin_ext_bound=1,
    )


def kalpha_spec(alpha: AlphaParam | Fraction | str) -> ClassSpec:
    if isinstance(alpha, str):
        num, den = alpha.split("/")
        alpha = AlphaParam(int(num), int(den))
    elif isinstance(alpha, Fraction):
        alpha = AlphaParam(alpha.numerator, alpha.denominator)
    return ClassSpec(
        name=f"kalpha[{alpha}]",
        membership=lambda g, _a=alpha: kalpha_membership(g, _a),
        strong=lambda a, m, _a=alpha: kalpha_is_strong(a, m, _a),
    )


REGISTRY = {
    "kd": kd_spec,
    "kc": kc_spec,
    "kh": kh_spec,
    "km": km_spec,
    "kh-eq": kh_all_paths_equal_spec,
    "kp-forall": kp_forall_spec,
    "kp-lt": lambda: kp_exists_spec("lt"),
    "kp-gt": lambda: kp_exists_spec("gt"),
    "kp-eq": lambda: kp_exists_spec("eq"),
}

DEFAULT_ALPHA = AlphaParam(618, 1000)


def class_names() -> list[str]:
    return sorted(REGISTRY) + ["kalpha"]


def get_class(name: str, alpha: AlphaParam | Fraction | str | None = None) -> ClassSpec:
    """Look up a registered class; ``kalpha`` takes the slope parameter."""
    if name == "kalpha":
        return kalpha_spec(alpha if alpha is not None else DEFAULT_ALPHA)
    try:
        return REGISTRY[name]()
    except KeyError:
        raise KeyError(f"unknown class {name!r}; known: {', '.join(class_names())}") from None
