"""Finite simple graphs with an optional total vertex order.

Vertices are the integers ``0 .. n-1``.  Edges are unordered pairs of
distinct vertices.  A graph may additionally carry a total order on its
vertices (used by the ordered successor-path classes); the order is stored
as a rank permutation, ``order[v]`` being the position of vertex ``v``.

Substructure always means *induced* substructure: a vertex subset inherits
exactly the edges (and the relative order) of the ambient graph.

Unreachable distances are the float ``INF`` (``math.inf``), which compares
above every integer and equal to itself, so two mutually unreachable
vertices still count as distance-preserved under restriction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

INF = math.inf

VertexSet = tuple[int, ...]
"""Strictly increasing tuple of vertex indices into an ambient graph."""


def vset(vertices: Iterable[int], n: int | None = None) -> VertexSet:
    """Normalize ``vertices`` into a sorted, duplicate-free VertexSet.

    When ``n`` is given, every index must lie in ``range(n)``.
    """
    vs = tuple(sorted(set(vertices)))
    if n is not None:
        for v in vs:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range for n={n}")
    return vs


@dataclass(frozen=True)
class FiniteGraph:
    """Immutable finite simple graph, optionally totally ordered.

    ``edges`` holds pairs ``(u, v)`` with ``u < v``.  ``order``, when
    present, is a permutation of ``0..n-1`` with ``order[v]`` the rank of
    vertex ``v`` in the total order.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    order: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge {e} not a sorted in-range pair")
        if self.order is not None:
            if sorted(self.order) != list(range(self.n)):
                raise ValueError("order must be a permutation of 0..n-1")

    # -- basic accessors -------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edges

    @property
    def adj(self) -> tuple[int, ...]:
        """Adjacency bitmasks, one per vertex."""
        cached = self.__dict__.get("_adj")
        if cached is None:
            masks = [0] * self.n
            for u, v in self.edges:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
            cached = tuple(masks)
            self.__dict__["_adj"] = cached
        return cached

    def neighbors(self, u: int) -> tuple[int, ...]:
        return tuple(v for v in self.vertices if self.adj[u] >> v & 1)

    def degree(self, u: int) -> int:
        return bin(self.adj[u]).count("1")

    # -- order helpers (ordered graphs only) ------------------------------

    @property
    def by_rank(self) -> tuple[int, ...]:
        """Vertices listed in increasing order position."""
        if self.order is None:
            raise ValueError("graph carries no order")
        cached = self.__dict__.get("_by_rank")
        if cached is None:
            seq = [0] * self.n
            for v, r in enumerate(self.order):
                seq[r] = v
            cached = tuple(seq)
            self.__dict__["_by_rank"] = cached
        return cached

    def successor(self, v: int) -> int | None:
        r = self.order[v]  # type: ignore[index]
        return self.by_rank[r + 1] if r + 1 < self.n else None

    def predecessor(self, v: int) -> int | None:
        r = self.order[v]  # type: ignore[index]
        return self.by_rank[r - 1] if r - 1 >= 0 else None


def graph(n: int, edges: Iterable[Sequence[int]] = (), order: Sequence[int] | None = None) -> FiniteGraph:
    """Build a FiniteGraph, normalizing each edge pair to sorted form."""
    norm = frozenset((min(u, v), max(u, v)) for u, v in edges)
    return FiniteGraph(n, norm, tuple(order) if order is not None else None)


def path_graph(n: int) -> FiniteGraph:
    return graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> FiniteGraph:
    return graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> FiniteGraph:
    return graph(n, combinations(range(n), 2))


def ordered_graph(n: int, edges: Iterable[Sequence[int]] = ()) -> FiniteGraph:
    """Ordered graph whose vertex labels coincide with their ranks."""
    return graph(n, edges, order=range(n))


# -- metric and path computations -----------------------------------------


def distance_matrix(g: FiniteGraph) -> tuple[tuple[float, ...], ...]:
    """Geodesic distances between all vertex pairs.

    Entry ``(a, b)`` is the minimum edge count over simple paths from a to
    b, ``INF`` when no path exists, 0 on the diagonal.  Symmetric.
    """
    adj = g.adj
    rows = []
    for src in g.vertices:
        dist: list[float] = [INF] * g.n
        dist[src] = 0
        frontier = 1 << src
        seen = frontier
        d = 0
        while frontier:
            d += 1
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            nxt &= ~seen
            seen |= nxt
            f = nxt
            while f:
                low = f & -f
                dist[low.bit_length() - 1] = d
                f ^= low
            frontier = nxt
        rows.append(tuple(dist))
    return tuple(rows)


def enumerate_simple_paths(g: FiniteGraph, a: int, b: int, max_len: int) -> list[tuple[int, ...]]:
    """All simple paths from ``a`` to ``b`` with at most ``max_len`` edges.

    Paths are reported as vertex sequences, each exactly once, in
    lexicographic order.  Rejects ``a == b``.
    """
    if a == b:
        raise ValueError("path endpoints must be distinct")
    if not (0 <= a < g.n and 0 <= b < g.n):
        raise ValueError("endpoint out of range")
    out: list[tuple[int, ...]] = []
    path = [a]
    visited = 1 << a

    def dfs(u: int) -> None:
        nonlocal visited
        if len(path) - 1 > max_len:
            return
        if u == b:
            out.append(tuple(path))
            return
        for v in g.vertices:
            if g.adj[u] >> v & 1 and not visited >> v & 1:
                visited |= 1 << v
                path.append(v)
                dfs(v)
                path.pop()
                visited &= ~(1 << v)

    dfs(a)
    return out


def _reachable_mask(adj: tuple[int, ...], start: int, allowed: int) -> int:
    """Vertices reachable from ``start`` through the ``allowed`` mask."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        u = frontier
        while u:
            low = u & -u
            nxt |= adj[low.bit_length() - 1]
            u ^= low
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


@lru_cache(maxsize=200_000)
def longest_path_order(g: FiniteGraph) -> int:
    """Number of vertices on a longest simple path (0 for the empty graph).

    Exact branch-and-bound search; intended for desk-scale graphs
    (roughly n <= 14).
    """
    if g.n == 0:
        return 0
    best = 1
    adj = g.adj
    full = (1 << g.n) - 1

    def dfs(u: int, visited: int, length: int) -> None:
        nonlocal best
        if length > best:
            best = length
        allowed = full & ~visited
        reach = _reachable_mask(adj, u, allowed | (1 << u))
        bound = length + bin(reach & allowed).count("1")
        if bound <= best:
            return
        cand = adj[u] & allowed
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            dfs(v, visited | low, length + 1)
            cand ^= low

    for s in g.vertices:
        dfs(s, 1 << s, 1)
    return best


@lru_cache(maxsize=200_000)
def longest_path_len_between(g: FiniteGraph, a: int, b: int) -> int | None:
    """Edge count of a longest simple path from ``a`` to ``b``.

    Returns None when no path exists.  Exact search, desk scale only.
    """
    if a == b:
        raise ValueError("path endpoints must be distinct")
    adj = g.adj
    full = (1 << g.n) - 1
    best: int | None = None

    def dfs(u: int, visited: int, length: int) -> None:
        nonlocal best
        if u == b:
            if best is None or length > best:
                best = length
            return
        allowed = full & ~visited
        reach = _reachable_mask(adj, u, allowed | (1 << u))
        if not reach >> b & 1:
            return
        if best is not None and length + bin(reach & allowed).count("1") <= best:
            return
        cand = adj[u] & allowed
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            dfs(v, visited | low, length + 1)
            cand ^= low

    dfs(a, 1 << a, 0)
    return best


# -- induced substructures -------------------------------------------------


def induced(g: FiniteGraph, s: Iterable[int]) -> FiniteGraph:
    """Induced subgraph on ``s``, relabeled to ``0..|s|-1`` in ascending
    index order; the order restriction is carried over when present."""
    sub = vset(s, g.n)
    pos = {v: i for i, v in enumerate(sub)}
    edges = frozenset((pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos)
    order = None
    if g.order is not None:
        ranks = sorted(sub, key=lambda v: g.order[v])  # type: ignore[index]
        rank_of = {v: r for r, v in enumerate(ranks)}
        order = tuple(rank_of[v] for v in sub)
    return FiniteGraph(len(sub), edges, order)


def relabel_within(a: Iterable[int], sub: VertexSet) -> VertexSet:
    """Positions of the vertices ``a`` inside the sorted subset ``sub``.

    Maps ambient indices to the labels they receive under
    ``induced(g, sub)``.
    """
    pos = {v: i for i, v in enumerate(sub)}
    return vset(pos[v] for v in a)


# -- embeddings -------------------------------------------------------------


@dataclass(frozen=True)
class Embedding:
    """Injective structure-preserving map, possibly partial.

    ``map[i]`` is the image of domain vertex ``i`` or None when ``i`` is
    not yet mapped.  On its defined part the map preserves and reflects
    edges (induced-substructure embedding) and preserves the order when
    both endpoints carry one.
    """

    domain: FiniteGraph
    codomain: FiniteGraph
    map: tuple[int | None, ...]

    def __post_init__(self) -> None:
        if len(self.map) != self.domain.n:
            raise ValueError("map length must equal domain size")
        defined = [(i, v) for i, v in enumerate(self.map) if v is not None]
        images = [v for _, v in defined]
        if len(set(images)) != len(images):
            raise ValueError("embedding must be injective")
        for v in images:
            if not 0 <= v < self.codomain.n:
                raise ValueError(f"image vertex {v} out of range")
        for (i, x), (j, y) in combinations(defined, 2):
            if self.domain.has_edge(i, j) != self.codomain.has_edge(x, y):
                raise ValueError(f"edge mismatch on pair ({i},{j})")
            if self.domain.order is not None and self.codomain.order is not None:
                if (self.domain.order[i] < self.domain.order[j]) != (
                    self.codomain.order[x] < self.codomain.order[y]
                ):
                    raise ValueError(f"order mismatch on pair ({i},{j})")

    @property
    def is_total(self) -> bool:
        return all(v is not None for v in self.map)

    @property
    def image(self) -> VertexSet:
        return vset(v for v in self.map if v is not None)


def embedding(domain: FiniteGraph, codomain: FiniteGraph, mapping: dict[int, int]) -> Embedding:
    """Embedding from a sparse ``{domain vertex: codomain vertex}`` dict."""
    return Embedding(domain, codomain, tuple(mapping.get(i) for i in range(domain.n)))


def _extension_candidates(shape: FiniteGraph, m: FiniteGraph, partial: dict[int, int], i: int) -> Iterator[int]:
    used = set(partial.values())
    for w in m.vertices:
        if w in used:
            continue
        ok = True
        for j, x in partial.items():
            if shape.has_edge(i, j) != m.has_edge(w, x):
                ok = False
                break
            if shape.order is not None and m.order is not None:
                if (shape.order[i] < shape.order[j]) != (m.order[w] < m.order[x]):
                    ok = False
                    break
        if ok:
            yield w


def embeddings_of(shape: FiniteGraph, m: FiniteGraph, partial: dict[int, int] | None = None) -> Iterator[dict[int, int]]:
    """All total embeddings of ``shape`` into ``m`` extending ``partial``,
    in lexicographic order of the completed map."""
    base = dict(partial or {})
    todo = [i for i in range(shape.n) if i not in base]

    def rec(k: int, cur: dict[int, int]) -> Iterator[dict[int, int]]:
        if k == len(todo):
            yield dict(cur)
            return
        i = todo[k]
        for w in _extension_candidates(shape, m, cur, i):
            cur[i] = w
            yield from rec(k + 1, cur)
            del cur[i]

    yield from rec(0, base)


def extensions_over(base: VertexSet, m: FiniteGraph, shape: FiniteGraph, anchor: Embedding) -> list[Embedding]:
    """All extensions of ``anchor`` to full embeddings of ``shape`` into
    ``m``, deduplicated up to identical image, in deterministic order.

    ``anchor`` must be a partial embedding of ``shape`` into ``m`` whose
    image is exactly ``base``.
    """
    if anchor.codomain != m or anchor.domain != shape:
        raise ValueError("anchor must map shape into m")
    if anchor.image != vset(base, m.n):
        raise ValueError("anchor image must equal base")
    partial = {i: v for i, v in enumerate(anchor.map) if v is not None}
    out: list[Embedding] = []
    seen_images: set[VertexSet] = set()
    for full in embeddings_of(shape, m, partial):
        emb = embedding(shape, m, full)
        if emb.image not in seen_images:
            seen_images.add(emb.image)
            out.append(emb)
    return out
