"""Canonical forms and isomorph-free enumeration for small graphs.

Canonical keys are computed by color refinement followed by exhaustive
search over the residual color classes, so they are exact (no hash
collisions) at the desk scales this library targets.  A prefix of
vertices can be pinned pointwise, which is how extension graphs over a
fixed base are deduplicated.

Ordered graphs are rigid: their canonical form is the rank relabeling.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterable, Iterator

from .graphs import FiniteGraph, VertexSet, graph, induced

_key_cache: dict[tuple, tuple] = {}


def _refine(g: FiniteGraph, colors: tuple[int, ...]) -> tuple[int, ...]:
    cur = colors
    for _ in range(g.n):
        sig = []
        for v in g.vertices:
            neigh = tuple(sorted(cur[w] for w in g.neighbors(v)))
            sig.append((cur[v], neigh))
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        nxt = tuple(ranks[s] for s in sig)
        if nxt == cur:
            break
        cur = nxt
    return cur


def _class_perms(classes: list[list[int]]) -> Iterator[tuple[int, ...]]:
    """All vertex orderings that list each color class as a block, in
    every within-class arrangement."""

    def rec(i: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if i == len(classes):
            yield tuple(acc)
            return
        for perm in permutations(classes[i]):
            yield from rec(i + 1, acc + list(perm))

    yield from rec(0, [])


def canonical_key(g: FiniteGraph, colors: tuple[int, ...] | None = None) -> tuple:
    """Hashable canonical form of ``g`` under color-preserving isomorphism.

    ``colors`` assigns each vertex a color that isomorphisms must
    preserve; None means all vertices share one color.  Ordered graphs are
    relabeled by rank (their only automorphism is the identity).
    """
    base_colors = colors if colors is not None else (0,) * g.n
    cache_key = (g.n, g.edges, g.order, base_colors)
    hit = _key_cache.get(cache_key)
    if hit is not None:
        return hit

    if g.order is not None:
        seq = sorted(g.vertices, key=lambda v: g.order[v])  # type: ignore[index]
        pos = {v: i for i, v in enumerate(seq)}
        edges = tuple(sorted(tuple(sorted((pos[u], pos[v]))) for u, v in g.edges))
        key = ("ord", g.n, edges, tuple(base_colors[v] for v in seq))
        _key_cache[cache_key] = key
        return key

    refined = _refine(g, base_colors)
    # Keep the caller's colors primary so distinct input colors never merge.
    combined = tuple(sorted(set(zip(base_colors, refined))))
    rank = {c: i for i, c in enumerate(combined)}
    final = tuple(rank[(base_colors[v], refined[v])] for v in g.vertices)

    groups: dict[int, list[int]] = {}
    for v in g.vertices:
        groups.setdefault(final[v], []).append(v)
    classes = [groups[c] for c in sorted(groups)]

    best: tuple | None = None
    for seq in _class_perms(classes):
        pos = {v: i for i, v in enumerate(seq)}
        edges = tuple(sorted(tuple(sorted((pos[u], pos[v]))) for u, v in g.edges))
        cand = ("g", g.n, edges, tuple(base_colors[v] for v in seq))
        if best is None or cand < best:
            best = cand
    assert best is not None or g.n == 0
    key = best if best is not None else ("g", 0, (), ())
    _key_cache[cache_key] = key
    return key


def prefix_colors(g: FiniteGraph, fixed: int, rest_color: int | None = None) -> tuple[int, ...]:
    """Colors pinning vertices ``0..fixed-1`` individually; the rest share
    one color (so they may permute among themselves)."""
    tail = fixed if rest_color is None else rest_color
    return tuple(range(fixed)) + (tail,) * (g.n - fixed)


def pair_colors(g: FiniteGraph, base: VertexSet) -> tuple[int, ...]:
    """Two-color pattern distinguishing ``base`` setwise from the rest."""
    s = set(base)
    return tuple(0 if v in s else 1 for v in g.vertices)


def canonical_key_over_prefix(g: FiniteGraph, fixed: int) -> tuple:
    """Canonical form under isomorphisms fixing ``0..fixed-1`` pointwise."""
    return canonical_key(g, prefix_colors(g, fixed))


# -- isomorph-free generation ----------------------------------------------

_graphs_cache: dict[int, tuple[FiniteGraph, ...]] = {}


def all_graphs(n: int) -> tuple[FiniteGraph, ...]:
    """All simple graphs on ``n`` vertices, one per isomorphism class.

    Generated by vertex augmentation from the classes one size down, with
    canonical-key deduplication.  Deterministic order.
    """
    if n in _graphs_cache:
        return _graphs_cache[n]
    if n == 0:
        out = (graph(0),)
    else:
        seen: dict[tuple, FiniteGraph] = {}
        for h in all_graphs(n - 1):
            for mask in range(1 << (n - 1)):
                edges = set(h.edges)
                for v in range(n - 1):
                    if mask >> v & 1:
                        edges.add((v, n - 1))
                cand = graph(n, edges)
                key = canonical_key(cand)
                if key not in seen:
                    seen[key] = cand
        out = tuple(seen[k] for k in sorted(seen))
    _graphs_cache[n] = out
    return out


def graphs_up_to(n: int) -> Iterator[FiniteGraph]:
    for k in range(n + 1):
        yield from all_graphs(k)


def _interleavings(base_order: tuple[int, ...], k: int) -> Iterator[tuple[int, ...]]:
    """All rank assignments for a base of ``len(base_order)`` vertices plus
    ``k`` new ones, extending the base's relative order.

    Yields full order tuples for the combined graph where new vertices
    occupy any k of the ``len+k`` positions in every arrangement.
    """
    b = len(base_order)
    total = b + k
    for slots in combinations(range(total), k):
        slot_set = set(slots)
        base_positions = [p for p in range(total) if p not in slot_set]
        base_rank = sorted(range(b), key=lambda v: base_order[v])
        order = [0] * total
        for r, v in enumerate(base_rank):
            order[v] = base_positions[r]
        for arrangement in permutations(slots):
            for i, p in enumerate(arrangement):
                order[b + i] = p
            yield tuple(order)


def extension_graphs(base: FiniteGraph, k_new: int, member=None) -> list[FiniteGraph]:
    """Extension graphs adding exactly ``k_new`` vertices to ``base``.

    The base occupies vertices ``0..base.n-1`` unchanged; results are
    deduplicated up to isomorphism fixing the base pointwise and returned
    in canonical-key order.  ``member``, when given, filters candidates by
    class membership before the (more expensive) deduplication.

    For ordered bases every interleaving of the new vertices into the
    order is enumerated.
    """
    b = base.n
    total = b + k_new
    new_pairs = [(i, j) for i in range(b, total) for j in range(i)]
    found: dict[tuple, FiniteGraph] = {}
    orders: Iterable[tuple[int, ...] | None]
    if base.order is not None:
        orders = _interleavings(base.order, k_new)
    else:
        orders = (None,)
    for order in orders:
        for mask in range(1 << len(new_pairs)):
            edges = set(base.edges)
            for idx, (i, j) in enumerate(new_pairs):
                if mask >> idx & 1:
                    edges.add((j, i))
            cand = graph(total, edges, order)
            if member is not None and not member(cand):
                continue
            key = canonical_key_over_prefix(cand, b)
            if key not in found:
                found[key] = cand
    return [found[k] for k in sorted(found)]


def nonempty_subsets(items: Iterable[int], max_size: int | None = None) -> Iterator[VertexSet]:
    seq = sorted(items)
    top = len(seq) if max_size is None else min(max_size, len(seq))
    for size in range(1, top + 1):
        for combo in combinations(seq, size):
            yield combo


def subsets(items: Iterable[int], max_size: int | None = None) -> Iterator[VertexSet]:
    seq = sorted(items)
    top = len(seq) if max_size is None else min(max_size, len(seq))
    for size in range(top + 1):
        for combo in combinations(seq, size):
            yield combo
