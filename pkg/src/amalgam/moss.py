"""Finite certificates around structures without finite closures.

A truncation is a finite stand-in for a structure made of bi-infinite
ordered edge-paths separated by dense blocks of isolated vertices: the
paths are cut at a safety margin, the dense blocks become finitely many
filler vertices.  Claims are certified only where the cut is invisible:
growth tables confine resolutions to windows around an interior vertex,
and the injectivity suite anchors embeddings in the interior.
"""

from __future__ import annotations

from dataclasses import dataclass

from .closure import enumerate_minimal_resolutions
from .canon import extension_graphs
from .graphs import FiniteGraph, VertexSet, graph, induced, vset
from .generic import InjectivityReport, verify_injectivity
from .kernel import ClassSpec, PreconditionError, is_minimal_pair_abstract, member_graphs


@dataclass(frozen=True)
class Truncation:
    """Ordered graph of successor-edge paths with interleaved filler.

    ``paths`` lists each path's vertices in rank order, ``filler_blocks``
    the isolated-vertex runs standing in for dense blocks; ``margin`` is
    the safety radius inside which the truncation boundary must not
    influence certified claims.
    """

    graph: FiniteGraph
    paths: tuple[tuple[int, ...], ...]
    filler_blocks: tuple[tuple[int, ...], ...]
    margin: int

    @property
    def filler(self) -> tuple[int, ...]:
        return tuple(v for block in self.filler_blocks for v in block)

    def is_filler(self, v: int) -> bool:
        return any(v in block for block in self.filler_blocks)

    def path_of(self, v: int) -> tuple[int, ...] | None:
        for p in self.paths:
            if v in p:
                return p
        return None

    def is_interior(self, v: int) -> bool:
        """Interior means the cut is invisible within the margin: a path
        vertex at least ``margin`` from both path ends, or a filler vertex
        at least ``margin`` from both ends of its block."""
        for block in self.filler_blocks:
            if v in block:
                i = block.index(v)
                return min(i, len(block) - 1 - i) >= self.margin
        p = self.path_of(v)
        i = p.index(v)
        return min(i, len(p) - 1 - i) >= self.margin

    @property
    def interior(self) -> VertexSet:
        return vset(v for v in self.graph.vertices if self.is_interior(v))


def build_truncation(num_paths: int, path_len: int, filler: int, margin: int) -> Truncation:
    """Deterministic layout: paths of ``path_len`` edges in rank order,
    with ``filler`` isolated vertices spread as evenly as possible over
    the gaps between consecutive paths (after the last path when there is
    only one), earlier gaps taking the extras."""
    if num_paths < 1 or path_len < 1 or filler < 0 or margin < 0:
        raise PreconditionError("truncation parameters out of range")
    gaps = max(num_paths - 1, 1)
    per_gap = [filler // gaps + (1 if i < filler % gaps else 0) for i in range(gaps)]
    vertices_per_path = path_len + 1
    edges = []
    paths = []
    blocks = []
    label = 0
    for pi in range(num_paths):
        path = tuple(range(label, label + vertices_per_path))
        paths.append(path)
        edges.extend((v, v + 1) for v in path[:-1])
        label += vertices_per_path
        if pi < gaps and per_gap[pi]:
            blocks.append(tuple(range(label, label + per_gap[pi])))
            label += per_gap[pi]
    g = graph(label, edges, order=range(label))
    return Truncation(g, tuple(paths), tuple(blocks), margin)


def find_minimal_pair_chain(
    spec: ClassSpec, length: int, max_step: int = 2, start_bound: int = 2
) -> list[FiniteGraph] | None:
    """A chain of graphs, each a minimal extension of the one before
    (previous graph as prefix), of the requested length; None when the
    bounded search exhausts.

    Depth-first with backtracking: start candidates are members up to
    ``start_bound`` vertices, steps add up to ``max_step`` vertices.
    """
    if length > 20:
        raise PreconditionError("chain length capped at 20")

    def extend(chain: list[FiniteGraph]) -> list[FiniteGraph] | None:
        if len(chain) >= length:
            return chain
        cur = chain[-1]
        for k in range(1, max_step + 1):
            for cand in extension_graphs(cur, k, member=spec.membership):
                if is_minimal_pair_abstract(spec, cand, tuple(range(cur.n))):
                    hit = extend(chain + [cand])
                    if hit is not None:
                        return hit
        return None

    for n in range(start_bound + 1):
        for start in member_graphs(spec, n):
            hit = extend([start])
            if hit is not None:
                return hit
    return None


UNBOUNDED = "UNBOUNDED-AT-RADIUS"


@dataclass
class GrowthTable:
    """Radius against smallest resolution size within the window around a
    vertex; None entries mean no in-window resolution exists."""

    vertex: int
    rows: list[tuple[int, int | None]]

    def as_text(self) -> str:
        width = max(len(str(r)) for r, _ in self.rows)
        lines = [f"{'radius':>{max(width, 6)}}  size"]
        for r, s in self.rows:
            lines.append(f"{r:>{max(width, 6)}}  {s if s is not None else UNBOUNDED}")
        return "\n".join(lines) + "\n"

    def as_csv(self) -> str:
        lines = ["radius,size"]
        for r, s in self.rows:
            lines.append(f"{r},{s if s is not None else UNBOUNDED}")
        return "\n".join(lines) + "\n"


def closure_growth(spec: ClassSpec, x: int, t: Truncation, radii: list[int]) -> GrowthTable:
    """Smallest resolution of ``{x}`` confined to each window.

    The window of radius r is the rank interval of half-width r around
    ``x``, taken as the ambient itself, so the verdict is decidable and
    monotone in r: a vertex on the window edge owes nothing to neighbors
    outside it.  ``x`` must be interior (filler, or a path vertex with
    ``margin`` clearance) and the margin must cover the largest radius.
    """
    g = t.graph
    if not 0 <= x < g.n:
        raise PreconditionError("vertex out of range")
    if not (t.is_filler(x) or t.is_interior(x)):
        raise PreconditionError("vertex is not interior to the truncation")
    if radii and t.margin < max(radii) and not t.is_filler(x):
        raise PreconditionError("margin smaller than the largest radius")
    rows: list[tuple[int, int | None]] = []
    rank_x = g.order[x]  # type: ignore[index]
    for r in sorted(radii):
        window = vset(v for v in g.vertices if abs(g.order[v] - rank_x) <= r)  # type: ignore[index]
        ambient = induced(g, window)
        x_local = window.index(x)
        found = enumerate_minimal_resolutions(spec, (x_local,), ambient)
        rows.append((r, min((len(b) for b in found), default=None)))
    return GrowthTable(x, rows)


def injectivity_suite(spec: ClassSpec, t: Truncation, bound: int) -> InjectivityReport:
    """Injectivity verification anchored in the margin-safe interior;
    witness extensions may land anywhere in the truncation."""
    if bound > 3:
        raise PreconditionError("suite bound capped at 3")
    return verify_injectivity(spec, t.graph, bound, anchors_within=t.interior)
