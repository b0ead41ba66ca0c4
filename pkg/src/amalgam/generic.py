"""Finite-stage construction of an approximation to the class generic.

The builder keeps a growing chain of members.  A task is a catalogued
strong pattern pair together with a strong embedding of its small side
into the current stage; serving a task means checking whether the big
side already extends it strongly and, if not, grafting the pattern on by
free amalgamation.  Tasks are served in first-in first-out order, so
every task discovered is eventually served when stages suffice.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field
from enum import Enum

from .canon import canonical_key, pair_colors, subsets
from .graphs import FiniteGraph, VertexSet, embeddings_of, induced, vset
from .io import format_graph
from .kernel import (
    AmalgamationError,
    ClassSpec,
    PreconditionError,
    amalgam_union,
    induced_cached,
    member_graphs,
    strong_cached,
)


@dataclass(frozen=True)
class Pattern:
    """A strong pair (small side inside big side), the unit of injectivity.

    ``shape`` is the big side; ``base`` lists the shape vertices that form
    the small side.  ``small`` is the induced structure on ``base``.
    """

    shape: FiniteGraph
    base: VertexSet
    small: FiniteGraph

    def describe(self) -> str:
        return f"|A|={len(self.base)} |B|={self.shape.n}"


class TaskStatus(Enum):
    OPEN = "OPEN"
    SATISFIED = "SATISFIED"


@dataclass
class Task:
    """A pattern plus a strong embedding of its small side into the
    current stage; carries the witnessing extension once satisfied."""

    pattern_index: int
    anchor: tuple[int, ...]
    status: TaskStatus = TaskStatus.OPEN
    witness: tuple[int, ...] | None = None


@dataclass
class StageRecord:
    stage: int
    snapshot: str
    vertices: int
    discovered: int
    served: str | None
    amalgam: bool
    open_tasks: int
    satisfied_tasks: int


@dataclass
class StageLog:
    spec_name: str
    stages: int
    pattern_bound: int
    seed: int
    records: list[StageRecord] = field(default_factory=list)
    snapshots: list[FiniteGraph] | None = None

    def digest(self) -> str:
        h = hashlib.sha256()
        h.update(f"{self.spec_name}|{self.stages}|{self.pattern_bound}|{self.seed}\n".encode())
        for r in self.records:
            h.update(
                f"{r.stage}|{r.snapshot}|{r.vertices}|{r.discovered}|{r.served}|{r.amalgam}|"
                f"{r.open_tasks}|{r.satisfied_tasks}\n".encode()
            )
        return h.hexdigest()

    def format(self) -> str:
        lines = [
            f"# build {self.spec_name} stages={self.stages} bound={self.pattern_bound} seed={self.seed}"
        ]
        for r in self.records:
            lines.append(
                f"stage {r.stage} snapshot={r.snapshot[:12]} n={r.vertices} "
                f"discovered={r.discovered} served={r.served or '-'} amalgam={int(r.amalgam)} "
                f"open={r.open_tasks} satisfied={r.satisfied_tasks}"
            )
        lines.append(f"digest {self.digest()}")
        return "\n".join(lines) + "\n"


def graph_digest(g: FiniteGraph) -> str:
    return hashlib.sha256(format_graph(g).encode()).hexdigest()


def pattern_catalogue(spec: ClassSpec, bound: int) -> list[Pattern]:
    """All strong proper pairs with big side at most ``bound`` vertices,
    one per isomorphism class of the marked pair, deterministic order."""
    if bound > 5:
        raise PreconditionError("pattern bound capped at 5")
    seen: set[tuple] = set()
    out: list[Pattern] = []
    for n in range(bound + 1):
        for shape in member_graphs(spec, n):
            for base in subsets(shape.vertices, shape.n - 1):
                key = canonical_key(shape, pair_colors(shape, base))
                if key in seen:
                    continue
                seen.add(key)
                if strong_cached(spec, base, shape):
                    out.append(Pattern(shape, base, induced_cached(shape, base)))
    return out


def _strong_anchors(spec: ClassSpec, pattern: Pattern, m: FiniteGraph) -> list[tuple[int, ...]]:
    """Embeddings of the pattern's small side into m with strong image,
    as anchor tuples (image of base position i at slot i)."""
    out = []
    for emb in embeddings_of(pattern.small, m):
        anchor = tuple(emb[i] for i in range(pattern.small.n))
        if strong_cached(spec, vset(anchor), m):
            out.append(anchor)
    return out


def _satisfied(spec: ClassSpec, pattern: Pattern, anchor: tuple[int, ...], m: FiniteGraph) -> tuple[int, ...] | None:
    """A strong extension of the anchored small side to the full shape, or
    None."""
    partial = {pattern.base[i]: anchor[i] for i in range(len(anchor))}
    for emb in embeddings_of(pattern.shape, m, partial):
        image = vset(emb.values())
        if strong_cached(spec, image, m):
            return tuple(emb[i] for i in range(pattern.shape.n))
    return None


def graft(spec: ClassSpec, m: FiniteGraph, pattern: Pattern, anchor: tuple[int, ...]) -> FiniteGraph:
    """Free amalgam of the pattern's shape onto m along the anchor.

    Validates the result: it must be a member with both the old stage and
    the new shape image strong in it, else :class:`AmalgamationError`.
    """
    ident = {pattern.base[i]: anchor[i] for i in range(len(anchor))}
    parts = amalgam_union(m, pattern.shape, ident)
    d = parts.graph
    new_image = vset(parts.c_image)
    if not spec.membership(d):
        raise AmalgamationError(
            f"free amalgam leaves the class {spec.name}", (m, pattern, anchor)
        )
    if not strong_cached(spec, vset(parts.b_image), d):
        raise AmalgamationError(
            f"stage is not strong in its free extension ({spec.name})", (m, pattern, anchor)
        )
    if not strong_cached(spec, new_image, d):
        raise AmalgamationError(
            f"grafted pattern image is not strong ({spec.name})", (m, pattern, anchor)
        )
    return d


def build_generic(
    spec: ClassSpec,
    stages: int,
    pattern_bound: int,
    seed: int,
    discovery_cap: int = 64,
    keep_snapshots: bool = False,
) -> tuple[FiniteGraph, StageLog]:
    """Grow a chain of members serving injectivity tasks, one amalgam per
    stage, starting from the empty structure.

    Rescans discover up to ``discovery_cap`` new tasks per stage (shuffled
    reproducibly from the seed before enqueueing); a popped task whose
    extension already exists is marked satisfied without an amalgam.
    Identical parameters reproduce identical logs.  ``keep_snapshots``
    retains every stage graph on the log for external chain checks.
    """
    catalogue = pattern_catalogue(spec, pattern_bound)
    m = spec.empty_graph()
    log = StageLog(spec.name, stages, pattern_bound, seed, snapshots=[] if keep_snapshots else None)
    tasks: list[Task] = []
    queue: list[int] = []
    known: set[tuple[int, tuple[int, ...]]] = set()

    for stage in range(stages):
        rng = random.Random((seed * 1_000_003 + stage) & 0xFFFFFFFF)
        fresh: list[tuple[int, tuple[int, ...]]] = []
        for pi, pattern in enumerate(catalogue):
            for anchor in _strong_anchors(spec, pattern, m):
                key = (pi, anchor)
                if key not in known:
                    fresh.append(key)
        rng.shuffle(fresh)
        fresh = fresh[:discovery_cap]
        for key in fresh:
            known.add(key)
            tasks.append(Task(*key))
            queue.append(len(tasks) - 1)

        served: str | None = None
        amalgam = False
        while queue:
            ti = queue.pop(0)
            task = tasks[ti]
            if task.status is TaskStatus.SATISFIED:
                continue
            pattern = catalogue[task.pattern_index]
            witness = _satisfied(spec, pattern, task.anchor, m)
            if witness is not None:
                task.status = TaskStatus.SATISFIED
                task.witness = witness
                continue
            m = graft(spec, m, pattern, task.anchor)
            task.status = TaskStatus.SATISFIED
            served = f"{pattern.describe()} at {task.anchor}"
            amalgam = True
            break

        open_count = sum(1 for t in tasks if t.status is TaskStatus.OPEN)
        sat_count = len(tasks) - open_count
        log.records.append(
            StageRecord(stage, graph_digest(m), m.n, len(fresh), served, amalgam, open_count, sat_count)
        )
        if log.snapshots is not None:
            log.snapshots.append(m)
    return m, log


@dataclass
class InjectivityReport:
    """Unmet injectivity instances at a pattern bound: anchors of strong
    small-side embeddings with no strong extension to the big side."""

    pattern_bound: int
    total: int
    unmet: list[tuple[Pattern, tuple[int, ...]]]

    @property
    def met(self) -> int:
        return self.total - len(self.unmet)


def verify_injectivity(
    spec: ClassSpec,
    m: FiniteGraph,
    pattern_bound: int,
    anchors_within: VertexSet | None = None,
) -> InjectivityReport:
    """For every catalogued pattern and every strong embedding of its
    small side (optionally restricted to ``anchors_within``), report
    whether a strong extension to the big side exists in ``m``."""
    if pattern_bound > 4:
        raise PreconditionError("injectivity bound capped at 4")
    allowed = None if anchors_within is None else set(anchors_within)
    unmet: list[tuple[Pattern, tuple[int, ...]]] = []
    total = 0
    for pattern in pattern_catalogue(spec, pattern_bound):
        for anchor in _strong_anchors(spec, pattern, m):
            if allowed is not None and not set(anchor) <= allowed:
                continue
            total += 1
            if _satisfied(spec, pattern, anchor, m) is None:
                unmet.append((pattern, anchor))
    return InjectivityReport(pattern_bound, total, unmet)


def verify_age(spec: ClassSpec, m: FiniteGraph, max_size: int = 5) -> bool:
    """Every induced substructure of ``m`` up to ``max_size`` vertices is
    a member.  Trivially true for classes containing all finite graphs."""
    if spec.membership_trivial:
        return spec.membership(m if m.n <= max_size else induced(m, range(max_size)))
    from itertools import combinations

    for size in range(min(max_size, m.n) + 1):
        for s in combinations(m.vertices, size):
            if not spec.membership(induced_cached(m, s)):
                return False
    return True
