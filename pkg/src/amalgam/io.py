"""Graph text format and DOT export.

One graph per file.  Line 1 is ``n <count>``.  An optional ``order`` line
gives the rank of each vertex in index order (``order r0 r1 ...``).  Each
edge is a line ``e <u> <v>`` with ``u < v``.  Lines starting with ``#``
and blank lines are ignored.
"""

from __future__ import annotations

from .graphs import FiniteGraph, VertexSet


class GraphFormatError(ValueError):
    """Malformed graph text; carries the offending line number."""

    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_graph(text: str) -> FiniteGraph:
    n: int | None = None
    order: tuple[int, ...] | None = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "n":
            if n is not None:
                raise GraphFormatError(lineno, "duplicate n line")
            if len(parts) != 2 or not parts[1].isdigit():
                raise GraphFormatError(lineno, "expected 'n <count>'")
            n = int(parts[1])
        elif tag == "order":
            if n is None:
                raise GraphFormatError(lineno, "order line before n line")
            if order is not None:
                raise GraphFormatError(lineno, "duplicate order line")
            try:
                order = tuple(int(p) for p in parts[1:])
            except ValueError:
                raise GraphFormatError(lineno, "order entries must be integers") from None
            if sorted(order) != list(range(n)):
                raise GraphFormatError(lineno, "order must be a permutation of 0..n-1")
        elif tag == "e":
            if n is None:
                raise GraphFormatError(lineno, "edge before n line")
            if len(parts) != 3:
                raise GraphFormatError(lineno, "expected 'e <u> <v>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError(lineno, "edge endpoints must be integers") from None
            if not (0 <= u < v < n):
                raise GraphFormatError(lineno, f"edge ({u},{v}) must satisfy 0 <= u < v < n")
            edges.add((u, v))
        else:
            raise GraphFormatError(lineno, f"unknown directive {tag!r}")
    if n is None:
        raise GraphFormatError(1, "missing n line")
    return FiniteGraph(n, frozenset(edges), order)


def format_graph(g: FiniteGraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        for part in comment.splitlines():
            lines.append(f"# {part}")
    lines.append(f"n {g.n}")
    if g.order is not None:
        lines.append("order " + " ".join(str(r) for r in g.order))
    for u, v in sorted(g.edges):
        lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"


def load_graph(path: str) -> FiniteGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def save_graph(path: str, g: FiniteGraph, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_graph(g, comment))


def to_dot(g: FiniteGraph, name: str = "G", highlight: VertexSet = ()) -> str:
    """Undirected DOT rendering; order ranks become vertex labels."""
    mark = set(highlight)
    lines = [f"graph {name} {{"]
    for v in g.vertices:
        attrs = []
        if g.order is not None:
            attrs.append(f'label="{v} (rank {g.order[v]})"')
        if v in mark:
            attrs.append("style=filled")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {v}{suffix};")
    for u, v in sorted(g.edges):
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
