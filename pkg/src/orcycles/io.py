"""Edge-list and DOT serialisation.

Edge-list format: first line ``n m``, then ``m`` lines ``u v`` (edge u->v,
0-indexed). The writer sorts edges lexicographically and uses LF endings.
"""

from __future__ import annotations

from pathlib import Path

from .errors import ParseError
from .graph import OrientedGraph


def format_edge_list(g: OrientedGraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> OrientedGraph:
    rows = [line.split() for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
    if not rows:
        raise ParseError("empty edge list: missing header line 'n m'")
    header = rows[0]
    if len(header) != 2:
        raise ParseError(f"header must be 'n m', got {' '.join(header)!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError(f"header must contain two integers, got {' '.join(header)!r}") from None
    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} edges but {len(body)} edge lines follow")
    edges = []
    for lineno, row in enumerate(body, start=2):
        if len(row) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {' '.join(row)!r}")
        try:
            edges.append((int(row[0]), int(row[1])))
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex in {' '.join(row)!r}") from None
    return OrientedGraph(n, edges)


def write_edge_list(g: OrientedGraph, path) -> None:
    Path(path).write_text(format_edge_list(g), newline="\n")


def read_edge_list(path) -> OrientedGraph:
    return parse_edge_list(Path(path).read_text())


def to_dot(g: OrientedGraph, name: str | None = None) -> str:
    head = f"digraph {name} {{" if name else "digraph {"
    lines = [head]
    # isolated vertices would otherwise vanish from the drawing
    touched = {x for e in g.edges for x in e}
    lines.extend(f"  {v};" for v in range(g.n) if v not in touched)
    lines.extend(f"  {u} -> {v};" for u, v in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"
