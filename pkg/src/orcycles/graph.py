"""Oriented graphs: the immutable substrate every other module works on.

Vertices are the integers ``0..n-1``. Each vertex keeps its out- and
in-neighbourhood as a Python ``int`` bitset, which gives O(1) edge queries and
cheap set algebra on neighbourhoods.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    AntiparallelPair,
    DuplicateEdge,
    LoopEdge,
    VertexOutOfRange,
    ZeroSize,
)


def iter_bits(mask: int):
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


class OrientedGraph:
    """A directed graph with no loops and no antiparallel pairs.

    Instances are immutable; build them with :func:`build_graph` or the
    constructor, which validates every invariant.
    """

    __slots__ = ("n", "_out", "_in", "_m", "__dict__")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise VertexOutOfRange(f"vertex count must be non-negative, got {n}")
        out = [0] * n
        inn = [0] * n
        m = 0
        for u, v in edges:
            u = int(u)
            v = int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(f"edge ({u},{v}) has an endpoint outside [0,{n})", (u, v))
            if u == v:
                raise LoopEdge(f"loop edge ({u},{u})", (u, v))
            if (out[u] >> v) & 1:
                raise DuplicateEdge(f"duplicate edge ({u},{v})", (u, v))
            if (out[v] >> u) & 1:
                raise AntiparallelPair(f"edge ({u},{v}) is antiparallel to ({v},{u})", (u, v))
            out[u] |= 1 << v
            inn[v] |= 1 << u
            m += 1
        self.n = n
        self._out = tuple(out)
        self._in = tuple(inn)
        self._m = m

    @classmethod
    def _from_masks(cls, n: int, out: Sequence[int]) -> "OrientedGraph":
        # Trusted internal path: masks must already satisfy the invariants.
        g = cls.__new__(cls)
        inn = [0] * n
        m = 0
        for u in range(n):
            for v in iter_bits(out[u]):
                inn[v] |= 1 << u
                m += 1
        g.n = n
        g._out = tuple(out)
        g._in = tuple(inn)
        g._m = m
        return g

    # -- queries ---------------------------------------------------------

    @property
    def m(self) -> int:
        return self._m

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._out[u] >> v) & 1)

    def out_mask(self, v: int) -> int:
        return self._out[v]

    def in_mask(self, v: int) -> int:
        return self._in[v]

    @cached_property
    def out_lists(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(iter_bits(x)) for x in self._out)

    @cached_property
    def in_lists(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(iter_bits(x)) for x in self._in)

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return self.out_lists[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return self.in_lists[v]

    def out_degree(self, v: int) -> int:
        return self._out[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self._in[v].bit_count()

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges, sorted lexicographically."""
        return tuple((u, v) for u in range(self.n) for v in self.out_lists[u])

    def adjacency_matrix(self, dtype=bool) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        if self._m:
            e = np.asarray(self.edges, dtype=np.intp)
            a[e[:, 0], e[:, 1]] = 1
        return a

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Out-adjacency in CSR form (indptr, indices), neighbours ascending."""
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        for v in range(self.n):
            indptr[v + 1] = indptr[v] + len(self.out_lists[v])
        indices = np.fromiter(
            (w for v in range(self.n) for w in self.out_lists[v]), dtype=np.int64, count=self._m
        )
        return indptr, indices

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, OrientedGraph):
            return NotImplemented
        return self.n == other.n and self._out == other._out

    def __hash__(self):
        return hash((self.n, self._out))

    def __repr__(self):
        return f"OrientedGraph(n={self.n}, m={self._m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> OrientedGraph:
    """Validate ``edges`` and return the oriented graph on ``n`` vertices."""
    return OrientedGraph(n, edges)


@dataclass(frozen=True)
class DegreeSummary:
    min_outdegree: int
    min_indegree: int
    min_semidegree: int
    outdegrees: tuple[int, ...]
    indegrees: tuple[int, ...]


def degree_summary(g: OrientedGraph) -> DegreeSummary:
    outs = tuple(g.out_degree(v) for v in range(g.n))
    ins = tuple(g.in_degree(v) for v in range(g.n))
    dout = min(outs, default=0)
    din = min(ins, default=0)
    return DegreeSummary(dout, din, min(dout, din), outs, ins)


def reverse(g: OrientedGraph) -> OrientedGraph:
    return OrientedGraph._from_masks(g.n, g._in)


def blow_up(g: OrientedGraph, sizes: Sequence[int]) -> OrientedGraph:
    """Replace vertex ``v`` by an independent set of ``sizes[v]`` vertices.

    Parts are laid out consecutively: part ``v`` occupies the block starting at
    ``sum(sizes[:v])``.
    """
    sizes = [int(s) for s in sizes]
    if len(sizes) != g.n:
        raise ValueError(f"expected {g.n} part sizes, got {len(sizes)}")
    for v, s in enumerate(sizes):
        if s < 1:
            raise ZeroSize(f"part size for vertex {v} must be positive, got {s}")
    offsets = [0]
    for s in sizes:
        offsets.append(offsets[-1] + s)
    part_masks = [((1 << sizes[v]) - 1) << offsets[v] for v in range(g.n)]
    total = offsets[-1]
    out = [0] * total
    for u in range(g.n):
        target = 0
        for v in g.out_lists[u]:
            target |= part_masks[v]
        for x in range(offsets[u], offsets[u + 1]):
            out[x] = target
    return OrientedGraph._from_masks(total, out)


def induced_subgraph(g: OrientedGraph, keep: Iterable[int]) -> OrientedGraph:
    """Subgraph induced on ``keep``, relabelled ``0..len(keep)-1`` in increasing order."""
    kept = sorted(set(int(v) for v in keep))
    for v in kept:
        if not 0 <= v < g.n:
            raise VertexOutOfRange(f"vertex {v} outside [0,{g.n})")
    index = {v: i for i, v in enumerate(kept)}
    keep_mask = 0
    for v in kept:
        keep_mask |= 1 << v
    out = []
    for v in kept:
        new = 0
        for w in iter_bits(g.out_mask(v) & keep_mask):
            new |= 1 << index[w]
        out.append(new)
    return OrientedGraph._from_masks(len(kept), out)


def directed_cycle(length: int) -> OrientedGraph:
    """The directed cycle ``0 -> 1 -> ... -> length-1 -> 0``."""
    return OrientedGraph(length, [(i, (i + 1) % length) for i in range(length)])


def directed_path(length: int) -> OrientedGraph:
    """Directed path with ``length`` edges."""
    return OrientedGraph(length + 1, [(i, i + 1) for i in range(length)])


def transitive_tournament(n: int) -> OrientedGraph:
    return OrientedGraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def one_way_bipartite(p: int, q: int) -> OrientedGraph:
    """Complete bipartite graph with every edge oriented from the first part."""
    return OrientedGraph(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def disjoint_union(*graphs: OrientedGraph) -> OrientedGraph:
    out: list[int] = []
    offset = 0
    for h in graphs:
        out.extend(mask << offset for mask in h._out)
        offset += h.n
    return OrientedGraph._from_masks(offset, out)


def add_edges(g: OrientedGraph, edges: Iterable[tuple[int, int]], extra_vertices: int = 0) -> OrientedGraph:
    """Return ``g`` plus new edges (and optionally new isolated vertices), fully validated."""
    return OrientedGraph(g.n + extra_vertices, list(g.edges) + list(edges))
