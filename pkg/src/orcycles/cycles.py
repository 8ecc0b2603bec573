"""Cycle, walk, shortcut and path-length searches on oriented graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import _accel
from .errors import InternalInvariantViolation, PreconditionViolation, SearchBudgetExceeded
from .graph import OrientedGraph, iter_bits
from .quotient import quotient_cycle, twin_quotient

DEFAULT_BUDGET = 10**8
ENGINES = ("auto", "dfs", "quotient", "subset")


@dataclass(frozen=True)
class CycleWitness:
    vertices: tuple[int, ...]

    def __len__(self):
        return len(self.vertices)

    def validate(self, g: OrientedGraph) -> None:
        validate_cycle(g, self.vertices)

    def __str__(self):
        return " ".join(map(str, self.vertices))


@dataclass(frozen=True)
class ShortcutWitness:
    path: tuple[int, ...]

    @property
    def s(self) -> int:
        return len(self.path) - 1

    @property
    def source(self) -> int:
        return self.path[0]

    @property
    def sink(self) -> int:
        return self.path[-1]

    @property
    def chord(self) -> tuple[int, int]:
        return (self.path[0], self.path[-1])

    def validate(self, g: OrientedGraph) -> None:
        p = self.path
        if len(p) < 3 or len(set(p)) != len(p):
            raise InternalInvariantViolation(f"bad shortcut vertex sequence {p}")
        for a, b in zip(p, p[1:]):
            if not g.has_edge(a, b):
                raise InternalInvariantViolation(f"shortcut edge {a}->{b} missing")
        if not g.has_edge(p[0], p[-1]):
            raise InternalInvariantViolation(f"shortcut chord {p[0]}->{p[-1]} missing")

    def __str__(self):
        return " ".join(map(str, self.path))


@dataclass(frozen=True)
class ChordedFourCycle:
    cycle: tuple[int, int, int, int]
    chords: tuple[tuple[int, int], ...]


def validate_cycle(g: OrientedGraph, vertices) -> None:
    """Raise InternalInvariantViolation unless ``vertices`` is a directed cycle of ``g``."""
    vs = tuple(vertices)
    if len(vs) < 3:
        raise InternalInvariantViolation(f"cycle too short: {vs}")
    if len(set(vs)) != len(vs):
        raise InternalInvariantViolation(f"cycle repeats a vertex: {vs}")
    for i, v in enumerate(vs):
        w = vs[(i + 1) % len(vs)]
        if not (0 <= v < g.n) or not g.has_edge(v, w):
            raise InternalInvariantViolation(f"cycle edge {v}->{w} missing")


def is_valid_cycle(g: OrientedGraph, vertices) -> bool:
    try:
        validate_cycle(g, vertices)
    except InternalInvariantViolation:
        return False
    return True


# -- CSR plumbing ------------------------------------------------------------

def _csr_pair(g: OrientedGraph):
    cache = g.__dict__.get("_csr_pair")
    if cache is None:
        out_ptr, out_idx = g.csr()
        in_ptr = np.zeros(g.n + 1, dtype=np.int64)
        for v in range(g.n):
            in_ptr[v + 1] = in_ptr[v] + len(g.in_lists[v])
        in_idx = np.fromiter((w for v in range(g.n) for w in g.in_lists[v]), dtype=np.int64, count=g.m)
        if _accel.BACKEND == "python":
            cache = (out_ptr.tolist(), out_idx.tolist(), in_ptr.tolist(), in_idx.tolist())
        else:
            cache = (out_ptr, out_idx, in_ptr, in_idx)
        g.__dict__["_csr_pair"] = cache
    return cache


# -- cycles -------------------------------------------------------------------

def _dfs_cycle(g: OrientedGraph, length: int, budget: int):
    out_ptr, out_idx, in_ptr, in_idx = _csr_pair(g)
    allowed = bytearray(b"\x01") * g.n
    spent = 0
    for s in range(g.n):
        if s:
            allowed[s - 1] = 0
        if not g.out_mask(s) or not g.in_mask(s):
            continue
        # vertices below s are excluded: s is the cycle's minimum
        allowed_s = bytearray(allowed)
        allowed_s[s] = 0
        dist = _accel.reverse_bfs(in_ptr, in_idx, s, allowed_s)
        dist[s] = 0
        # the start itself is judged on its best return distance
        best = min((dist[w] for w in g.out_lists[s] if w > s), default=_accel.kernels.UNREACHED)
        if best + 1 > length:
            continue
        dist_start = list(dist)
        dist_start[s] = best + 1
        path, used, exhausted = _accel.find_path(
            out_ptr, out_idx, s, s, length, allowed_s, dist_start, budget - spent
        )
        spent += used
        if exhausted or spent > budget:
            raise SearchBudgetExceeded(budget, "cycle search")
        if path is not None:
            return path[:-1]
    return None


QUOTIENT_TRIAL_STATES = 2_000_000


def _auto_cycle(g: OrientedGraph, length: int, budget: int):
    q = twin_quotient(g)
    if len(q.classes) < g.n:
        try:
            return quotient_cycle(g, length, min(budget, QUOTIENT_TRIAL_STATES), q=q)
        except SearchBudgetExceeded:
            pass  # twins did not collapse enough; backtracking decides
    return _dfs_cycle(g, length, budget)


def contains_cycle_of_length(g: OrientedGraph, length: int, budget: int = DEFAULT_BUDGET,
                             engine: str = "auto") -> CycleWitness | None:
    """Exact test for a directed cycle with exactly ``length`` vertices.

    ``engine`` is one of ``auto``, ``dfs`` (backtracking with reachability
    pruning), ``quotient`` (twin-class DP) or ``subset`` (the same DP without
    merging twins; intended for n <= 20). ``auto`` runs the quotient DP when
    the graph has twins and falls back to ``dfs`` if that DP grows too large.
    """
    if length < 3:
        raise PreconditionViolation(f"cycle length must be at least 3, got {length}")
    if engine not in ENGINES:
        raise PreconditionViolation(f"unknown engine {engine!r}; choose from {', '.join(ENGINES)}")
    if length > g.n:
        return None
    if engine == "auto":
        verts = _auto_cycle(g, length, budget)
    elif engine == "dfs":
        verts = _dfs_cycle(g, length, budget)
    else:
        verts = quotient_cycle(g, length, budget, merge=(engine == "quotient"))
    if verts is None:
        return None
    validate_cycle(g, verts)
    return CycleWitness(tuple(verts))


def all_simple_cycles(g: OrientedGraph):
    """Every directed cycle once, rotated to start at its minimum vertex.

    Plain exhaustive enumeration; meant as an oracle for small graphs.
    """
    found = []

    def extend(start, path, on):
        v = path[-1]
        for w in g.out_lists[v]:
            if w == start and len(path) >= 3:
                found.append(tuple(path))
            elif w > start and not (on >> w) & 1:
                path.append(w)
                extend(start, path, on | (1 << w))
                path.pop()

    for s in range(g.n):
        extend(s, [s], 1 << s)
    return found


# -- walks ---------------------------------------------------------------------

def _bool_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # float32 BLAS product is exact here: entries are 0/1 and n stays far below 2^24
    return (a.astype(np.float32) @ b.astype(np.float32)) > 0


def walk_power(g: OrientedGraph, length: int) -> np.ndarray:
    """Boolean matrix R with R[u, v] iff a walk of exactly ``length`` edges goes u -> v."""
    if length < 0:
        raise PreconditionViolation("walk length must be non-negative")
    result = np.eye(g.n, dtype=bool)
    base = g.adjacency_matrix(bool)
    e = length
    while e:
        if e & 1:
            result = _bool_matmul(result, base)
        e >>= 1
        if e:
            base = _bool_matmul(base, base)
    return result


def contains_closed_walk_of_length(g: OrientedGraph, length: int) -> bool:
    if length < 1:
        raise PreconditionViolation(f"walk length must be at least 1, got {length}")
    if g.n == 0:
        return False
    return bool(np.any(np.diagonal(walk_power(g, length))))


def closed_walk_lengths(g: OrientedGraph, max_len: int) -> list[int]:
    """All L in 1..max_len for which some closed walk of length L exists."""
    if g.n == 0:
        return []
    a = g.adjacency_matrix(bool)
    cur = a.copy()
    out = []
    for L in range(1, max_len + 1):
        if L > 1:
            cur = _bool_matmul(cur, a)
        if np.any(np.diagonal(cur)):
            out.append(L)
    return out


def closed_walk_residues(g: OrientedGraph, k: int, max_len: int) -> set[int]:
    return {L % k for L in closed_walk_lengths(g, max_len)}


# -- girth ---------------------------------------------------------------------

def girth(g: OrientedGraph) -> int | None:
    """Length of a shortest directed cycle, or None for an acyclic graph."""
    best = None
    for v in range(g.n):
        seen = 1 << v
        frontier = g.out_mask(v)
        d = 1
        while frontier and (best is None or d < best):
            if (frontier >> v) & 1:
                best = d
                break
            seen |= frontier
            nxt = 0
            for w in iter_bits(frontier):
                nxt |= g.out_mask(w)
            frontier = nxt & ~(seen & ~(1 << v))
            d += 1
    return best


def shortest_cycle(g: OrientedGraph) -> CycleWitness | None:
    L = girth(g)
    if L is None:
        return None
    return contains_cycle_of_length(g, L)


# -- paths and shortcuts --------------------------------------------------------

def find_path_of_length(g: OrientedGraph, x: int, y: int, length: int,
                        avoid: Iterable[int] = (), budget: int = DEFAULT_BUDGET):
    """Lexicographically least simple path x -> y with exactly ``length`` edges, or None."""
    if x == y:
        raise PreconditionViolation("path endpoints must differ")
    avoid_set = set(avoid)
    out_ptr, out_idx, in_ptr, in_idx = _csr_pair(g)
    allowed = bytearray(g.n)
    for v in range(g.n):
        if v not in avoid_set and v != x and v != y:
            allowed[v] = 1
    dist = _accel.reverse_bfs(in_ptr, in_idx, y, allowed)
    # x is never an intermediate vertex; give it its true distance for the root test
    best = min((dist[w] for w in g.out_lists[x] if allowed[w] or w == y), default=_accel.kernels.UNREACHED)
    dist = list(dist)
    dist[x] = best + 1
    path, _, exhausted = _accel.find_path(out_ptr, out_idx, x, y, length, allowed, dist, budget)
    if exhausted:
        raise SearchBudgetExceeded(budget, "path search")
    return path


def path_length_set(g: OrientedGraph, x: int, y: int, max_len: int,
                    avoid: Iterable[int] = (), budget: int = DEFAULT_BUDGET) -> set[int]:
    """All L <= max_len admitting a simple x -> y path of length L whose
    internal vertices avoid ``avoid``."""
    avoid_set = set(avoid)
    if x in avoid_set or y in avoid_set:
        raise PreconditionViolation("avoid set must not contain the endpoints")
    if x == y:
        raise PreconditionViolation("path endpoints must differ")
    top = min(max_len, g.n - 1 - len(avoid_set - {x, y}))
    lengths = set()
    for L in range(1, top + 1):
        if find_path_of_length(g, x, y, L, avoid_set, budget) is not None:
            lengths.add(L)
    return lengths


def find_shortcut(g: OrientedGraph, s: int, budget: int = DEFAULT_BUDGET) -> ShortcutWitness | None:
    """An s-shortcut: a path of s edges plus the chord from its first to its last vertex."""
    if s < 2:
        raise PreconditionViolation(f"shortcut length must be at least 2, got {s}")
    for a, b in g.edges:
        path = find_path_of_length(g, a, b, s, (), budget)
        if path is not None:
            w = ShortcutWitness(tuple(path))
            w.validate(g)
            return w
    return None


def detect_transitive_triangle(g: OrientedGraph):
    """Return (a, b, c) with edges ab, bc, ac, or None."""
    for a in range(g.n):
        oa = g.out_mask(a)
        for b in g.out_lists[a]:
            common = g.out_mask(b) & oa
            if common:
                c = (common & -common).bit_length() - 1
                return (a, b, c)
    return None


def detect_c4_with_chord(g: OrientedGraph) -> ChordedFourCycle | None:
    """A directed 4-cycle a,b,c,d carrying the chord a->c (and possibly a chord
    between b and d). Every chorded C_4 can be rotated into this shape."""
    for a, c in g.edges:
        bs = g.out_mask(a) & g.in_mask(c)
        ds = g.out_mask(c) & g.in_mask(a)
        if not bs or not ds:
            continue
        # prefer a pair that also carries the second chord
        for b in iter_bits(bs):
            second = ds & (g.out_mask(b) | g.in_mask(b))
            if second:
                d = (second & -second).bit_length() - 1
                extra = (b, d) if g.has_edge(b, d) else (d, b)
                return ChordedFourCycle((a, b, c, d), ((a, c), extra))
        b = (bs & -bs).bit_length() - 1
        d = (ds & -ds).bit_length() - 1
        return ChordedFourCycle((a, b, c, d), ((a, c),))
    return None


# -- underlying undirected structure --------------------------------------------

def underlying_odd_cycle(g: OrientedGraph, removed: Iterable[int] = ()) -> list[int] | None:
    """An odd cycle of the underlying undirected graph of ``g - removed``, or None
    when what is left is bipartite. Found by BFS 2-colouring."""
    gone = set(removed)
    colour = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if root in gone or colour[root] >= 0:
            continue
        colour[root] = 0
        queue = [root]
        for v in queue:
            for w in iter_bits(g.out_mask(v) | g.in_mask(v)):
                if w in gone:
                    continue
                if colour[w] < 0:
                    colour[w] = 1 - colour[v]
                    parent[w] = v
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return _odd_cycle_from(v, w, parent)
    return None


def _odd_cycle_from(v: int, w: int, parent: list[int]) -> list[int]:
    # climb both BFS-tree paths to their meeting point
    def chain(x):
        out = [x]
        while parent[x] >= 0:
            x = parent[x]
            out.append(x)
        return out

    a, b = chain(v), chain(w)
    common = set(a) & set(b)
    top = next(x for x in a if x in common)
    left = a[: a.index(top) + 1]
    right = b[: b.index(top)]
    return left + right[::-1]
