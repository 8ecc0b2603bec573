"""Pure-Python versions of the hot search loops.

Both this module and the compiled ``_kernels`` extension expose the same
functions with the same semantics; ``_accel`` picks one at import time.
Graphs arrive in CSR form (``indptr``, ``indices``) with neighbours sorted.
"""

from __future__ import annotations

UNREACHED = 1 << 30


def reverse_bfs(rindptr, rindices, y, allowed):
    """Distances ``d[w]`` from ``w`` to ``y`` along out-edges, using only
    intermediate vertices with ``allowed[w]`` set. ``rindptr``/``rindices`` is
    the in-adjacency. Unreached vertices get ``UNREACHED``."""
    n = len(rindptr) - 1
    dist = [UNREACHED] * n
    dist[y] = 0
    frontier = [y]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for v in frontier:
            for i in range(rindptr[v], rindptr[v + 1]):
                w = rindices[i]
                if dist[w] == UNREACHED and allowed[w]:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def find_path(indptr, indices, x, y, length, allowed, dist, budget):
    """Depth-first search for a path ``x = p0, ..., p_length = y``.

    Intermediate vertices must be distinct, allowed, and different from both
    ends; ``x == y`` asks for a cycle through ``x``. Neighbours are tried in
    ascending order, so the first hit is the lexicographically least path.

    Returns ``(path_or_None, expansions, exhausted)``.
    """
    if length < 1:
        return None, 0, False
    if length == 1:
        for i in range(indptr[x], indptr[x + 1]):
            if indices[i] == y and x != y:
                return [x, y], 1, False
        return None, 1, False
    if dist[x] > length:
        return None, 0, False
    n = len(indptr) - 1
    on_path = bytearray(n)
    on_path[x] = 1
    on_path[y] = 1
    path = [x]
    ptr = [indptr[x]]
    expansions = 0
    while path:
        depth = len(path) - 1
        v = path[-1]
        if depth == length - 1:
            # last hop must close onto y
            lo, hi = indptr[v], indptr[v + 1]
            hit = False
            for i in range(lo, hi):
                if indices[i] == y:
                    hit = True
                    break
            if hit:
                return path + [y], expansions, False
            on_path[v] = 0
            path.pop()
            ptr.pop()
            continue
        i = ptr[-1]
        end = indptr[v + 1]
        remaining = length - depth - 1
        advanced = False
        while i < end:
            w = indices[i]
            i += 1
            if on_path[w] or not allowed[w] or dist[w] > remaining:
                continue
            ptr[-1] = i
            expansions += 1
            if expansions > budget:
                return None, expansions, True
            on_path[w] = 1
            path.append(w)
            ptr.append(indptr[w])
            advanced = True
            break
        if not advanced:
            if depth > 0:
                on_path[v] = 0
            path.pop()
            ptr.pop()
    return None, expansions, False
