# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the loops in ``_pykernels``; same signatures, same results."""

import numpy as np
cimport numpy as cnp

cnp.import_array()

cdef long long UNREACHED_C = 1073741824
UNREACHED = UNREACHED_C


def reverse_bfs(rindptr, rindices, Py_ssize_t y, allowed):
    cdef cnp.int64_t[::1] rp = np.ascontiguousarray(rindptr, dtype=np.int64)
    cdef cnp.int64_t[::1] ri = np.ascontiguousarray(rindices, dtype=np.int64)
    cdef cnp.uint8_t[::1] ok = np.ascontiguousarray(allowed, dtype=np.uint8)
    cdef Py_ssize_t n = rp.shape[0] - 1
    dist_arr = np.full(n, UNREACHED_C, dtype=np.int64)
    cdef cnp.int64_t[::1] dist = dist_arr
    cdef cnp.int64_t[::1] queue = np.empty(max(n, 1), dtype=np.int64)
    cdef Py_ssize_t head = 0, tail = 0, i, v, w
    dist[y] = 0
    queue[tail] = y
    tail += 1
    while head < tail:
        v = queue[head]
        head += 1
        for i in range(rp[v], rp[v + 1]):
            w = ri[i]
            if dist[w] == UNREACHED_C and ok[w]:
                dist[w] = dist[v] + 1
                queue[tail] = w
                tail += 1
    return dist_arr.tolist()


def find_path(indptr, indices, Py_ssize_t x, Py_ssize_t y, Py_ssize_t length,
              allowed, dist, long long budget):
    cdef cnp.int64_t[::1] ip = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef cnp.int64_t[::1] ix = np.ascontiguousarray(indices, dtype=np.int64)
    cdef cnp.uint8_t[::1] ok = np.ascontiguousarray(allowed, dtype=np.uint8)
    cdef cnp.int64_t[::1] dd = np.ascontiguousarray(dist, dtype=np.int64)
    cdef Py_ssize_t n = ip.shape[0] - 1
    cdef Py_ssize_t i, v, w, depth, end, remaining, top
    cdef long long expansions = 0
    cdef bint advanced, hit

    if length < 1:
        return None, 0, False
    if length == 1:
        for i in range(ip[x], ip[x + 1]):
            if ix[i] == y and x != y:
                return [x, y], 1, False
        return None, 1, False
    if dd[x] > length:
        return None, 0, False

    on_path_arr = np.zeros(n, dtype=np.uint8)
    cdef cnp.uint8_t[::1] on_path = on_path_arr
    path_arr = np.empty(length + 1, dtype=np.int64)
    cdef cnp.int64_t[::1] path = path_arr
    cdef cnp.int64_t[::1] ptr = np.empty(length + 1, dtype=np.int64)

    on_path[x] = 1
    on_path[y] = 1
    path[0] = x
    ptr[0] = ip[x]
    top = 0
    while top >= 0:
        depth = top
        v = path[top]
        if depth == length - 1:
            hit = False
            for i in range(ip[v], ip[v + 1]):
                if ix[i] == y:
                    hit = True
                    break
            if hit:
                out = [int(path[j]) for j in range(top + 1)]
                out.append(int(y))
                return out, expansions, False
            on_path[v] = 0
            top -= 1
            continue
        i = ptr[top]
        end = ip[v + 1]
        remaining = length - depth - 1
        advanced = False
        while i < end:
            w = ix[i]
            i += 1
            if on_path[w] or not ok[w] or dd[w] > remaining:
                continue
            ptr[top] = i
            expansions += 1
            if expansions > budget:
                return None, expansions, True
            on_path[w] = 1
            top += 1
            path[top] = w
            ptr[top] = ip[w]
            advanced = True
            break
        if not advanced:
            if depth > 0:
                on_path[v] = 0
            top -= 1
    return None, expansions, False
