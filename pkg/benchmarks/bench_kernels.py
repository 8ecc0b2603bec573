"""Time the compiled and pure-Python search kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat 3]

Each case runs find_path from vertex 0 back to itself (a cycle search) with
full reachability pruning, the way the dfs engine calls it.
"""

import argparse
import time

import numpy as np

from orcycles import _pykernels
from orcycles.graph import blow_up, directed_cycle, reverse
from orcycles.scanner import sample_oriented_graph

try:
    from orcycles import _kernels
except ImportError:  # extension not built
    _kernels = None


def cases():
    yield "C5 blow-up b=4, len 19 (absent)", blow_up(directed_cycle(5), [4] * 5), 19
    yield "C7 blow-up b=3, len 20 (absent)", blow_up(directed_cycle(7), [3] * 7), 20
    g, _ = sample_oriented_graph(18, 5, 5, np.random.default_rng([1, 0]))
    yield "random n=18 d=5, len 16", g, 16


def run_kernel(mod, g, length, as_lists):
    indptr, indices = g.csr()
    rindptr, rindices = reverse(g).csr()
    allowed = np.ones(g.n, dtype=np.uint8)
    if as_lists:
        indptr, indices, rindptr, rindices, allowed = (list(map(int, a)) for a in (indptr, indices, rindptr, rindices, allowed))
    dist = mod.reverse_bfs(rindptr, rindices, 0, allowed)
    path, expansions, _ = mod.find_path(indptr, indices, 0, 0, length, allowed, dist, 10**9)
    return path is not None, expansions


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'case':36} {'found':>5} {'expansions':>11} {'python s':>9} {'cython s':>9} {'speedup':>8}")
    for name, g, length in cases():
        tp, (found, exp) = best_of(args.repeat, lambda: run_kernel(_pykernels, g, length, True))
        if _kernels is None:
            print(f"{name:36} {found!s:>5} {exp:>11} {tp:9.3f} {'n/a':>9} {'n/a':>8}")
            continue
        tc, (found_c, exp_c) = best_of(args.repeat, lambda: run_kernel(_kernels, g, length, False))
        assert (found, exp) == (found_c, exp_c), "backends disagree"
        print(f"{name:36} {found!s:>5} {exp:>11} {tp:9.3f} {tc:9.3f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
