"""Randomised scans over oriented graphs that meet a degree floor.

Trial ``i`` of a scan with seed ``s`` draws from ``numpy.random.default_rng([s, i])``,
so every trial is reproducible on its own and reports never depend on
execution order.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .cycles import contains_cycle_of_length, find_shortcut, girth
from .errors import DegreeInfeasible, InternalInvariantViolation, PreconditionViolation
from .graph import OrientedGraph, degree_summary
from .homomorphism import k_of
from .io import write_edge_list

GIRTH_BASE = 0.6535


@dataclass
class ScanReport:
    target: str
    trials: int
    parameters: dict
    counterexamples: list = field(default_factory=list)   # (trial, graph)
    finds: list = field(default_factory=list)             # (trial, graph), open-question scans only
    restarts: int = 0
    edges_total: int = 0
    runtime_s: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_text(self, include_timing: bool = False) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.parameters.items())
        lines = [
            f"scan {self.target}",
            f"parameters {params}",
            f"trials {self.trials}",
            f"counterexamples {len(self.counterexamples)}",
        ]
        if self.target == "outdegree-conjecture":
            lines.append(f"finds {len(self.finds)}")
        for t, g in self.counterexamples:
            lines.append(f"counterexample trial={t} n={g.n} m={g.m}")
        for t, g in self.finds:
            lines.append(f"find trial={t} n={g.n} m={g.m}")
        lines.append("--")
        kv = {"target": self.target, "trials": self.trials, **self.parameters,
              "counterexamples": len(self.counterexamples), "finds": len(self.finds),
              "restarts": self.restarts, "mean_edges": f"{self.edges_total / max(self.trials, 1):.3f}"}
        if include_timing:
            kv["runtime_s"] = f"{self.runtime_s:.3f}"
        lines.extend(f"{k}={v}" for k, v in kv.items())
        return "\n".join(lines) + "\n"

    def save_graphs(self, directory) -> list[Path]:
        d = Path(directory)
        d.mkdir(parents=True, exist_ok=True)
        paths = []
        for label, items in (("counterexample", self.counterexamples), ("find", self.finds)):
            for t, g in items:
                path = d / f"{self.target}_{label}_trial{t}.txt"
                write_edge_list(g, path)
                paths.append(path)
        return paths


# -- sampler ---------------------------------------------------------------------

def sample_oriented_graph(n: int, min_out: int, min_in: int, rng: np.random.Generator,
                          max_restarts: int = 50):
    """Random oriented graph with every outdegree >= min_out and indegree >= min_in.

    Starts from a sparse random orientation and repairs deficient vertices one
    edge at a time, flipping an edge when a vertex is already adjacent to
    everything. A stalled repair restarts from a fresh start graph. Returns
    (graph, restarts).
    """
    if 2 * max(min_out, min_in) > n - 1 and max(min_out, min_in) > 0:
        raise DegreeInfeasible(f"degree floor {max(min_out, min_in)} exceeds (n-1)/2 for n={n}")
    full = (1 << n) - 1
    for attempt in range(max_restarts + 1):
        density = rng.uniform(0.0, 0.35)
        pairs = rng.random((n, n)) < density
        flips = rng.random((n, n)) < 0.5
        out = [0] * n
        inn = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                if pairs[u, v]:
                    a, b = (u, v) if flips[u, v] else (v, u)
                    out[a] |= 1 << b
                    inn[b] |= 1 << a
        steps = 0
        limit = 40 * n * n
        while steps < limit:
            steps += 1
            needy = [v for v in range(n) if out[v].bit_count() < min_out or inn[v].bit_count() < min_in]
            if not needy:
                return OrientedGraph._from_masks(n, out), attempt
            v = needy[int(rng.integers(len(needy)))]
            want_out = out[v].bit_count() < min_out
            free = full & ~(out[v] | inn[v] | (1 << v))
            if free:
                choices = [w for w in range(n) if (free >> w) & 1]
                w = choices[int(rng.integers(len(choices)))]
                a, b = (v, w) if want_out else (w, v)
                out[a] |= 1 << b
                inn[b] |= 1 << a
                continue
            # v touches everyone: reverse an edge whose other end can spare it
            if want_out:
                donors = [w for w in range(n) if (inn[v] >> w) & 1 and out[w].bit_count() > min_out]
            else:
                donors = [w for w in range(n) if (out[v] >> w) & 1 and inn[w].bit_count() > min_in]
            if not donors:
                break
            w = donors[int(rng.integers(len(donors)))]
            a, b = (w, v) if want_out else (v, w)
            out[a] &= ~(1 << b)
            inn[b] &= ~(1 << a)
            out[b] |= 1 << a
            inn[a] |= 1 << b
    raise InternalInvariantViolation(f"sampler failed {max_restarts + 1} times for n={n}")


def _run(target, params, trials, seed, n, min_out, min_in, test, archive_only=False) -> ScanReport:
    report = ScanReport(target, trials, params)
    start = time.perf_counter()
    for t in range(trials):
        rng = np.random.default_rng([seed, t])
        g, restarts = sample_oriented_graph(n, min_out, min_in, rng)
        report.restarts += restarts
        report.edges_total += g.m
        ds = degree_summary(g)
        if ds.min_outdegree < min_out or ds.min_indegree < min_in:
            raise InternalInvariantViolation("sampled graph misses its degree floor")
        if not test(g):
            # re-check before recording
            if test(g):
                raise InternalInvariantViolation("scan predicate is not deterministic")
            (report.finds if archive_only else report.counterexamples).append((t, g))
    report.runtime_s = time.perf_counter() - start
    return report


def girth_floor(n: int, m: int) -> int:
    # ceil with a small guard against float noise at exact integers
    x = (1 - GIRTH_BASE ** (1 / m)) * n
    return max(0, math.ceil(x - 1e-12))


def scan_girth_lemma(n: int, m: int, trials: int, seed: int) -> ScanReport:
    """Graphs with outdegree >= ceil((1 - 0.6535^(1/m)) n) must have girth <= 3m."""
    if not 1 <= n <= 30:
        raise PreconditionViolation(f"n must lie in [1,30], got {n}")
    if m not in (1, 2, 3):
        raise PreconditionViolation(f"m must be 1, 2 or 3, got {m}")
    d = girth_floor(n, m)
    if 2 * d > n - 1:
        raise DegreeInfeasible(f"outdegree floor {d} is impossible in an oriented graph on {n} vertices")

    def test(g):
        L = girth(g)
        return L is not None and L <= 3 * m

    return _run("girth-lemma", {"n": n, "m": m, "floor": d, "seed": seed}, trials, seed, n, d, 0, test)


def scan_c3_or_d(n: int, trials: int, seed: int) -> ScanReport:
    """Graphs with semidegree >= ceil((n+1)/4) must contain C_3 or a 4-shortcut."""
    if not 1 <= n <= 24:
        raise PreconditionViolation(f"n must lie in [1,24], got {n}")
    d = -(-(n + 1) // 4)
    if 2 * d > n - 1:
        raise DegreeInfeasible(f"semidegree floor {d} is impossible in an oriented graph on {n} vertices")

    def test(g):
        return contains_cycle_of_length(g, 3) is not None or find_shortcut(g, 4) is not None

    return _run("c3-or-d", {"n": n, "floor": d, "seed": seed}, trials, seed, n, d, d, test)


def scan_outdegree_conjecture(ell: int, n: int, trials: int, seed: int) -> ScanReport:
    """Archive C_ell-free graphs with outdegree >= floor(n/k) + 1; never a failure."""
    if not 4 <= ell <= 12:
        raise PreconditionViolation(f"ell must lie in [4,12], got {ell}")
    if not 1 <= n <= 20:
        raise PreconditionViolation(f"n must lie in [1,20], got {n}")
    k = k_of(ell)
    d = n // k + 1
    if 2 * d > n - 1:
        raise DegreeInfeasible(f"outdegree floor {d} is impossible in an oriented graph on {n} vertices")

    def test(g):
        return contains_cycle_of_length(g, ell) is not None

    return _run("outdegree-conjecture", {"ell": ell, "n": n, "k": k, "floor": d, "seed": seed},
                trials, seed, n, d, 0, test, archive_only=True)
