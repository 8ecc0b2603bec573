import sys

import numpy as np
import pytest

from orcycles.graph import OrientedGraph


def random_oriented(n, density, rng):
    """Random oriented graph: each pair joined with prob ``density``, random direction."""
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < density:
                edges.append((u, v) if rng.random() < 0.5 else (v, u))
    return OrientedGraph(n, edges)


def random_ck_subgraph(n, k, density, rng):
    """Random subgraph of a blow-up of C_k with random part labels."""
    labels = rng.integers(0, k, size=n)
    edges = [(u, v) for u in range(n) for v in range(n)
             if u != v and (labels[v] - labels[u]) % k == 1 and rng.random() < density]
    return OrientedGraph(n, edges)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for key in sorted(lines):
            terminalreporter.write_line(lines[key])
