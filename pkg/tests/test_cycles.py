import numpy as np
import pytest

from conftest import random_oriented
from orcycles import _pykernels
from orcycles._accel import BACKEND
from orcycles.cycles import (
    all_simple_cycles, closed_walk_lengths, contains_closed_walk_of_length, contains_cycle_of_length,
    detect_c4_with_chord, detect_transitive_triangle, find_path_of_length, find_shortcut, girth,
    is_valid_cycle, path_length_set, shortest_cycle, underlying_odd_cycle, validate_cycle,
)
from orcycles.errors import InternalInvariantViolation, PreconditionViolation, SearchBudgetExceeded
from orcycles.graph import OrientedGraph, blow_up, directed_cycle, directed_path, transitive_tournament
from orcycles.quotient import quotient_cycle, twin_quotient


def oracle_lengths(g):
    return {len(c) for c in all_simple_cycles(g)}


def test_spec_examples():
    assert contains_cycle_of_length(directed_cycle(5), 5).vertices == (0, 1, 2, 3, 4)
    assert contains_cycle_of_length(transitive_tournament(6), 3) is None
    b = blow_up(directed_cycle(3), [2, 2, 2])
    assert contains_cycle_of_length(b, 4) is None
    w = contains_cycle_of_length(b, 6)
    assert w is not None and len(w.vertices) == 6


def test_rejects_short_length():
    with pytest.raises(PreconditionViolation):
        contains_cycle_of_length(directed_cycle(3), 2)


@pytest.mark.parametrize("engine", ["auto", "dfs", "quotient", "subset"])
def test_engines_match_oracle(engine, rng):
    for _ in range(60):
        n = int(rng.integers(3, 10))
        g = random_oriented(n, float(rng.uniform(0.2, 0.9)), rng)
        have = oracle_lengths(g)
        for L in range(3, n + 1):
            w = contains_cycle_of_length(g, L, engine=engine)
            assert (w is not None) == (L in have)
            if w is not None:
                assert is_valid_cycle(g, w.vertices) and len(w.vertices) == L


def test_engines_on_blowups_agree():
    g = blow_up(directed_cycle(4), [3, 1, 2, 2])
    for L in range(3, g.n + 1):
        res = {e: contains_cycle_of_length(g, L, engine=e) is not None for e in ("dfs", "quotient", "subset")}
        assert len(set(res.values())) == 1
        assert res["dfs"] == (L == 4)  # the size-1 part allows one lap


def test_budget_exceeded():
    g = blow_up(directed_cycle(3), [5, 5, 5])
    with pytest.raises(SearchBudgetExceeded):
        contains_cycle_of_length(g, 14, budget=5, engine="dfs")


def test_twin_quotient_classes():
    q = twin_quotient(blow_up(directed_cycle(3), [2, 3, 1]))
    assert sorted(len(c) for c in q.classes) == [1, 2, 3]
    assert quotient_cycle(blow_up(directed_cycle(3), [2, 2, 2]), 5) is None


def test_validate_cycle():
    g = directed_cycle(4)
    validate_cycle(g, [1, 2, 3, 0])
    for bad in ([0, 1, 2], [0, 1, 1, 2], [0, 1]):
        with pytest.raises(InternalInvariantViolation):
            validate_cycle(g, bad)


def test_closed_walks_vs_cycles():
    # closed 6-walk around a triangle exists, a simple 6-cycle does not
    g = directed_cycle(3)
    assert contains_closed_walk_of_length(g, 6)
    assert contains_cycle_of_length(g, 3) is not None
    assert closed_walk_lengths(g, 9) == [3, 6, 9]
    assert not contains_closed_walk_of_length(transitive_tournament(5), 4)


def test_girth(rng):
    assert girth(directed_cycle(7)) == 7
    assert girth(transitive_tournament(5)) is None
    for _ in range(40):
        g = random_oriented(int(rng.integers(3, 10)), 0.5, rng)
        lengths = oracle_lengths(g)
        assert girth(g) == (min(lengths) if lengths else None)
        s = shortest_cycle(g)
        assert (s is None) == (not lengths)


def test_paths():
    g = transitive_tournament(5)
    assert list(find_path_of_length(g, 0, 4, 4)) == [0, 1, 2, 3, 4]
    assert list(find_path_of_length(g, 0, 4, 2, avoid=[1, 2])) == [0, 3, 4]
    assert find_path_of_length(g, 4, 0, 1) is None
    assert sorted(path_length_set(g, 0, 4, 4)) == [1, 2, 3, 4]
    assert sorted(path_length_set(directed_path(4), 0, 3, 5)) == [3]


def test_shortcut_and_detectors():
    g = transitive_tournament(5)
    w = find_shortcut(g, 4)
    assert w is not None
    w.validate(g)
    assert find_shortcut(directed_cycle(6), 3) is None
    assert detect_transitive_triangle(transitive_tournament(3)) == (0, 1, 2)
    assert detect_transitive_triangle(directed_cycle(3)) is None
    c4 = OrientedGraph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    assert detect_c4_with_chord(c4) is not None
    assert detect_c4_with_chord(directed_cycle(4)) is None


def test_underlying_odd_cycle():
    assert underlying_odd_cycle(directed_cycle(4)) is None
    cyc = underlying_odd_cycle(transitive_tournament(3))
    assert sorted(cyc) == [0, 1, 2]
    assert underlying_odd_cycle(transitive_tournament(3), removed=[1]) is None


def _rev(g):
    from orcycles.graph import reverse
    return reverse(g).csr()


@pytest.mark.skipif(BACKEND != "cython", reason="compiled extension not built")
def test_backend_parity(rng):
    from orcycles import _kernels
    for _ in range(80):
        n = int(rng.integers(3, 11))
        g = random_oriented(n, 0.5, rng)
        indptr, indices = (np.asarray(a, dtype=np.int64) for a in g.csr())
        rindptr, rindices = (np.asarray(a, dtype=np.int64) for a in _rev(g))
        allowed = np.ones(n, dtype=np.uint8)
        for y in range(n):
            d_py = _pykernels.reverse_bfs(list(rindptr), list(rindices), y, list(allowed))
            d_cy = _kernels.reverse_bfs(rindptr, rindices, y, allowed)
            assert list(d_py) == list(d_cy)
            for L in (2, 3, 4):
                a = _pykernels.find_path(list(indptr), list(indices), 0, y, L, list(allowed), d_py, 10**6)
                b = _kernels.find_path(indptr, indices, 0, y, L, allowed, d_cy, 10**6)
                assert (None if a[0] is None else list(a[0])) == (None if b[0] is None else list(b[0]))
