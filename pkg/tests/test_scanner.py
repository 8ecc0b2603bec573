import numpy as np
import pytest

from orcycles.errors import DegreeInfeasible, PreconditionViolation
from orcycles.graph import degree_summary
from orcycles.scanner import (
    girth_floor, sample_oriented_graph, scan_c3_or_d, scan_girth_lemma, scan_outdegree_conjecture,
)


def test_sampler_meets_floor():
    for t in range(20):
        rng = np.random.default_rng([7, t])
        g, _ = sample_oriented_graph(15, 5, 4, rng)
        ds = degree_summary(g)
        assert ds.min_outdegree >= 5 and ds.min_indegree >= 4


def test_sampler_infeasible():
    with pytest.raises(DegreeInfeasible):
        sample_oriented_graph(6, 3, 0, np.random.default_rng(0))


def test_girth_floor():
    assert girth_floor(30, 1) == 11
    assert girth_floor(3, 1) == 2


def test_girth_scan_deterministic():
    a = scan_girth_lemma(14, 2, 30, seed=5)
    b = scan_girth_lemma(14, 2, 30, seed=5)
    assert a.ok and a.to_text() == b.to_text()
    assert "counterexamples=0" in a.to_text()


def test_girth_scan_rejects():
    with pytest.raises(PreconditionViolation):
        scan_girth_lemma(31, 1, 1, 0)
    with pytest.raises(DegreeInfeasible):
        scan_girth_lemma(3, 1, 1, 0)


def test_c3_or_d_scan():
    r = scan_c3_or_d(12, 30, seed=1)
    assert r.ok and r.trials == 30


def test_outdegree_scan_archives(tmp_path):
    r = scan_outdegree_conjecture(6, 12, 20, seed=2)
    assert r.ok
    paths = r.save_graphs(tmp_path)
    assert len(paths) == len(r.finds)
