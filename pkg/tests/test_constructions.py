from fractions import Fraction

import pytest

from orcycles.constructions import (
    ManeuverKind, admissible_sizes, balanced_blowup_ck, build_semidegree_extremal,
    construct_c6_bipartite_blob, construct_outdegree_extremal, construct_semidegree_extremal,
    extremal_value,
)
from orcycles.cycles import all_simple_cycles, contains_cycle_of_length
from orcycles.errors import InfeasibleN, UnsupportedLength
from orcycles.graph import degree_summary, induced_subgraph
from orcycles.homomorphism import k_of


@pytest.mark.parametrize("ell", range(4, 31))
def test_semidegree_grid(ell):
    for n in admissible_sizes(ell, 60)[:3]:
        g, plan = construct_semidegree_extremal(ell, n)
        assert g.n == n
        assert degree_summary(g).min_semidegree == extremal_value(ell, n)
        assert contains_cycle_of_length(g, ell) is None
        assert plan.k == k_of(ell)


@pytest.mark.parametrize("ell", [6, 9, 12, 24])
def test_residues_match_simple_cycles(ell):
    built = build_semidegree_extremal(ell, admissible_sizes(ell, 40)[0])
    g, plan = built.graph, built.plan
    got = {len(c) % plan.k for c in all_simple_cycles(g)}
    assert got <= set(plan.residues)
    assert plan.target_residue not in got


def test_inadmissible_n_message():
    with pytest.raises(InfeasibleN, match="mod 7"):
        construct_semidegree_extremal(60, 34)


def test_outdegree_family():
    for ell in (12, 60, 72, 120):
        n = admissible_sizes(ell, 60, outdegree=True)[0]
        g, plan = construct_outdegree_extremal(ell, n)
        assert degree_summary(g).min_outdegree == extremal_value(ell, n, outdegree=True)
        assert contains_cycle_of_length(g, ell) is None
    with pytest.raises(UnsupportedLength):
        construct_outdegree_extremal(24, 30)


def test_extremal_value_formula():
    assert extremal_value(60, 33) == 5
    assert extremal_value(15, 16) == Fraction(4)
    assert extremal_value(7, 16) == Fraction(16, 3)
    assert extremal_value(12, 23) == Fraction(23, 5) + Fraction(2, 10)


def test_maneuver_shifts():
    assert ManeuverKind.ODD_FIRST.shifts(7) == frozenset({0, 3, 4})
    assert not ManeuverKind.OUT_SECOND.feasible(5)


def test_plan_audit_is_stable():
    _, plan = construct_semidegree_extremal(60, 33)
    text = plan.audit()
    assert text.startswith("plan.ell=60\nplan.k=7\n")
    assert text == construct_semidegree_extremal(60, 33)[1].audit()


def test_balanced_blowup():
    g = balanced_blowup_ck(5, 3)
    assert g.n == 15 and degree_summary(g).min_semidegree == 3
    with pytest.raises(InfeasibleN):
        balanced_blowup_ck(5, 0)


@pytest.mark.parametrize("n", [8, 16])
def test_c6_construction(n):
    g = construct_c6_bipartite_blob(n)
    assert contains_cycle_of_length(g, 6) is None
    assert degree_summary(g).min_semidegree >= 1
