import pytest

from conftest import random_ck_subgraph, random_oriented
from orcycles.errors import ParseError, PreconditionViolation
from orcycles.graph import blow_up, degree_summary, directed_cycle, transitive_tournament
from orcycles.homomorphism import (
    OrientedCycleWord, all_cycle_words, blown_up_cycle, brute_force_hom_to_ck, build_d, build_d_ell,
    cycle_type, find_cycle_embedding, hom_to_ck, k_of, validate_embedding,
)


@pytest.mark.parametrize("t,k", [(1, 3), (2, 3), (3, 4), (6, 4), (12, 5), (60, 7), (420, 8), (840, 9), (2520, 11)])
def test_k_of(t, k):
    assert k_of(t) == k


def test_hom_examples():
    lab = hom_to_ck(blow_up(directed_cycle(4), [2, 2, 2, 2]), 4)
    assert lab is not None
    assert hom_to_ck(directed_cycle(3), 4) is None
    assert hom_to_ck(transitive_tournament(3), 5) is None


def test_hom_matches_brute(rng):
    for i in range(150):
        k = int(rng.integers(3, 6))
        n = int(rng.integers(1, 7))
        g = random_ck_subgraph(n, k, 0.7, rng) if i % 2 else random_oriented(n, 0.4, rng)
        lab = hom_to_ck(g, k)
        assert (lab is not None) == brute_force_hom_to_ck(g, k)
        if lab is not None:
            lab.validate(g)


def test_word_parsing():
    w = OrientedCycleWord.parse("++-")
    assert str(w) == "++-" and cycle_type(w) == 1
    with pytest.raises(ParseError):
        OrientedCycleWord.parse("+x-")
    with pytest.raises(PreconditionViolation):
        OrientedCycleWord.parse("+-")
    assert OrientedCycleWord.parse("+-+").canonical() == OrientedCycleWord.parse("-++")


def test_normalize_is_graph_invariant():
    # reversing the reading direction and flipping signs gives an isomorphic cycle
    for w in all_cycle_words(6):
        flipped = OrientedCycleWord(tuple(-x for x in reversed(w.word)))
        assert w.normalize() == flipped.normalize()
        assert cycle_type(w) == cycle_type(flipped)


def test_d_graphs():
    d = build_d()
    assert d.n == 5 and d.m == 5 and d.has_edge(0, 4)
    d3 = build_d_ell(3)
    assert d3.n == 11 and d3.m == 11
    ds = degree_summary(d3)
    assert ds.outdegrees[7] == 0 and ds.indegrees[8] == 0  # open path ends


def test_embedding_examples():
    host = blown_up_cycle(3, 2)
    phi = find_cycle_embedding(host, OrientedCycleWord.parse("++++++"))
    assert phi is not None and validate_embedding(host, OrientedCycleWord.parse("++++++"), phi)
    assert find_cycle_embedding(blown_up_cycle(4, 3), OrientedCycleWord.parse("+++++")) is None
    # a homomorphism may repeat vertices
    w = OrientedCycleWord.parse("++++++")
    assert find_cycle_embedding(directed_cycle(3), w, injective=False) is not None
    assert find_cycle_embedding(directed_cycle(3), w, injective=True) is None


def test_embedding_d_into_itself():
    d = build_d()
    phi = find_cycle_embedding(d, OrientedCycleWord.parse("++++-"))
    assert phi == (0, 1, 2, 3, 4)
