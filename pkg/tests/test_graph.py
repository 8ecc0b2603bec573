import pytest
from hypothesis import given, settings, strategies as st

from orcycles.errors import AntiparallelPair, DuplicateEdge, LoopEdge, VertexOutOfRange, ZeroSize
from orcycles.graph import (
    OrientedGraph, blow_up, build_graph, degree_summary, directed_cycle, induced_subgraph,
    one_way_bipartite, reverse, transitive_tournament,
)


@st.composite
def oriented_graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    choice = draw(st.lists(st.sampled_from((-1, 0, 1)), min_size=len(pairs), max_size=len(pairs)))
    edges = [(u, v) if c == 1 else (v, u) for (u, v), c in zip(pairs, choice) if c]
    return OrientedGraph(n, edges)


def test_build_triangle():
    g = build_graph(3, [(0, 1), (1, 2), (2, 0)])
    assert g.n == 3 and g.m == 3
    assert g.edges == ((0, 1), (1, 2), (2, 0))


@pytest.mark.parametrize("n,edges,exc,pair", [
    (2, [(0, 1), (1, 0)], AntiparallelPair, (1, 0)),
    (1, [(0, 0)], LoopEdge, (0, 0)),
    (2, [(0, 2)], VertexOutOfRange, (0, 2)),
    (2, [(0, 1), (0, 1)], DuplicateEdge, (0, 1)),
])
def test_build_rejects(n, edges, exc, pair):
    with pytest.raises(exc) as info:
        build_graph(n, edges)
    assert info.value.pair == pair
    assert str(pair[0]) in str(info.value)


def test_degree_summary_examples():
    assert degree_summary(directed_cycle(3)).min_semidegree == 1
    b = blow_up(directed_cycle(4), [5] * 4)
    assert b.n == 20 and degree_summary(b).min_semidegree == 5
    assert degree_summary(OrientedGraph(4)).min_semidegree == 0


def test_reverse_examples():
    c3 = directed_cycle(3)
    r = reverse(c3)
    assert r.edges == ((0, 2), (1, 0), (2, 1))
    owb = reverse(one_way_bipartite(2, 3))
    assert all(u >= 2 and v < 2 for u, v in owb.edges)


def test_blow_up_examples():
    edge = OrientedGraph(2, [(0, 1)])
    g = blow_up(edge, [2, 3])
    assert (g.n, g.m) == (5, 6)
    assert blow_up(directed_cycle(5), [1] * 5) == directed_cycle(5)
    with pytest.raises(ZeroSize):
        blow_up(edge, [1, 0])


def test_induced_examples():
    c4 = directed_cycle(4)
    assert induced_subgraph(c4, range(4)) == c4
    assert induced_subgraph(c4, [1, 2]).edges == ((0, 1),)
    assert induced_subgraph(c4, [0, 2]).m == 0


@settings(max_examples=150, deadline=None)
@given(oriented_graphs())
def test_reverse_involution_and_degree_swap(g):
    r = reverse(g)
    assert reverse(r) == g
    a, b = degree_summary(g), degree_summary(r)
    assert (a.min_outdegree, a.min_indegree) == (b.min_indegree, b.min_outdegree)
    assert a.min_semidegree == b.min_semidegree


@settings(max_examples=100, deadline=None)
@given(oriented_graphs(max_n=6), st.data())
def test_blow_up_degree_law(g, data):
    sizes = data.draw(st.lists(st.integers(1, 3), min_size=g.n, max_size=g.n))
    b = blow_up(g, sizes)
    assert b.n == sum(sizes)
    offset = 0
    for v in range(g.n):
        want = sum(sizes[w] for w in g.out_lists[v])
        for x in range(offset, offset + sizes[v]):
            assert b.out_degree(x) == want
        offset += sizes[v]


@settings(max_examples=100, deadline=None)
@given(oriented_graphs(), st.data())
def test_induced_edge_count(g, data):
    keep = data.draw(st.sets(st.integers(0, g.n - 1)))
    h = induced_subgraph(g, keep)
    assert h.m == sum(1 for u, v in g.edges if u in keep and v in keep)


@settings(max_examples=100, deadline=None)
@given(oriented_graphs(max_n=7), st.data())
def test_mutation_rejected(g, data):
    # any loop or reversed copy of an existing edge must be refused
    if g.m:
        u, v = data.draw(st.sampled_from(g.edges))
        with pytest.raises(AntiparallelPair):
            OrientedGraph(g.n, list(g.edges) + [(v, u)])
    x = data.draw(st.integers(0, g.n - 1))
    with pytest.raises(LoopEdge):
        OrientedGraph(g.n, list(g.edges) + [(x, x)])


def test_adjacency_and_csr_agree():
    g = transitive_tournament(5)
    a = g.adjacency_matrix()
    indptr, indices = g.csr()
    for v in range(5):
        assert list(indices[indptr[v]:indptr[v + 1]]) == [w for w in range(5) if a[v, w]]
