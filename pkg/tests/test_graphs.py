import networkx as nx
import pytest
from hypothesis import given, strategies as st

from reflex24.graphs import (MetricGraph, bipartition, cat1_check, cycle_graph, find_isomorphism,
                             generalized_petersen, hypercube, is_biconnected, is_isomorphic,
                             is_subdivided_theta, shortest_cycle, subdivided_theta, to_json)


def to_nx(g):
    G = nx.Graph()
    G.add_nodes_from(g.nodes)
    G.add_edges_from(tuple(e) for e in g.edges)
    return G


def test_moebius_kantor_shape():
    g = generalized_petersen(8, 3)
    assert (g.n_nodes, g.n_edges) == (16, 24) and g.is_regular(3)
    r = cat1_check(g)
    assert r.passed and r.min_cycle_units == 6
    assert nx.girth(to_nx(g)) == 6


def test_hypercube():
    q = hypercube(4)
    assert (q.n_nodes, q.n_edges) == (16, 32) and q.is_regular(4)
    parts = bipartition(q)
    assert parts is not None and sorted(map(len, parts)) == [8, 8]


def test_theta():
    t = subdivided_theta(3)
    assert (t.n_nodes, t.n_edges) == (8, 9)
    assert is_subdivided_theta(t) and is_biconnected(t)
    assert cat1_check(t).min_cycle_units == 6


def test_four_cycle_fails():
    r = cat1_check(cycle_graph(4))
    assert not r.passed and r.min_cycle_units == 4 and len(r.witness) == 4


def test_weighted_cycle():
    g = MetricGraph.from_edges([(0, 1, 2), (1, 2, 2), (2, 0, 2)])
    assert cat1_check(g).min_cycle_units == 6


def test_forest_passes():
    g = MetricGraph.from_edges([(0, 1), (1, 2)])
    r = cat1_check(g)
    assert r.passed and r.min_cycle_units is None


def test_bad_edges():
    with pytest.raises(ValueError):
        MetricGraph.from_edges([(0, 0)])
    with pytest.raises(ValueError):
        MetricGraph.from_edges([(0, 1, 0)])


def test_gp83_not_cube():
    assert not is_isomorphic(generalized_petersen(8, 3), hypercube(4))
    assert not is_isomorphic(generalized_petersen(8, 3), generalized_petersen(8, 1))


def test_json():
    d = to_json(cycle_graph(3))
    assert d["edges"] == [[0, 1, 1], [0, 2, 1], [1, 2, 1]]


edge_lists = st.lists(st.tuples(st.integers(0, 7), st.integers(0, 7)).filter(lambda e: e[0] != e[1]),
                      min_size=1, max_size=16)


@given(edge_lists)
def test_girth_matches_networkx(edges):
    g = MetricGraph.from_edges(edges)
    length, cyc = shortest_cycle(g)
    want = nx.girth(to_nx(g))
    assert (length if length is not None else float("inf")) == want
    if cyc is not None:
        adj = g.adjacency()
        closed = cyc + [cyc[0]]
        assert all(b in adj[a] for a, b in zip(closed, closed[1:]))


@given(edge_lists, st.permutations(range(8)))
def test_isomorphism_matches_networkx(edges, perm):
    g = MetricGraph.from_edges(edges)
    h = MetricGraph.from_edges([(perm[a], perm[b]) for a, b in edges])
    m = find_isomorphism(g, h)
    assert m is not None
    assert all(frozenset((m[a], m[b])) in h.edges for a, b in (tuple(e) for e in g.edges))


@given(edge_lists, edge_lists)
def test_isomorphism_decision_matches_networkx(e1, e2):
    g, h = MetricGraph.from_edges(e1), MetricGraph.from_edges(e2)
    assert is_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))
