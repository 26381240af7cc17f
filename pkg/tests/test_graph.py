import math

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from conftest import line_graph_distance
from packedge.families import make_cycle, make_g1, make_g3, make_path, random_subcubic
from packedge.graph import GraphError, MultiGraph, parse_graph


def test_rejects_loops_and_bad_endpoints():
    with pytest.raises(GraphError):
        MultiGraph.from_pairs(2, [(0, 0)])
    with pytest.raises(GraphError):
        MultiGraph.from_pairs(2, [(0, 2)])
    with pytest.raises(GraphError):
        MultiGraph(2, ((0, 0, 1), (0, 0, 1)))


def test_subcubic_check():
    star = MultiGraph.from_pairs(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    assert not star.is_subcubic()
    with pytest.raises(GraphError):
        MultiGraph.from_pairs(5, [(0, 1), (0, 2), (0, 3), (0, 4)], subcubic=True)
    triple = MultiGraph.from_pairs(2, [(0, 1)] * 3)
    assert not triple.is_subcubic()
    assert MultiGraph.from_pairs(3, [(0, 1), (0, 1), (1, 2)]).is_subcubic()


def test_parallel_edges_keep_ids():
    g = MultiGraph.from_pairs(3, [(0, 1), (0, 1), (1, 2)])
    assert g.edges_between(0, 1) == [0, 1]
    assert not g.is_simple()
    assert g.degree(1) == 3
    assert g.neighbors(1) == [0, 2]
    assert g.girth() == 2


def test_girth_values():
    assert make_cycle(5).girth() == 5
    assert make_path(4).girth() == math.inf
    assert make_g1().girth() == 4
    assert make_g3().girth() == 5


def test_irregular_flag():
    assert make_g1().is_d_irregular(3)
    # two adjacent 3-vertices
    g = MultiGraph.from_pairs(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])
    assert not g.is_d_irregular(3)


def test_text_round_trip():
    g = make_g3()
    h = parse_graph(g.to_text())
    assert (h.n, h.edges) == (g.n, g.edges)


@pytest.mark.parametrize("text", [
    "e 0 1\n",
    "p multigraph 2 2\ne 0 1\n",
    "p multigraph 2 1\ne 0 x\n",
    "p graph 2 1\ne 0 1\n",
    "p multigraph 2 1\nq 0 1\n",
])
def test_parse_errors(text):
    with pytest.raises(GraphError):
        parse_graph(text)


def test_thread_detection():
    # path 0-1-2-3-4-5 between two claws
    pairs = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 6), (0, 7), (5, 8), (5, 9)]
    g = MultiGraph.from_pairs(10, pairs)
    assert g.find_k_thread(4) == [1, 2, 3, 4]
    assert g.find_k_thread(5) is None
    inner, end = g.thread_from(0, 0)
    assert inner == [1, 2, 3, 4] and end == 5


def test_induced_subgraph_keeps_edge_ids():
    g = make_g1()
    sub = g.induced_by_edges([2, 5, 6])
    assert sorted(sub.edge_ids()) == [2, 5, 6]
    for e in sub.edge_ids():
        u, v = sub.ends(e)
        assert {sub.labels[u], sub.labels[v]} == set(g.ends(e))


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 11), st.integers(0, 10_000))
def test_edge_distance_matches_line_graph(n, seed):
    g = random_subcubic(n, seed)
    for e1 in g.edge_ids():
        near = g.edges_within(e1, 3)
        for e2 in g.edge_ids():
            d = line_graph_distance(g, e1, e2)
            assert g.edge_distance(e1, e2) == d
            assert (e2 in near) == (0 < d <= 3)
            if e2 in near:
                assert near[e2] == d


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 14), st.integers(0, 10_000))
def test_girth_and_components_match_networkx(n, seed):
    g = random_subcubic(n, seed)
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from((u, v) for _, u, v in g.edges)
    expect = nx.girth(h)
    assert g.girth() == expect
    assert sorted(map(sorted, g.components())) == sorted(map(sorted, nx.connected_components(h)))
