import networkx as nx
import pytest

from packedge.coloring import GOOD_SPEC, PackingSpec
from packedge.density import mad_exact
from packedge.families import (
    G1_MATCHINGS, canonical_form, enumerate_subcubic, generate, make_g1, make_g2, make_g3,
    make_girth_planar, parse_constraints, random_3_irregular_multigraph, random_subcubic,
    random_subdivided, random_threaded, satisfies,
)
from packedge.graph import GraphError, MultiGraph
from packedge.theorem2 import THRESHOLD


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from((u, v) for _, u, v in g.edges)
    return h


def test_g1_shape():
    g = make_g1()
    assert (g.n, g.m) == (6, 7)
    assert g.is_d_irregular(3) and g.is_simple()
    assert all(len(m) == 3 for m in G1_MATCHINGS)


@pytest.mark.parametrize("k", [3, 4, 5, 6, 7])
def test_g2_shape(k):
    g = make_g2(k)
    assert g.n == 4 * k and g.girth() == k and g.is_subcubic()


def test_g3_shape():
    g = make_g3()
    assert g.girth() == 5 and g.is_subcubic() and g.n == 20


@pytest.mark.parametrize("n", range(1, 8))
def test_enumeration_matches_atlas(n):
    expect = [h for h in nx.graph_atlas_g()
              if h.number_of_nodes() == n and nx.is_connected(h) and max(dict(h.degree()).values()) <= 3]
    got = [to_nx(g) for g in enumerate_subcubic(n)]
    assert len(got) == len(expect)
    for h in expect:
        assert sum(nx.is_isomorphic(h, x) for x in got) == 1


def test_enumeration_counts_n8_n9():
    # connected graphs with maximum degree at most 3
    assert sum(1 for _ in enumerate_subcubic(8)) == 194
    assert sum(1 for _ in enumerate_subcubic(9)) == 531


def test_canonical_form_is_invariant():
    g = random_subcubic(12, 3)
    perm = list(range(g.n))[::-1]
    h = MultiGraph.from_pairs(g.n, [(perm[u], perm[v]) for _, u, v in g.edges])
    assert canonical_form(g) == canonical_form(h)


def test_constraints():
    cons = parse_constraints(["3-irregular", "mad-below(20/9)", "girth-at-least=5", "min-degree-2"])
    assert [c[0] for c in cons] == ["3-irregular", "mad-below", "girth-at-least", "min-degree-2"]
    with pytest.raises(GraphError):
        parse_constraints(["bogus"])
    g = random_subcubic(15, 4, parse_constraints(["3-irregular"]))
    assert g.is_d_irregular(3) and satisfies(g, parse_constraints(["3-irregular"]))


def test_random_generators_are_deterministic():
    assert random_subcubic(20, 9) == random_subcubic(20, 9)
    assert random_subdivided(6, 2) == random_subdivided(6, 2)
    assert random_threaded(4, 2) == random_threaded(4, 2)


def test_threaded_graphs_have_min_degree_two():
    for seed in range(20):
        g = random_threaded(6, seed)
        assert g.is_simple() and g.min_degree() == 2 and g.max_degree() == 3


def test_irregular_multigraph():
    g = random_3_irregular_multigraph(10, 4)
    assert not g.is_simple() and g.is_d_irregular(3) and g.is_subcubic()


@pytest.mark.parametrize("seed", range(5))
def test_girth_planar(seed):
    g = make_girth_planar(seed)
    assert g.girth() >= 20 and mad_exact(g) < THRESHOLD
    assert nx.check_planarity(to_nx(g))[0]


def test_generate_names():
    assert generate("g1") == make_g1()
    assert generate("cycle:7").girth() == 7
    assert generate("rand:9:1:3-irregular").is_d_irregular(3)
    assert generate("planar:2").girth() >= 20
    with pytest.raises(GraphError):
        generate("nope")
