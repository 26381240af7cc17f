import itertools

import pytest
from hypothesis import given, settings, strategies as st

from packedge.coloring import GOOD_SPEC, PackingSpec, validate, validate_good
from packedge.families import G1_MATCHINGS, make_cycle, make_g1, make_g2, random_subcubic
from packedge.graph import MultiGraph
from packedge.solver import (
    BUDGET_EXHAUSTED, COLORABLE, NOT_COLORABLE,
    SolverConfig, count_maximum_matchings, decide, decide_good, edge_order, max_two_disjoint_matchings,
)


def brute_colorable(g, spec, good=False):
    ids = g.edge_ids()
    for c in itertools.product(range(len(spec)), repeat=len(ids)):
        col = dict(zip(ids, c))
        bad = validate_good(g, col) if good else validate(g, spec, col)
        if not bad:
            return True
    return False


SPECS = ["1,1,2,2", "1,2,2,2", "1,1,2", "1,1", "2,2,2", "1,2"]


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 8), st.integers(0, 10_000), st.sampled_from(SPECS))
def test_verdict_matches_enumeration(n, seed, spec_text):
    g = random_subcubic(n, seed)
    if g.m > 7:
        return
    spec = PackingSpec.parse(spec_text)
    res = decide(g, spec)
    assert res.colorable == brute_colorable(g, spec)
    if res.colorable:
        assert not validate(g, spec, res.witness, require_total=True)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 8), st.integers(0, 10_000))
def test_good_verdict_matches_enumeration(n, seed):
    g = random_subcubic(n, seed)
    if g.m > 7:
        return
    res = decide_good(g)
    assert res.colorable == brute_colorable(g, GOOD_SPEC, good=True)
    if res.colorable:
        assert not validate_good(g, res.witness)


@pytest.mark.parametrize("order", ["bfs", "degeneracy", "input"])
def test_orders_agree(order):
    for seed in range(15):
        g = random_subcubic(12, seed)
        assert decide(g, GOOD_SPEC, SolverConfig(order=order)).verdict == decide(g, GOOD_SPEC).verdict
        assert sorted(edge_order(g, order)) == sorted(g.edge_ids())


def test_odd_cycle_needs_three_matchings():
    assert decide(make_cycle(5), PackingSpec.parse("1,1")).verdict == NOT_COLORABLE
    assert decide(make_cycle(6), PackingSpec.parse("1,1")).verdict == COLORABLE


def test_budget_exhaustion_is_reported():
    g = make_g2(6)
    res = decide(g, PackingSpec.parse("1,2,2,2"), SolverConfig(budget=2))
    assert res.verdict == BUDGET_EXHAUSTED and res.witness is None


def test_empty_graph_is_colorable():
    assert decide(MultiGraph(3), GOOD_SPEC).colorable


def test_bad_config_rejected():
    with pytest.raises(ValueError):
        SolverConfig(order="random")
    with pytest.raises(ValueError):
        SolverConfig(budget=-1)


def test_g1_maximum_matchings():
    size, all_max = count_maximum_matchings(make_g1())
    assert size == 3
    assert set(all_max) == set(G1_MATCHINGS)


def test_two_disjoint_matchings():
    g = make_g1()
    m1, m2 = max_two_disjoint_matchings(g)
    # the two perfect matchings share edge 4, so one edge is always left over
    assert not m1 & m2 and len(m1) + len(m2) == 5
    h1, h2 = max_two_disjoint_matchings(g, exhaustive=False)
    assert not h1 & h2 and len(h1) + len(h2) == 5
