import itertools
import os
from fractions import Fraction

import pytest

from packedge.graph import MultiGraph

DATA = os.path.join(os.path.dirname(__file__), os.pardir, "src", "packedge", "data")


def data_path(name: str) -> str:
    return os.path.abspath(os.path.join(DATA, name))


def brute_mad(g: MultiGraph) -> Fraction:
    """max 2|E(S)|/|S| over nonempty vertex subsets."""
    best = Fraction(0)
    for r in range(1, g.n + 1):
        for sub in itertools.combinations(range(g.n), r):
            s = set(sub)
            m = sum(1 for _, u, v in g.edges if u in s and v in s)
            best = max(best, Fraction(2 * m, r))
    return best


def line_graph_distance(g: MultiGraph, e1: int, e2: int):
    """BFS on an explicitly built line graph."""
    if e1 == e2:
        return 0
    adj = {e: set() for e in g.edge_ids()}
    for a, b in itertools.combinations(g.edges, 2):
        if set(a[1:]) & set(b[1:]):
            adj[a[0]].add(b[0])
            adj[b[0]].add(a[0])
    frontier, seen, d = {e1}, {e1}, 0
    while frontier:
        d += 1
        frontier = {f for e in frontier for f in adj[e]} - seen
        if e2 in frontier:
            return d
        seen |= frontier
    return float("inf")


@pytest.fixture
def c5():
    return MultiGraph.from_pairs(5, [(i, (i + 1) % 5) for i in range(5)])
