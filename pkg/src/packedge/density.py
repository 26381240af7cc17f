"""Exact maximum average degree via max-flow (Goldberg's densest subgraph).

mad(G) = 2 * max_S |E(S)| / |S|. The densest ratio is one of the fractions
a/b with 1 <= b <= n, so a binary search over those candidates with an
integer max-flow feasibility test gives the exact value.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction

from packedge.graph import GraphError, MultiGraph


class _Dinic:
    def __init__(self, n: int):
        self.n = n
        self.adj: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, c: int) -> None:
        self.adj[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(c)
        self.adj[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        while True:
            level = [-1] * self.n
            level[s] = 0
            q = deque([s])
            while q:
                x = q.popleft()
                for a in self.adj[x]:
                    if self.cap[a] > 0 and level[self.to[a]] < 0:
                        level[self.to[a]] = level[x] + 1
                        q.append(self.to[a])
            if level[t] < 0:
                return flow
            it = [0] * self.n

            def push(x: int, f: int) -> int:
                if x == t:
                    return f
                while it[x] < len(self.adj[x]):
                    a = self.adj[x][it[x]]
                    y = self.to[a]
                    if self.cap[a] > 0 and level[y] == level[x] + 1:
                        d = push(y, min(f, self.cap[a]))
                        if d:
                            self.cap[a] -= d
                            self.cap[a ^ 1] += d
                            return d
                    it[x] += 1
                return 0

            while True:
                f = push(s, 1 << 62)
                if not f:
                    break
                flow += f


def _denser_than(g: MultiGraph, ratio: Fraction) -> bool:
    """Is there a vertex set S with |E(S)| / |S| > ratio?"""
    p, q = ratio.numerator, ratio.denominator
    m = g.m
    # nodes: 0 source, 1 sink, 2..m+1 edges, m+2.. vertices
    net = _Dinic(2 + m + g.n)
    inf = q * m + 1
    for i, (_, u, v) in enumerate(g.edges):
        net.add_edge(0, 2 + i, q)
        net.add_edge(2 + i, 2 + m + u, inf)
        net.add_edge(2 + i, 2 + m + v, inf)
    for v in range(g.n):
        net.add_edge(2 + m + v, 1, p)
    # max over closures of q|E(S)| - p|S| equals q*m - mincut
    return q * m - net.max_flow(0, 1) > 0


def max_density(g: MultiGraph) -> Fraction:
    """max over nonempty S of |E(S)|/|S|, exact."""
    if g.n == 0:
        raise GraphError("maximum density of the empty graph is undefined")
    if g.m == 0:
        return Fraction(0)
    candidates = sorted({Fraction(a, b) for b in range(1, g.n + 1) for a in range(0, g.m + 1)})
    lo, hi = 0, len(candidates) - 1
    # first candidate r with "density > r" false is the density itself
    while lo < hi:
        mid = (lo + hi) // 2
        if _denser_than(g, candidates[mid]):
            lo = mid + 1
        else:
            hi = mid
    return candidates[lo]


def mad_exact(g: MultiGraph) -> Fraction:
    """Maximum average degree as an exact fraction."""
    return 2 * max_density(g)
