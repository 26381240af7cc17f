"""Loopless undirected multigraphs with stable edge ids.

Vertices are the integers ``0..n-1``. Every edge carries an id that survives
subgraph extraction, so parallel edges stay distinguishable.
"""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence


class GraphError(ValueError):
    """Malformed graph, bad id, or a violated structural precondition."""


Edge = tuple[int, int, int]  # (edge-id, u, v)


@dataclass(frozen=True)
class MultiGraph:
    n: int
    edges: tuple[Edge, ...] = ()
    subcubic: bool = False
    # original vertex id for each vertex, set by subgraph extraction
    labels: Optional[tuple[int, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        object.__setattr__(self, "edges", tuple((int(e), int(u), int(v)) for e, u, v in self.edges))
        seen = set()
        for eid, u, v in self.edges:
            if eid in seen:
                raise GraphError(f"duplicate edge id {eid}")
            seen.add(eid)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {eid} has endpoint outside 0..{self.n - 1}")
            if u == v:
                raise GraphError(f"edge {eid} is a loop at {u}")
        if self.subcubic:
            self.check_subcubic()

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Sequence[int]], subcubic: bool = False) -> "MultiGraph":
        """Build a graph whose edge ids are the positions in ``pairs``."""
        return cls(n, tuple((i, u, v) for i, (u, v) in enumerate(pairs)), subcubic=subcubic)

    # -- indexes -----------------------------------------------------------

    @cached_property
    def _ends(self) -> dict[int, tuple[int, int]]:
        return {e: (u, v) for e, u, v in self.edges}

    @cached_property
    def _incident(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for e, u, v in self.edges:
            inc[u].append(e)
            inc[v].append(e)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def _adjacent_edges(self) -> dict[int, frozenset[int]]:
        out = {}
        for e, u, v in self.edges:
            out[e] = frozenset(self._incident[u] + self._incident[v]) - {e}
        return out

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_ids(self) -> list[int]:
        return [e for e, _, _ in self.edges]

    def ends(self, e: int) -> tuple[int, int]:
        try:
            return self._ends[e]
        except KeyError:
            raise GraphError(f"no edge with id {e}") from None

    def has_edge_id(self, e: int) -> bool:
        return e in self._ends

    def other_end(self, e: int, v: int) -> int:
        a, b = self.ends(e)
        if v == a:
            return b
        if v == b:
            return a
        raise GraphError(f"vertex {v} is not an endpoint of edge {e}")

    def incident(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._incident[v]

    def neighbors(self, v: int) -> list[int]:
        """Distinct neighbours of ``v`` in increasing order."""
        return sorted({self.other_end(e, v) for e in self.incident(v)})

    def adjacent_edges(self, e: int) -> frozenset[int]:
        """Edges other than ``e`` sharing an endpoint with it."""
        self.ends(e)
        return self._adjacent_edges[e]

    def edges_between(self, u: int, v: int) -> list[int]:
        return [e for e in self.incident(u) if self.other_end(e, u) == v]

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise GraphError(f"vertex {v} outside 0..{self.n - 1}")

    # -- degrees -----------------------------------------------------------

    def degree(self, v: int) -> int:
        """Number of edge incidences at ``v``; parallel edges count separately."""
        return len(self.incident(v))

    def max_degree(self) -> int:
        return max((len(x) for x in self._incident), default=0)

    def min_degree(self) -> int:
        return min((len(x) for x in self._incident), default=0)

    def multiplicities(self) -> Counter:
        return Counter(frozenset((u, v)) for _, u, v in self.edges)

    def is_simple(self) -> bool:
        return all(c == 1 for c in self.multiplicities().values())

    def check_subcubic(self) -> None:
        for v in range(self.n):
            if len(self._incident[v]) > 3:
                raise GraphError(f"vertex {v} has degree {len(self._incident[v])} > 3")
        for pair, c in self.multiplicities().items():
            if c > 2:
                raise GraphError(f"{c} parallel edges between {sorted(pair)}")

    def is_subcubic(self) -> bool:
        try:
            self.check_subcubic()
        except GraphError:
            return False
        return True

    def is_d_irregular(self, d: int) -> bool:
        """True iff no edge joins two vertices that both have degree ``d``."""
        deg = [len(x) for x in self._incident]
        return not any(deg[u] == d and deg[v] == d for _, u, v in self.edges)

    # -- distances ---------------------------------------------------------

    def edge_distance(self, e1: int, e2: int) -> float:
        """Distance between ``e1`` and ``e2`` in the line graph (``inf`` if disconnected)."""
        self.ends(e1)
        self.ends(e2)
        if e1 == e2:
            return 0
        dist = {e1: 0}
        queue = deque([e1])
        while queue:
            e = queue.popleft()
            for f in self._adjacent_edges[e]:
                if f not in dist:
                    dist[f] = dist[e] + 1
                    if f == e2:
                        return dist[f]
                    queue.append(f)
        return math.inf

    def edges_within(self, e: int, radius: int) -> dict[int, int]:
        """Map every edge at line-graph distance 1..radius from ``e`` to that distance."""
        self.ends(e)
        dist = {e: 0}
        frontier = [e]
        for r in range(1, radius + 1):
            nxt = []
            for x in frontier:
                for f in self._adjacent_edges[x]:
                    if f not in dist:
                        dist[f] = r
                        nxt.append(f)
            frontier = nxt
        del dist[e]
        return dist

    def girth(self) -> float:
        """Length of a shortest cycle; two parallel edges form a 2-cycle."""
        if any(c > 1 for c in self.multiplicities().values()):
            return 2
        best = math.inf
        for root in range(self.n):
            dist = {root: 0}
            parent_edge = {root: None}
            queue = deque([root])
            while queue:
                x = queue.popleft()
                if 2 * dist[x] >= best:
                    break
                for e in self._incident[x]:
                    if e == parent_edge[x]:
                        continue
                    y = self.other_end(e, x)
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        parent_edge[y] = e
                        queue.append(y)
                    else:
                        best = min(best, dist[x] + dist[y] + 1)
        return best

    # -- structure ---------------------------------------------------------

    def components(self) -> list[set[int]]:
        """Vertex sets of the connected components, isolated vertices included."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = {s}
            stack = [s]
            while stack:
                x = stack.pop()
                for e in self._incident[x]:
                    y = self.other_end(e, x)
                    if not seen[y]:
                        seen[y] = True
                        comp.add(y)
                        stack.append(y)
            out.append(comp)
        return out

    def induced_by_edges(self, eids: Iterable[int]) -> "MultiGraph":
        """Subgraph formed by the given edges and their endpoints.

        Vertices are renumbered in increasing order of their old ids (kept in
        ``labels``); edge ids are preserved.
        """
        eids = sorted(set(eids))
        verts = sorted({x for e in eids for x in self.ends(e)})
        index = {v: i for i, v in enumerate(verts)}
        old = self.labels
        labels = tuple(old[v] if old else v for v in verts)
        edges = tuple((e, index[self.ends(e)[0]], index[self.ends(e)[1]]) for e in eids)
        return MultiGraph(len(verts), edges, labels=labels)

    def induced_by_vertices(self, verts: Iterable[int]) -> "MultiGraph":
        """Subgraph induced by ``verts`` (renumbered, edge ids preserved)."""
        verts = sorted(set(verts))
        for v in verts:
            self._check_vertex(v)
        index = {v: i for i, v in enumerate(verts)}
        old = self.labels
        labels = tuple(old[v] if old else v for v in verts)
        edges = tuple(
            (e, index[u], index[v]) for e, u, v in self.edges if u in index and v in index
        )
        return MultiGraph(len(verts), edges, labels=labels)

    def without_edges(self, eids: Iterable[int]) -> "MultiGraph":
        """Same vertex set, the given edges removed."""
        drop = set(eids)
        return MultiGraph(self.n, tuple(x for x in self.edges if x[0] not in drop), labels=self.labels)

    def find_k_thread(self, k: int) -> Optional[list[int]]:
        """Some path on ``k`` vertices that all have degree exactly 2, or None.

        Scans start vertices in increasing order and extends through the
        smallest-id neighbour first, so the witness is reproducible.
        """
        if k < 1:
            raise GraphError("k must be positive")
        deg2 = [len(x) == 2 for x in self._incident]

        def extend(path: list[int]) -> Optional[list[int]]:
            if len(path) == k:
                return path
            for y in self.neighbors(path[-1]):
                if deg2[y] and y not in path:
                    found = extend(path + [y])
                    if found:
                        return found
            return None

        for v in range(self.n):
            if deg2[v]:
                found = extend([v])
                if found:
                    return found
        return None

    def thread_from(self, v: int, e: int) -> tuple[list[int], int]:
        """Walk from ``v`` along ``e`` through degree-2 vertices.

        Returns the degree-2 vertices passed (in order) and the first vertex
        reached whose degree is not 2. If the walk closes into a cycle of
        degree-2 vertices only, the end vertex is ``-1``.
        """
        inner: list[int] = []
        prev_edge, x = e, self.other_end(e, v)
        while len(self._incident[x]) == 2:
            if x == v or x in inner:
                return inner, -1
            inner.append(x)
            a, b = self._incident[x]
            prev_edge = b if a == prev_edge else a
            x = self.other_end(prev_edge, x)
        return inner, x

    # -- text format -------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"p multigraph {self.n} {self.m}"]
        # file order defines ids 0..m-1; keep ids by sorting
        for _, u, v in sorted(self.edges):
            lines.append(f"e {u} {v}")
        return "\n".join(lines) + "\n"

    def relabel_edges(self) -> "MultiGraph":
        """Copy with edge ids renumbered 0..m-1 in current id order."""
        return MultiGraph(self.n, tuple((i, u, v) for i, (_, u, v) in enumerate(sorted(self.edges))))

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)


def parse_graph(text: str) -> MultiGraph:
    """Parse the ``p multigraph <n> <m>`` / ``e <u> <v>`` text format."""
    n = m = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None or len(parts) != 4 or parts[1] != "multigraph":
                raise GraphError(f"line {lineno}: bad header {line!r}")
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphError(f"line {lineno}: bad header {line!r}") from None
        elif parts[0] == "e":
            if n is None:
                raise GraphError(f"line {lineno}: edge before header")
            if len(parts) != 3:
                raise GraphError(f"line {lineno}: bad edge line {line!r}")
            try:
                pairs.append((int(parts[1]), int(parts[2])))
            except ValueError:
                raise GraphError(f"line {lineno}: bad edge line {line!r}") from None
        else:
            raise GraphError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise GraphError("missing 'p multigraph' header")
    if len(pairs) != m:
        raise GraphError(f"header announces {m} edges, found {len(pairs)}")
    return MultiGraph.from_pairs(n, pairs)


def read_graph(path) -> MultiGraph:
    with open(path) as fh:
        return parse_graph(fh.read())


def write_graph(g: MultiGraph, path) -> None:
    with open(path, "w") as fh:
        fh.write(g.to_text())
