"""Constructive (1^2, 2^2)-coloring of 3-irregular subcubic multigraphs.

Pipeline:

1. strip parallel pairs (each sits between a 3-vertex and a 2-vertex, or is
   an isolated digon) and remember how to re-insert them;
2. on the simple remainder, pick two disjoint matchings M1, M2 and improve
   them by switching moves until the uncovered edges form only P2s and good
   P3s whose conflict graph H is bipartite;
3. M1 -> 1_a, M2 -> 1_b, the two sides of H -> 2_a / 2_b;
4. replay the parallel-pair recipe.

The switching loop climbs the potential (|M1 u M2|, -#components of the
uncovered graph). Every accepted move raises it, so the number of moves is at
most m*(m+1); the loop cap is 2*m*n + m + 1 (m <= 1.5 n for subcubic graphs).
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from packedge.coloring import A1, A2, B1, B2, GOOD_SPEC, EdgeColoring, validate
from packedge.graph import GraphError, MultiGraph

log = logging.getLogger(__name__)

# neutral states explored when looking for a compound move
PLATEAU_LIMIT = 20000


class PreconditionError(GraphError):
    """Input is not a loopless 3-irregular subcubic multigraph."""


class StabilityError(RuntimeError):
    """Switching stopped in a state that violates a structural conclusion."""


@dataclass(frozen=True)
class MatchingPair:
    m1: frozenset[int]
    m2: frozenset[int]

    def __post_init__(self):
        if self.m1 & self.m2:
            raise ValueError("M1 and M2 must be disjoint")

    def remainder(self, g: MultiGraph) -> set[int]:
        return set(g.edge_ids()) - self.m1 - self.m2

    def remainder_components(self, g: MultiGraph) -> list[frozenset[int]]:
        return _edge_components(g, self.remainder(g))

    def size(self) -> int:
        return len(self.m1) + len(self.m2)


@dataclass(frozen=True)
class SwitchMove:
    kind: str  # augment-into-M1 | augment-into-M2 | swap-chain | component-merge | compound
    removed_m1: tuple[int, ...] = ()
    added_m1: tuple[int, ...] = ()
    removed_m2: tuple[int, ...] = ()
    added_m2: tuple[int, ...] = ()

    def line(self) -> str:
        def f(xs):
            return ",".join(map(str, xs)) or "-"

        return (
            f"{self.kind} M1-={f(self.removed_m1)} M1+={f(self.added_m1)} "
            f"M2-={f(self.removed_m2)} M2+={f(self.added_m2)}"
        )


@dataclass
class ConflictGraph:
    vertices: list[int]
    adj: dict[int, set[int]] = field(default_factory=dict)

    def edges(self) -> list[tuple[int, int]]:
        return sorted((a, b) for a in self.adj for b in self.adj[a] if a < b)

    def components(self) -> list[list[int]]:
        seen, out = set(), []
        for s in sorted(self.vertices):
            if s in seen:
                continue
            seen.add(s)
            comp, stack = [s], [s]
            while stack:
                x = stack.pop()
                for y in self.adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        stack.append(y)
            out.append(sorted(comp))
        return out

    def two_coloring(self) -> Optional[dict[int, int]]:
        """Side 0/1 per vertex, lowest id of each component on side 0; None if not bipartite."""
        side: dict[int, int] = {}
        for comp in self.components():
            side[comp[0]] = 0
            queue = deque([comp[0]])
            while queue:
                x = queue.popleft()
                for y in sorted(self.adj[x]):
                    if y not in side:
                        side[y] = 1 - side[x]
                        queue.append(y)
                    elif side[y] == side[x]:
                        return None
        return side


# -- helpers ---------------------------------------------------------------


def _edge_components(g: MultiGraph, eids) -> list[frozenset[int]]:
    parent: dict[int, int] = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in eids:
        u, v = g.ends(e)
        parent[find(u)] = find(v)
    groups: dict[int, set[int]] = {}
    for e in eids:
        groups.setdefault(find(g.ends(e)[0]), set()).add(e)
    return sorted((frozenset(s) for s in groups.values()), key=min)


def _cover(g: MultiGraph, matching) -> dict[int, int]:
    out = {}
    for e in matching:
        u, v = g.ends(e)
        out[u] = e
        out[v] = e
    return out


def _is_matching(g: MultiGraph, matching) -> bool:
    seen = set()
    for e in matching:
        for x in g.ends(e):
            if x in seen:
                return False
            seen.add(x)
    return True


def _potential(g: MultiGraph, m1, m2) -> tuple[int, int]:
    rem = set(g.edge_ids()) - m1 - m2
    return (len(m1) + len(m2), -len(_edge_components(g, rem)))


def _kempe(g: MultiGraph, m1: frozenset, m2: frozenset, comp: frozenset) -> tuple[frozenset, frozenset]:
    return (m1 - comp) | (m2 & comp), (m2 - comp) | (m1 & comp)


def _move(kind, old, new) -> SwitchMove:
    (o1, o2), (n1, n2) = old, new
    return SwitchMove(
        kind,
        tuple(sorted(o1 - n1)),
        tuple(sorted(n1 - o1)),
        tuple(sorted(o2 - n2)),
        tuple(sorted(n2 - o2)),
    )


# -- matchings ---------------------------------------------------------------


def initial_matchings(g: MultiGraph) -> MatchingPair:
    """Greedy seed: M1 maximal, then M2 maximal in G - M1 (edge-id order)."""
    pair = []
    taken: set[int] = set()
    for _ in range(2):
        covered: set[int] = set()
        m = set()
        for e in sorted(g.edge_ids()):
            u, v = g.ends(e)
            if e not in taken and u not in covered and v not in covered:
                m.add(e)
                covered.update((u, v))
        taken |= m
        pair.append(frozenset(m))
    return MatchingPair(pair[0], pair[1])


def _improving_move(g: MultiGraph, m1: frozenset, m2: frozenset) -> Optional[tuple[str, frozenset, frozenset]]:
    """First move raising the potential, searched in a fixed order."""
    rem = sorted(set(g.edge_ids()) - m1 - m2)
    ms = (m1, m2)
    covers = (_cover(g, m1), _cover(g, m2))

    # augment: an uncovered edge fits into M1 or M2 as is
    for e in rem:
        x, y = g.ends(e)
        for i in (0, 1):
            if x not in covers[i] and y not in covers[i]:
                new = [m1, m2]
                new[i] = ms[i] | {e}
                return (f"augment-into-M{i + 1}", new[0], new[1])

    # swap-chain: exchange M1/M2 along alternating components, then augment
    comps = _edge_components(g, m1 | m2)
    comp_of = {e: c for c in comps for e in c}
    for e in rem:
        x, y = g.ends(e)
        touching = sorted({comp_of[f] for v in (x, y) for f in g.incident(v) if f in comp_of}, key=min)
        choices = [(c,) for c in touching]
        if len(touching) == 2:
            choices.append(tuple(touching))
        for choice in choices:
            n1, n2 = m1, m2
            for c in choice:
                n1, n2 = _kempe(g, n1, n2, c)
            c1, c2 = _cover(g, n1), _cover(g, n2)
            for i, cov in enumerate((c1, c2)):
                if x not in cov and y not in cov:
                    out = [n1, n2]
                    out[i] = out[i] | {e}
                    return ("swap-chain", out[0], out[1])

    # component-merge: trade a matched edge for an uncovered one, fewer components
    base = len(_edge_components(g, rem))
    for e in rem:
        x, y = g.ends(e)
        touching = sorted({comp_of[f] for v in (x, y) for f in g.incident(v) if f in comp_of}, key=min)
        for pre in [None] + touching:
            n1, n2 = (m1, m2) if pre is None else _kempe(g, m1, m2, pre)
            for i, cov in enumerate((_cover(g, n1), _cover(g, n2))):
                blockers = [cov[v] for v in (x, y) if v in cov]
                if len(blockers) != 1:
                    continue
                out = [n1, n2]
                out[i] = (out[i] - {blockers[0]}) | {e}
                new_rem = set(g.edge_ids()) - out[0] - out[1]
                if len(_edge_components(g, new_rem)) < base:
                    return ("component-merge", out[0], out[1])
    return None


def _neutral_exchanges(g: MultiGraph, m1: frozenset, m2: frozenset):
    """Exchanges of one matched edge for an adjacent uncovered edge."""
    rem = sorted(set(g.edge_ids()) - m1 - m2)
    ms = (m1, m2)
    covers = (_cover(g, m1), _cover(g, m2))
    for e in rem:
        x, y = g.ends(e)
        for i in (0, 1):
            blockers = [covers[i][v] for v in (x, y) if v in covers[i]]
            if len(blockers) == 1:
                new = [m1, m2]
                new[i] = (ms[i] - {blockers[0]}) | {e}
                yield new[0], new[1]


def _compound_move(g: MultiGraph, m1: frozenset, m2: frozenset) -> Optional[tuple[str, frozenset, frozenset]]:
    """Breadth-first walk over potential-neutral exchanges until a state admits an improving move.

    Shifting a P3 along its matched edge, as in the induction that separates
    two P3s or the switch that breaks a P3 out of an H-cycle, is such an
    exchange; the walk chains them and applies the final improvement as one
    transaction.
    """
    start = (m1, m2)
    seen = {start}
    queue = deque([start])
    level = _potential(g, m1, m2)
    while queue and len(seen) < PLATEAU_LIMIT:
        s1, s2 = queue.popleft()
        for n1, n2 in _neutral_exchanges(g, s1, s2):
            if (n1, n2) in seen or _potential(g, n1, n2) != level:
                continue
            seen.add((n1, n2))
            found = _improving_move(g, n1, n2)
            if found:
                return ("compound", found[1], found[2])
            queue.append((n1, n2))
    return None


def stability_report(g: MultiGraph, pair: MatchingPair) -> list[str]:
    """Structural conclusions the final coloring relies on, as failure messages."""
    problems = []
    comps = pair.remainder_components(g)
    p3_of: dict[int, int] = {}
    for idx, comp in enumerate(comps):
        verts = {x for e in comp for x in g.ends(e)}
        if len(comp) == 1:
            continue
        if len(comp) == 2 and len(verts) == 3:
            a, b = sorted(comp)
            mid = (set(g.ends(a)) & set(g.ends(b))).pop()
            if g.degree(mid) != 2:
                problems.append(f"P3 {sorted(comp)} has a degree-{g.degree(mid)} middle vertex")
            for e in comp:
                p3_of[e] = idx
            continue
        problems.append(f"remainder component {sorted(comp)} is not a P2 or P3")
    h = build_conflict_graph(g, pair)
    for hc in h.components():
        owners = {p3_of[e] for e in hc if e in p3_of}
        if len(owners) > 1:
            problems.append(f"H-component {hc} holds {len(owners)} P3s")
    if h.two_coloring() is None:
        problems.append("H is not bipartite")
    return problems


def stabilize(
    g: MultiGraph,
    pair: MatchingPair,
    trace: Optional[list[SwitchMove]] = None,
    check_conclusions: bool = True,
) -> MatchingPair:
    """Apply switching moves until none improves and the structural conclusions hold."""
    m1, m2 = pair.m1, pair.m2
    assert _is_matching(g, m1) and _is_matching(g, m2)
    cap = 2 * g.m * g.n + g.m + 1
    moves = 0
    while True:
        found = _improving_move(g, m1, m2)
        if found is None and check_conclusions and stability_report(g, MatchingPair(m1, m2)):
            found = _compound_move(g, m1, m2)
        if found is None:
            break
        kind, n1, n2 = found
        before, after = _potential(g, m1, m2), _potential(g, n1, n2)
        assert after > before, f"move {kind} does not raise the potential"
        assert not (n1 & n2) and _is_matching(g, n1) and _is_matching(g, n2)
        if trace is not None:
            trace.append(_move(kind, (m1, m2), (n1, n2)))
        m1, m2 = n1, n2
        moves += 1
        if moves > cap:
            raise StabilityError(f"more than {cap} switching moves")
    result = MatchingPair(m1, m2)
    if check_conclusions:
        problems = stability_report(g, result)
        if problems:
            raise StabilityError("; ".join(problems))
    return result


def build_conflict_graph(g: MultiGraph, pair: MatchingPair) -> ConflictGraph:
    """H: uncovered edges, adjacent when at edge distance <= 2 in ``g``."""
    rem = pair.remainder(g)
    h = ConflictGraph(sorted(rem), {e: set() for e in rem})
    for e in rem:
        for f in g.edges_within(e, 2):
            if f in rem:
                h.adj[e].add(f)
    return h


# -- parallel edges ------------------------------------------------------------


@dataclass(frozen=True)
class DigonStep:
    """One removed parallel pair ``e1, e2``.

    ``tail`` is the edge from the pair's 3-vertex to its other neighbour and
    ``beyond`` the next edge from there (None when that neighbour is a leaf).
    An isolated digon has ``tail`` None.
    """

    e1: int
    e2: int
    tail: Optional[int] = None
    beyond: Optional[int] = None


def check_3_irregular_subcubic(g: MultiGraph) -> None:
    try:
        g.check_subcubic()
    except GraphError as exc:
        raise PreconditionError(str(exc)) from None
    if not g.is_d_irregular(3):
        raise PreconditionError("graph has two adjacent vertices of degree 3")


def reduce_multiedges(g: MultiGraph) -> tuple[MultiGraph, list[DigonStep]]:
    """Remove parallel pairs one by one; the result is simple.

    Returns the reduced graph (same vertex ids, the pair's vertices left
    isolated) and the removal steps in order.
    """
    check_3_irregular_subcubic(g)
    steps = []
    cur = g
    while True:
        pair = next(
            (sorted(cur.edges_between(u, v)) for _, u, v in sorted(cur.edges) if len(cur.edges_between(u, v)) > 1),
            None,
        )
        if pair is None:
            return cur, steps
        e1, e2 = pair
        u1, u2 = cur.ends(e1)
        if cur.degree(u1) == 2 and cur.degree(u2) == 2:
            steps.append(DigonStep(e1, e2))
            cur = cur.without_edges([e1, e2])
            continue
        if cur.degree(u1) == 2:
            u1, u2 = u2, u1
        tail = next(e for e in cur.incident(u1) if e not in (e1, e2))
        v1 = cur.other_end(tail, u1)
        beyond = next((e for e in cur.incident(v1) if e != tail), None)
        steps.append(DigonStep(e1, e2, tail, beyond))
        cur = cur.without_edges([e1, e2, tail])


def extend_digon(c: EdgeColoring, step: DigonStep) -> None:
    """Color a removed parallel pair (and its tail edge) given the rest."""
    if step.tail is None:
        c[step.e1], c[step.e2] = A1, A2
        return
    x = c.get(step.beyond) if step.beyond is not None else None
    if x is None:
        c[step.tail], c[step.e1], c[step.e2] = A1, B1, A2
    elif x in (A1, B1):
        c[step.tail], c[step.e1], c[step.e2] = (B1 if x == A1 else A1), A2, B2
    else:
        c[step.tail], c[step.e1], c[step.e2] = A1, B1, (B2 if x == A2 else A2)


# -- main entry ----------------------------------------------------------------


def pad_min_degree(g: MultiGraph) -> MultiGraph:
    """Supergraph with no 1-vertices that stays 3-irregular and subcubic.

    Every leaf v gets a new triangle x, y, z and the edge vx: v becomes a
    2-vertex, x is the only 3-vertex of the gadget.
    """
    pairs = [(u, v) for _, u, v in sorted(g.edges)]
    n = g.n
    next_id = max(g.edge_ids(), default=-1) + 1
    extra = []
    for v in range(g.n):
        if g.degree(v) == 1:
            x, y, z = n, n + 1, n + 2
            n += 3
            extra += [(v, x), (x, y), (y, z), (z, x)]
    edges = tuple(g.edges) + tuple((next_id + i, a, b) for i, (a, b) in enumerate(extra))
    return MultiGraph(n, edges)


def _color_simple(g: MultiGraph, trace: Optional[list[SwitchMove]]) -> EdgeColoring:
    try:
        pair = stabilize(g, initial_matchings(g), trace)
    except StabilityError:
        if g.min_degree() != 1:
            raise
        log.info("switching stalled; retrying on the padded supergraph")
        padded = pad_min_degree(g)
        c = _color_simple(padded, trace)
        return {e: c[e] for e in g.edge_ids()}
    h = build_conflict_graph(g, pair)
    sides = h.two_coloring()
    if sides is None:
        raise StabilityError("conflict graph is not bipartite")
    c = {e: A1 for e in pair.m1}
    c.update({e: B1 for e in pair.m2})
    c.update({e: (A2 if s == 0 else B2) for e, s in sides.items()})
    return c


def color_3_irregular(g: MultiGraph, trace: Optional[list[SwitchMove]] = None) -> EdgeColoring:
    """A (1^2, 2^2)-packing edge-coloring of a 3-irregular subcubic multigraph."""
    simple, steps = reduce_multiedges(g)
    c: EdgeColoring = {}
    for comp in simple.components():
        if len(comp) < 2:
            continue
        sub = simple.induced_by_vertices(comp)
        c.update(_color_simple(sub, trace))
    for step in reversed(steps):
        extend_digon(c, step)
    bad = validate(g, GOOD_SPEC, c, require_total=True)
    if bad:
        raise StabilityError(f"constructed coloring is invalid: {bad[:3]}")
    return c
