"""Exhaustive backtracking for S-packing edge-colorings.

The search walks the edges in a fixed order, keeps for every uncolored edge a
count of how many assigned edges forbid each class, and backtracks as soon as
some edge has no class left. Node budgets (not wall clock) bound a run so
results are reproducible.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from packedge.coloring import (
    GOOD_SPEC,
    ColoringError,
    EdgeColoring,
    PackingSpec,
    middle_linked,
    validate,
    validate_good,
)
from packedge.graph import MultiGraph

COLORABLE = "colorable"
NOT_COLORABLE = "not-colorable"
BUDGET_EXHAUSTED = "budget-exhausted"

ORDERS = ("bfs", "degeneracy", "input")


@dataclass(frozen=True)
class SolverConfig:
    order: str = "bfs"
    budget: Optional[int] = None  # search nodes; None means unlimited
    good: bool = False
    symmetry_breaking: bool = True

    def __post_init__(self):
        if self.order not in ORDERS:
            raise ValueError(f"unknown edge order {self.order!r}")
        if self.budget is not None and self.budget < 0:
            raise ValueError("budget must be non-negative")


@dataclass
class SolveResult:
    verdict: str
    witness: Optional[EdgeColoring] = None
    nodes: int = 0
    elapsed: float = 0.0
    spec: PackingSpec = field(default=GOOD_SPEC)

    @property
    def colorable(self) -> bool:
        return self.verdict == COLORABLE


def edge_order(g: MultiGraph, strategy: str = "bfs") -> list[int]:
    if strategy == "input":
        return sorted(g.edge_ids())
    if strategy == "bfs":
        order, placed = [], set()
        seen = [False] * g.n
        while len(order) < g.m:
            root = max((v for v in range(g.n) if not seen[v] and g.degree(v) > 0),
                       key=lambda v: (g.degree(v), -v))
            seen[root] = True
            queue = deque([root])
            while queue:
                x = queue.popleft()
                for e in sorted(g.incident(x)):
                    if e not in placed:
                        placed.add(e)
                        order.append(e)
                    y = g.other_end(e, x)
                    if not seen[y]:
                        seen[y] = True
                        queue.append(y)
        return order
    if strategy == "degeneracy":
        deg = {v: g.degree(v) for v in range(g.n)}
        alive = set(range(g.n))
        removal = []
        while alive:
            v = min(alive, key=lambda x: (deg[x], x))
            removal.append(v)
            alive.discard(v)
            for e in g.incident(v):
                y = g.other_end(e, v)
                if y in alive:
                    deg[y] -= 1
        order, placed = [], set()
        for v in reversed(removal):
            for e in sorted(g.incident(v)):
                if e not in placed:
                    placed.add(e)
                    order.append(e)
        return order
    raise ValueError(f"unknown edge order {strategy!r}")


def _conflicts(g: MultiGraph, spec: PackingSpec, good: bool) -> dict[tuple[int, int], list[tuple[int, int]]]:
    """For (edge, class): the (edge, class) pairs that assignment forbids."""
    two = spec.classes_of_strength(2)
    out: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for e in g.edge_ids():
        near = g.edges_within(e, max(spec.s))
        linked = middle_linked(g, e) if good else {}
        adj = g.adjacent_edges(e)
        for cls, s in enumerate(spec.s):
            banned = [(f, cls) for f, d in near.items() if d <= s]
            if good and s == 2:
                for other in two:
                    if other != cls:
                        banned += [(f, other) for f in adj]
                        banned += [(f, other) for f in linked]
            out[(e, cls)] = banned
    return out


class _BudgetExhausted(Exception):
    pass


def decide(g: MultiGraph, spec: PackingSpec, cfg: SolverConfig = SolverConfig()) -> SolveResult:
    """Decide whether ``g`` has an S-packing edge-coloring (good one if ``cfg.good``)."""
    if cfg.good and spec != GOOD_SPEC:
        raise ColoringError("good mode requires spec 1,1,2,2")
    start = time.perf_counter()
    order = edge_order(g, cfg.order)
    k = len(spec)
    conflicts = _conflicts(g, spec, cfg.good)
    blocked = {e: [0] * k for e in order}
    assigned: EdgeColoring = {}
    # class -> the class of equal strength that must be used first
    prev_same = [i - 1 if i > 0 and spec.s[i - 1] == spec.s[i] else None for i in range(k)]
    used = [0] * k
    nodes = 0

    def search(pos: int) -> bool:
        nonlocal nodes
        if pos == len(order):
            return True
        e = order[pos]
        for cls in range(k):
            if blocked[e][cls]:
                continue
            if cfg.symmetry_breaking and prev_same[cls] is not None and not used[prev_same[cls]]:
                continue
            nodes += 1
            if cfg.budget is not None and nodes > cfg.budget:
                raise _BudgetExhausted
            assigned[e] = cls
            used[cls] += 1
            touched = []
            dead = False
            for f, c2 in conflicts[(e, cls)]:
                if f in assigned:
                    continue
                row = blocked[f]
                row[c2] += 1
                touched.append((f, c2))
                if not dead and all(row):
                    dead = True
            if not dead and search(pos + 1):
                return True
            for f, c2 in touched:
                blocked[f][c2] -= 1
            used[cls] -= 1
            del assigned[e]
        return False

    try:
        ok = search(0)
    except _BudgetExhausted:
        return SolveResult(BUDGET_EXHAUSTED, None, nodes, time.perf_counter() - start, spec)
    elapsed = time.perf_counter() - start
    if not ok:
        return SolveResult(NOT_COLORABLE, None, nodes, elapsed, spec)
    witness = dict(assigned)
    bad = validate_good(g, witness) if cfg.good else validate(g, spec, witness, require_total=True)
    assert not bad, f"solver produced an invalid witness: {bad[:3]}"
    return SolveResult(COLORABLE, witness, nodes, elapsed, spec)


def decide_good(g: MultiGraph, cfg: SolverConfig = SolverConfig()) -> SolveResult:
    """Decide whether ``g`` has a good (1^2, 2^2) coloring."""
    return decide(g, GOOD_SPEC, SolverConfig(cfg.order, cfg.budget, True, cfg.symmetry_breaking))


def count_maximum_matchings(g: MultiGraph) -> tuple[int, list[frozenset[int]]]:
    """Size of a maximum matching and every matching of that size."""
    edges = sorted(g.edge_ids())
    best = [0, []]
    covered: set[int] = set()
    chosen: list[int] = []

    def rec(i: int) -> None:
        if len(chosen) + (len(edges) - i) < best[0]:
            return
        if i == len(edges):
            if len(chosen) > best[0]:
                best[0], best[1] = len(chosen), [frozenset(chosen)]
            elif len(chosen) == best[0]:
                best[1].append(frozenset(chosen))
            return
        e = edges[i]
        u, v = g.ends(e)
        if u not in covered and v not in covered:
            covered.update((u, v))
            chosen.append(e)
            rec(i + 1)
            chosen.pop()
            covered.difference_update((u, v))
        rec(i + 1)

    rec(0)
    return best[0], sorted(best[1], key=sorted)


def max_two_disjoint_matchings(g: MultiGraph, exhaustive: bool = True) -> tuple[frozenset[int], frozenset[int]]:
    """Two disjoint matchings covering as many edges as possible.

    Exhaustive mode certifies the optimum by enumeration. Otherwise the pair
    comes from the switching local search and is only switch-stable.
    """
    if not exhaustive:
        from packedge.theorem1 import initial_matchings, stabilize

        pair = stabilize(g, initial_matchings(g), check_conclusions=False)
        return pair.m1, pair.m2
    edges = sorted(g.edge_ids())
    cover = [set(), set()]
    side: dict[int, int] = {}
    best: list = [-1, None]

    def rec(i: int) -> None:
        if len(side) + (len(edges) - i) <= best[0]:
            return
        if i == len(edges):
            best[0] = len(side)
            best[1] = ({e for e, s in side.items() if s == 0}, {e for e, s in side.items() if s == 1})
            return
        e = edges[i]
        u, v = g.ends(e)
        for s in (0, 1):
            # M1 is the matching that receives the first chosen edge
            if s == 1 and not cover[0]:
                continue
            if u not in cover[s] and v not in cover[s]:
                cover[s].update((u, v))
                side[e] = s
                rec(i + 1)
                del side[e]
                cover[s].difference_update((u, v))
        rec(i + 1)

    rec(0)
    m1, m2 = best[1]
    return frozenset(m1), frozenset(m2)
