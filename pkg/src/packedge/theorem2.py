"""Good (1^2, 2^2)-colorings of subcubic graphs with mad < 20/9.

A good coloring is a (1^2, 2^2)-packing edge-coloring where edges of the two
different 2-classes never share an endpoint and are never linked through one
outside middle vertex.

The colorer peels reducible configurations (a 1-vertex, a 4-thread, or a
3-vertex carrying two 3-threads and a longer-than-one thread) until no edge
is left, then re-inserts them in reverse order. Each re-insertion tries the
recolorings of a fixed case table under the four class permutations that
preserve strengths, keeping the first that leaves the coloring good.

The discharging audit replays the charge argument exactly with fractions:
every vertex starts at d(v) - 20/9 and each 3-vertex gives 1/9 to every
2-vertex of each thread that starts at it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from packedge.coloring import A1, A2, B1, B2, GOOD_SPEC, EdgeColoring, good_violations_at, validate_good
from packedge.density import mad_exact
from packedge.graph import GraphError, MultiGraph

THRESHOLD = Fraction(20, 9)
GIFT = Fraction(1, 9)

# class permutations preserving strengths: id, 1a<->1b, 2a<->2b, both
PERMS = ((0, 1, 2, 3), (1, 0, 2, 3), (0, 1, 3, 2), (1, 0, 3, 2))


class PreconditionError(GraphError):
    """Graph is not simple subcubic with mad < 20/9."""


class NoConfigError(RuntimeError):
    """No reducible configuration although the density bound says one exists."""


class ExtensionExhausted(RuntimeError):
    """No row of a case table extends the smaller coloring."""


@dataclass(frozen=True)
class ReducibleConfig:
    """A reducible configuration and the vertices the reduction deletes.

    ``names`` maps the roles used by the case tables (``u``, ``u1``, ``v2`` ...)
    to vertex ids of the host graph.
    """

    kind: str  # one-vertex | four-thread | three-thread-hub
    names: dict = field(hash=False)
    delete: tuple[int, ...] = ()

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(self.names.values())


# -- configuration detection -------------------------------------------------


def _threads(g: MultiGraph, u: int) -> list[tuple[int, list[int], int]]:
    """(first edge, inner 2-vertices, end vertex) for every edge at ``u``."""
    out = []
    for e in sorted(g.incident(u)):
        inner, end = g.thread_from(u, e)
        out.append((e, inner, end))
    return out


def find_reducible(g: MultiGraph) -> Optional[ReducibleConfig]:
    """First reducible configuration in the order one-vertex, four-thread, hub.

    Threads are read from a 3-vertex, so components that are bare cycles
    contain none of the configurations.
    """
    for u in range(g.n):
        if g.degree(u) == 1:
            return _one_vertex(g, u)
    threes = [u for u in range(g.n) if g.degree(u) == 3]
    for u in threes:
        for e, inner, end in _threads(g, u):
            if len(inner) >= 4:
                v1, v2, v3, v4 = inner[:4]
                u2 = inner[4] if len(inner) > 4 else end
                names = {"u1": u, "v1": v1, "v2": v2, "v3": v3, "v4": v4, "u2": u2}
                return ReducibleConfig("four-thread", names, (v2, v3))
    for u in threes:
        threads = _threads(g, u)
        long = [t for t in threads if len(t[1]) == 3]
        if len(long) < 2:
            continue
        v_thread, w_thread = long[0], long[1]
        rest = [t for t in threads if t is not v_thread and t is not w_thread]
        u_thread = rest[0]
        if len(u_thread[1]) < 2:
            continue
        v1, v2, v3 = v_thread[1]
        w1, w2, w3 = w_thread[1]
        u_inner = u_thread[1]
        u_prime = u_inner[2] if len(u_inner) > 2 else u_thread[2]
        names = {
            "u": u, "v1": v1, "v2": v2, "v3": v3, "v": v_thread[2],
            "w1": w1, "w2": w2, "w3": w3, "w": w_thread[2],
            "u1": u_inner[0], "u2": u_inner[1], "u'": u_prime,
        }
        return ReducibleConfig("three-thread-hub", names, (v2,))
    return None


def _one_vertex(g: MultiGraph, u: int) -> ReducibleConfig:
    (u1,) = g.neighbors(u)
    names = {"u": u, "u1": u1}
    if g.degree(u1) < 3:
        if g.degree(u1) == 2:
            names["u2"] = next(x for x in g.neighbors(u1) if x != u)
        return ReducibleConfig("one-vertex", names, (u,))
    others = [x for x in g.neighbors(u1) if x != u]
    leaves = [x for x in others if g.degree(x) == 1]
    if leaves:
        u2 = leaves[0]
        u3 = next(x for x in others if x != u2)
        names.update(u2=u2, u3=u3)
        return ReducibleConfig("one-vertex", names, (u, u2))
    names.update(u2=others[0], u3=others[1])
    return ReducibleConfig("one-vertex", names, (u,))


# -- chains ----------------------------------------------------------------


def chain_edges(g: MultiGraph, c: EdgeColoring, start: int) -> list[int]:
    """Maximal 1_a/1_b alternating chain through ``start``."""
    if c.get(start) not in (A1, B1):
        raise ValueError(f"edge {start} is not 1-colored")
    seen = {start}
    stack = [start]
    while stack:
        e = stack.pop()
        for x in g.ends(e):
            for f in g.incident(x):
                if f not in seen and c.get(f) in (A1, B1) and c[f] != c[e]:
                    seen.add(f)
                    stack.append(f)
    return sorted(seen)


def chain_switch(c: EdgeColoring, g: MultiGraph, start: int) -> EdgeColoring:
    """Exchange 1_a and 1_b along the alternating chain through ``start``."""
    out = dict(c)
    for e in chain_edges(g, c, start):
        out[e] = B1 if c[e] == A1 else A1
    return out


# -- case tables --------------------------------------------------------------
#
# A row is a sequence of operations on named edges ("u1u2" is the edge between
# the roles u1 and u2):
#   ("set", edge, class)   assign a class
#   ("copy", edge, src)    assign the class ``src`` had before the row ran
#   ("switch", edge)       exchange 1_a/1_b on the chain through ``edge``
# Classes are written for one representative; every row is also tried under
# the strength-preserving permutations.

ONE_VERTEX_LOW = [  # u1 has degree <= 2: the free 1-color
    [("set", "uu1", A1)],
]

ONE_VERTEX_TWO_LEAVES = [  # u1 is a 3-vertex with a second leaf u2; u and u2 deleted
    [("set", "uu1", A1), ("set", "u1u2", B1)],
    [("set", "uu1", B2), ("set", "u1u2", B1)],
    [("set", "uu1", A2), ("set", "u1u2", B1)],
]

ONE_VERTEX_DEGREE3 = [  # u1 is a 3-vertex, u deleted
    [("set", "uu1", B1)],
    [("set", "uu1", B2)],
    [("set", "u1u2", B2), ("copy", "uu1", "u1u2")],
    [("set", "u1u3", B2), ("copy", "uu1", "u1u3")],
]

FOUR_THREAD = [
    [("set", "v1v2", A1), ("set", "v2v3", B1), ("set", "v3v4", A1)],
    [("set", "v1v2", A2), ("set", "v2v3", B1), ("set", "v3v4", A1)],
    [("set", "v1v2", B2), ("set", "v2v3", B1), ("set", "v3v4", A1)],
    [("set", "v1v2", A1), ("set", "v2v3", B1), ("set", "v3v4", A2)],
    [("set", "v1v2", A1), ("set", "v2v3", B1), ("set", "v3v4", B2)],
]

_TAIL = [("set", "v1v2", A1), ("set", "v2v3", B1)]

HUB = [
    # uv1, vv3 already compatible: a 1_a/1_b pair on the new edges
    list(_TAIL),
    [("set", "v1v2", B2), ("set", "v2v3", B1)],
    # both 1_a: move 1_a off uv1 along its chain
    [("switch", "uv1")] + _TAIL,
    [("set", "uu1", A1), ("set", "uv1", B2)] + _TAIL,
    [("set", "u1u2", B1), ("set", "uu1", A1), ("set", "uv1", B2)] + _TAIL,
    [("set", "uu1", B1), ("set", "uw1", B2), ("set", "v1v2", A2), ("set", "v2v3", B1)],
    [("set", "w1w2", B1), ("set", "uw1", A1), ("set", "uv1", A2)] + _TAIL,
    [("switch", "w1w2"), ("set", "uw1", A1), ("set", "uv1", A2)] + _TAIL,
    [("set", "uw1", B2), ("set", "v1v2", A2), ("set", "v2v3", B1)],
    # uv1 = 2_a, vv3 = 2_b: uv1 must give up its 2-color
    [("set", "uw1", A2), ("set", "uv1", B1), ("set", "w1w2", A1)] + _TAIL,
    [("set", "uw1", A2), ("set", "uv1", B1), ("set", "w1w2", B1)] + _TAIL,
    [("set", "w2w3", B1), ("set", "uw1", A2), ("set", "uv1", B1)] + _TAIL,
    [("set", "uv1", B1), ("set", "uw1", A2), ("set", "w1w2", B1), ("set", "w2w3", A1)] + _TAIL,
    [("set", "uv1", B1), ("set", "uw1", A2)] + _TAIL,
    [("set", "uv1", B1), ("set", "uw1", B2)] + _TAIL,
    [("set", "uv1", A1), ("set", "uu1", B2), ("set", "v1v2", B1), ("set", "v2v3", A1)],
    [("set", "u1u2", A1), ("set", "uu1", B1), ("set", "uw1", A1), ("set", "w1w2", B1),
     ("set", "w2w3", A1), ("set", "uv1", B2)] + _TAIL,
    [("set", "u1u2", B1), ("set", "uu1", A1), ("set", "uw1", B1), ("set", "w1w2", A1),
     ("set", "w2w3", B1), ("set", "uv1", B2)] + _TAIL,
]

# the hub's 2-thread and second 3-thread play symmetric roles
_HUB_MIRROR = {"uu1": "uw1", "uw1": "uu1", "u1u2": "w1w2", "w1w2": "u1u2", "u2u'": "w2w3", "w2w3": "u2u'"}


def _mirror(row):
    return [tuple(_HUB_MIRROR.get(x, x) if isinstance(x, str) else x for x in op) for op in row]


HUB_ROWS = HUB + [_mirror(r) for r in HUB]


def _edge_names(g: MultiGraph, names: dict) -> dict[str, int]:
    """Map role pairs like ``"v1v2"`` to edge ids of ``g`` where the edge exists."""
    out = {}
    roles = sorted(names, key=len, reverse=True)
    for a in roles:
        for b in roles:
            if a == b:
                continue
            ids = g.edges_between(names[a], names[b]) if names[a] != names[b] else []
            if len(ids) == 1:
                out[a + b] = ids[0]
    return out


def _alias(edges: dict[str, int], key: str) -> Optional[int]:
    if key in edges:
        return edges[key]
    return None


def _apply_row(g: MultiGraph, c: EdgeColoring, row, perm, edges: dict[str, int]) -> Optional[EdgeColoring]:
    out = dict(c)
    for op in row:
        e = _alias(edges, op[1])
        if e is None:
            return None
        if op[0] == "set":
            out[e] = perm[op[2]]
        elif op[0] == "copy":
            src = _alias(edges, op[2])
            if src is None or src not in c:
                return None
            out[e] = c[src]
        elif op[0] == "switch":
            if out.get(e) not in (A1, B1):
                return None
            out = chain_switch(out, g, e)
    return out


def _locally_good(g: MultiGraph, c: EdgeColoring, touched: set[int]) -> bool:
    """Check every edge within distance 3 of a touched edge."""
    region = set(touched)
    for e in touched:
        region.update(g.edges_within(e, 3))
    for e in region:
        cls = c.get(e)
        if cls is None:
            return False
        for f, d in g.edges_within(e, GOOD_SPEC.s[cls]).items():
            if c.get(f) == cls:
                return False
        if good_violations_at(g, GOOD_SPEC, c, e):
            return False
    return True


def _extend(g: MultiGraph, c: EdgeColoring, table, names: dict, kind: str) -> EdgeColoring:
    edges = _edge_names(g, names)
    new = {e for e in g.edge_ids() if e not in c}
    for row in table:
        for perm in PERMS:
            out = _apply_row(g, c, row, perm, edges)
            if out is None or any(e not in out for e in new):
                continue
            touched = new | {e for e in c if out[e] != c[e]}
            if _locally_good(g, out, touched):
                return out
    raise ExtensionExhausted(f"no {kind} row extends the coloring at {names}")


def _color_cycle(g: MultiGraph, verts: set[int]) -> EdgeColoring:
    start = min(verts)
    order, prev, x = [], None, start
    while True:
        e = next(f for f in sorted(g.incident(x)) if f != prev)
        order.append(e)
        prev, x = e, g.other_end(e, x)
        if x == start:
            break
    c = {e: (A1 if i % 2 == 0 else B1) for i, e in enumerate(order)}
    if len(order) % 2:
        c[order[-1]] = A2
    return c


def good_color_sparse(g: MultiGraph, check_mad: bool = True) -> EdgeColoring:
    """A good coloring of a simple subcubic graph with mad < 20/9."""
    if not g.is_simple() or g.max_degree() > 3:
        raise PreconditionError("graph must be simple and subcubic")
    if check_mad and g.n and not mad_exact(g) < THRESHOLD:
        raise PreconditionError(f"mad {mad_exact(g)} is not below 20/9")
    steps = []
    cur = g
    while cur.m:
        cycles = [comp for comp in cur.components()
                  if len(comp) > 1 and all(cur.degree(v) == 2 for v in comp)]
        if cycles:
            steps.append(("cycle", cur, cycles))
            drop = [e for comp in cycles for v in comp for e in cur.incident(v)]
            cur = cur.without_edges(drop)
            continue
        cfg = find_reducible(cur)
        if cfg is None:
            raise NoConfigError("no reducible configuration in a graph with mad < 20/9")
        steps.append(("config", cur, cfg))
        cur = cur.without_edges([e for v in cfg.delete for e in cur.incident(v)])
    assert len(steps) <= g.n
    c: EdgeColoring = {}
    for kind, level, item in reversed(steps):
        if kind == "cycle":
            for comp in item:
                c.update(_color_cycle(level, comp))
        else:
            c = _extend(level, c, _table_for(level, item), item.names, item.kind)
    bad = validate_good(g, c)
    if bad:
        raise ExtensionExhausted(f"final coloring is not good: {bad[:3]}")
    return c


def _table_for(g: MultiGraph, cfg: ReducibleConfig):
    if cfg.kind == "four-thread":
        return FOUR_THREAD
    if cfg.kind == "three-thread-hub":
        return HUB_ROWS
    if g.degree(cfg.names["u1"]) < 3:
        return ONE_VERTEX_LOW
    if len(cfg.delete) == 2:
        return ONE_VERTEX_TWO_LEAVES
    return ONE_VERTEX_DEGREE3


# -- discharging ----------------------------------------------------------------


@dataclass
class ChargeLedger:
    initial: dict[int, Fraction]
    final: dict[int, Fraction]
    transfers: list[tuple[int, int, Fraction]]

    def min_final(self) -> Fraction:
        return min(self.final.values())

    def givers(self) -> dict[int, int]:
        """Number of gifts each 3-vertex hands out."""
        out: dict[int, int] = {}
        for giver, _, _ in self.transfers:
            out[giver] = out.get(giver, 0) + 1
        return out


def discharge_audit(g: MultiGraph) -> ChargeLedger:
    """Exact charges before and after the thread rule.

    A 3-vertex gives 1/9 to each 2-vertex on every thread leaving it; a thread
    that returns to its start is counted once per end.
    """
    if not g.is_simple() or g.max_degree() > 3:
        raise PreconditionError("graph must be simple and subcubic")
    if g.n and g.min_degree() < 2:
        raise PreconditionError("discharging needs minimum degree 2")
    initial = {v: g.degree(v) - THRESHOLD for v in range(g.n)}
    final = dict(initial)
    transfers = []
    for u in range(g.n):
        if g.degree(u) != 3:
            continue
        for _, inner, _ in _threads(g, u):
            for x in inner:
                transfers.append((u, x, GIFT))
                final[u] -= GIFT
                final[x] += GIFT
    ledger = ChargeLedger(initial, final, transfers)
    assert sum(final.values()) == sum(initial.values()) == 2 * g.m - THRESHOLD * g.n
    return ledger


def has_reducible_thread_config(g: MultiGraph) -> bool:
    """True iff ``g`` has a 4-thread or a three-thread hub."""
    cfg = find_reducible(g)
    return cfg is not None and cfg.kind != "one-vertex"


def names_to_edges(g: MultiGraph, cfg: ReducibleConfig) -> dict[str, int]:
    return _edge_names(g, cfg.names)


__all__: Sequence[str] = [
    "ReducibleConfig",
    "ChargeLedger",
    "find_reducible",
    "good_color_sparse",
    "chain_switch",
    "chain_edges",
    "discharge_audit",
    "PreconditionError",
    "NoConfigError",
    "ExtensionExhausted",
]
