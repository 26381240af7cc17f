"""Graph generators: the small counterexamples, paths, cycles and corpora."""

from __future__ import annotations

import random
from itertools import combinations
from fractions import Fraction
from typing import Iterator, Sequence

from packedge.density import mad_exact
from packedge.graph import GraphError, MultiGraph

# vertex names of the first counterexample, in id order
G1_NAMES = ("u", "u1", "u2", "u3", "u4", "u5")


def make_g1() -> MultiGraph:
    """3-irregular subcubic graph on six vertices with seven edges.

    Ids: u=0, u1..u5=1..5. Edge ids 0..6 are uu2, uu5, u1u2, u1u5, u3u4,
    u2u3, u4u5.
    """
    return MultiGraph.from_pairs(6, [(0, 2), (0, 5), (1, 2), (1, 5), (3, 4), (2, 3), (4, 5)], subcubic=True)


# the two maximum matchings of G1, as edge ids
G1_MATCHINGS = (frozenset({0, 3, 4}), frozenset({1, 2, 4}))


def make_g2(k: int) -> MultiGraph:
    """Cycle u_1..u_k, a pendant v_i at every u_i and two leaves at every v_i.

    Ids: u_i = i-1, v_i = k+i-1, leaves of v_i are 2k+2(i-1) and 2k+2(i-1)+1.
    """
    if k < 3:
        raise GraphError("G2 needs k >= 3")
    pairs = [(i, (i + 1) % k) for i in range(k)]
    for i in range(k):
        pairs.append((i, k + i))
        pairs.append((k + i, 2 * k + 2 * i))
        pairs.append((k + i, 2 * k + 2 * i + 1))
    return MultiGraph.from_pairs(4 * k, pairs, subcubic=True)


def make_g3() -> MultiGraph:
    """Girth-5 graph with no (1^2, 2^2)-packing edge-coloring.

    Inner 5-cycle u_1..u_5 (ids 0..4), outer 10-cycle v_1..v_10 (ids 5..14),
    spokes u_i v_{2i-1}, and a pendant leaf on every even outer vertex
    v_2, v_4, ..., v_10 (leaf ids 15..19). The pendant placement is the one
    consistent with every edge the refutation names; the leaf on v_6 is the
    one called w_4 there.
    """
    pairs = [(i, (i + 1) % 5) for i in range(5)]
    v = lambda j: 4 + j  # v_j, 1-based
    pairs += [(v(j), v(j % 10 + 1)) for j in range(1, 11)]
    pairs += [(i - 1, v(2 * i - 1)) for i in range(1, 6)]
    pairs += [(v(2 * j), 14 + j) for j in range(1, 6)]
    return MultiGraph.from_pairs(20, pairs, subcubic=True)


def make_path(n: int) -> MultiGraph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return MultiGraph.from_pairs(n, [(i, i + 1) for i in range(n - 1)])


def make_cycle(n: int) -> MultiGraph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return MultiGraph.from_pairs(n, [(i, (i + 1) % n) for i in range(n)])


# -- constraints ----------------------------------------------------------


def parse_constraints(items: Sequence[str]) -> list[tuple[str, object]]:
    """``3-irregular``, ``mad-below(p/q)`` / ``mad-below=p/q``, ``girth-at-least(g)``."""
    out = []
    for raw in items:
        item = raw.strip().replace("=", "(").rstrip(")")
        if not item:
            continue
        name, _, arg = item.partition("(")
        if name == "3-irregular":
            out.append((name, None))
        elif name == "mad-below":
            out.append((name, Fraction(arg)))
        elif name == "girth-at-least":
            out.append((name, int(arg)))
        elif name == "min-degree-2":
            out.append((name, None))
        else:
            raise GraphError(f"unknown constraint {raw!r}")
    return out


def satisfies(g: MultiGraph, constraints: Sequence[tuple[str, object]]) -> bool:
    for name, arg in constraints:
        if name == "3-irregular" and not g.is_d_irregular(3):
            return False
        if name == "mad-below" and not mad_exact(g) < arg:
            return False
        if name == "girth-at-least" and not g.girth() >= arg:
            return False
        if name == "min-degree-2" and g.min_degree() < 2:
            return False
    return True


# -- canonical form and enumeration ---------------------------------------


def _refine(adj: list[frozenset[int]], colors: list[int]) -> list[int]:
    """Colour refinement until stable; colours are ranks of signatures."""
    while True:
        sig = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(len(adj))]
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def canonical_form(g: MultiGraph) -> tuple:
    """Isomorphism-invariant certificate of a simple graph.

    Individualisation-refinement: refine the degree partition, branch on each
    vertex of the first non-singleton cell, and keep the lexicographically
    smallest sorted edge list over all discrete leaves.
    """
    n = g.n
    adj = [frozenset(g.neighbors(v)) for v in range(n)]
    best = None

    def leaf_code(colors: list[int]) -> tuple:
        return tuple(sorted(tuple(sorted((colors[u], colors[v]))) for _, u, v in g.edges))

    def rec(colors: list[int]) -> None:
        nonlocal best
        colors = _refine(adj, colors)
        if len(set(colors)) == n:
            code = leaf_code(colors)
            if best is None or code < best:
                best = code
            return
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, k in counts.items() if k > 1)
        for v in range(n):
            if colors[v] == target:
                # v keeps its place just before the rest of its cell
                rec([2 * c + (0 if u == v else 1) for u, c in enumerate(colors)])

    rec([len(adj[v]) for v in range(n)])
    return (n, best or ())


def from_canonical(code: tuple) -> MultiGraph:
    n, edges = code
    return MultiGraph.from_pairs(n, edges)


def enumerate_subcubic(n: int, constraints: Sequence[tuple[str, object]] = ()) -> Iterator[MultiGraph]:
    """All connected simple subcubic graphs on ``n`` vertices, up to isomorphism.

    Every connected graph has a vertex whose removal keeps it connected, so
    level ``n`` is built from level ``n-1`` by attaching a new vertex to 1..3
    vertices of degree at most 2, then deduplicated by canonical form.
    """
    if n < 1:
        raise GraphError("n must be positive")
    if n > 10:
        raise GraphError("enumeration is limited to n <= 10")
    for code in _levels(n):
        g = from_canonical(code)
        if satisfies(g, constraints):
            yield g


_LEVEL_CACHE: dict[int, list[tuple]] = {}


def _levels(n: int) -> list[tuple]:
    if n in _LEVEL_CACHE:
        return _LEVEL_CACHE[n]
    if n == 1:
        out = [canonical_form(MultiGraph(1))]
    else:
        found = set()
        for code in _levels(n - 1):
            g = from_canonical(code)
            free = [v for v in range(g.n) if g.degree(v) < 3]
            pairs = [(u, v) for _, u, v in g.edges]
            for r in (1, 2, 3):
                for subset in combinations(free, r):
                    h = MultiGraph.from_pairs(n, pairs + [(x, n - 1) for x in subset])
                    found.add(canonical_form(h))
        out = sorted(found)
    _LEVEL_CACHE[n] = out
    return out


# -- random generation ----------------------------------------------------


def random_subcubic(
    n: int,
    seed: int,
    constraints: Sequence[tuple[str, object]] = (),
    density: float = 1.0,
    max_tries: int = 2000,
) -> MultiGraph:
    """Random simple subcubic graph on ``n`` vertices, deterministic in ``seed``.

    Edges are proposed between random vertex pairs with spare degree; a
    proposal is skipped if it would break 3-irregularity when that constraint
    is requested. ``density`` scales the number of proposals. Other
    constraints are met by rejection, at most ``max_tries`` samples.
    """
    if n < 1:
        raise GraphError("n must be positive")
    rng = random.Random(seed)
    irregular = any(name == "3-irregular" for name, _ in constraints)
    for _ in range(max_tries):
        deg = [0] * n
        adj = [set() for _ in range(n)]
        pairs = []
        for _ in range(int(density * 3 * n)):
            u, v = rng.randrange(n), rng.randrange(n)
            if u == v or v in adj[u] or deg[u] >= 3 or deg[v] >= 3:
                continue
            if irregular:
                du, dv = deg[u] + 1, deg[v] + 1
                if du == 3 and dv == 3:
                    continue
                if du == 3 and any(deg[w] == 3 for w in adj[u]):
                    continue
                if dv == 3 and any(deg[w] == 3 for w in adj[v]):
                    continue
            adj[u].add(v)
            adj[v].add(u)
            deg[u] += 1
            deg[v] += 1
            pairs.append((u, v))
        g = MultiGraph.from_pairs(n, pairs)
        if satisfies(g, constraints):
            return g
    raise GraphError(f"no sample met {constraints} within {max_tries} tries")


def random_subdivided(
    skeleton_n: int,
    seed: int,
    max_subdivisions: int = 3,
    extra_edges: int = 2,
    min_subdivisions: int = 0,
) -> MultiGraph:
    """Random subcubic multigraph skeleton with every edge subdivided.

    The skeleton is a random spanning tree on ``skeleton_n`` vertices plus up to
    ``extra_edges`` further edges, kept subcubic. Each skeleton edge gets
    between ``min_subdivisions`` and ``max_subdivisions`` new degree-2
    vertices. Subdividing parallel edges and loops with enough vertices makes
    the result simple; too short ones are dropped.
    """
    rng = random.Random(seed)
    deg = [0] * skeleton_n
    sk = []
    for v in range(1, skeleton_n):
        options = [u for u in range(v) if deg[u] < 3]
        if not options:
            break
        u = rng.choice(options)
        sk.append((u, v))
        deg[u] += 1
        deg[v] += 1
    for _ in range(extra_edges):
        free = [v for v in range(skeleton_n) if deg[v] < 3]
        if len(free) < 1:
            break
        u, v = rng.choice(free), rng.choice(free)
        if u == v and deg[u] > 1:
            continue
        if u != v and (deg[u] >= 3 or deg[v] >= 3):
            continue
        sk.append((u, v))
        deg[u] += 1
        deg[v] += 1
    n = skeleton_n
    pairs = []
    used = set()
    for u, v in sk:
        k = rng.randint(min_subdivisions, max_subdivisions)
        if u == v and k < 2:
            k = 2
        key = frozenset((u, v))
        if k == 0 and (key in used):
            k = 1
        chain = [u] + list(range(n, n + k)) + [v]
        n += k
        for a, b in zip(chain, chain[1:]):
            pairs.append((a, b))
        if k == 0:
            used.add(key)
    return MultiGraph.from_pairs(n, pairs)


def random_3_irregular_multigraph(n: int, seed: int, parallel_pairs: int = 1) -> MultiGraph:
    """3-irregular subcubic multigraph with some doubled edges between a 3-vertex and a 2-vertex."""
    rng = random.Random(seed)
    base = random_subcubic(n, seed, [("3-irregular", None)])
    pairs = [(u, v) for _, u, v in base.edges]
    total = n
    for _ in range(parallel_pairs):
        deg = [0] * total
        for u, v in pairs:
            deg[u] += 1
            deg[v] += 1
        # hang a digon x=y on a vertex of degree <= 1 whose neighbours are not 3-vertices
        nbrs = [set() for _ in range(total)]
        for u, v in pairs:
            nbrs[u].add(v)
            nbrs[v].add(u)
        options = [v for v in range(total) if deg[v] <= 1]
        if not options:
            break
        a = rng.choice(options)
        x, y = total, total + 1
        total += 2
        pairs += [(a, x), (x, y), (x, y)]
    return MultiGraph.from_pairs(total, pairs)


def random_threaded(k: int, seed: int, max_thread: int = 3, weights: Sequence[int] = ()) -> MultiGraph:
    """Simple graph with minimum degree 2: a random cubic skeleton with subdivided edges.

    The skeleton is a random pairing of 3k half-edges on k vertices (k even),
    so it may have loops and parallel edges; each skeleton edge becomes a
    thread of 0..``max_thread`` new 2-vertices, with ``weights`` biasing the
    length. Samples that come out non-simple are redrawn.
    """
    if k <= 0 or k % 2:
        raise GraphError("skeleton size must be positive and even")
    rng = random.Random(seed)
    lengths = list(range(max_thread + 1))
    weights = list(weights) or [1] * len(lengths)
    while True:
        pts = [v for v in range(k) for _ in range(3)]
        rng.shuffle(pts)
        n, pairs = k, []
        for i in range(0, len(pts), 2):
            u, v = pts[i], pts[i + 1]
            t = rng.choices(lengths, weights)[0]
            chain = [u] + list(range(n, n + t)) + [v]
            n += t
            pairs += zip(chain, chain[1:])
        if any(u == v for u, v in pairs):
            continue
        g = MultiGraph.from_pairs(n, pairs)
        if g.is_simple():
            return g


def make_girth_planar(seed: int, girth: int = 20, chords: int = 3, pendants: int = 2) -> MultiGraph:
    """Planar subcubic graph of girth >= ``girth`` built from one long cycle.

    Nested (hence non-crossing) chords, each subdivided into a path of
    ``girth + 1`` edges, keep the drawing outerplanar and every cycle long.
    A few pendant paths hang off degree-2 cycle vertices.
    """
    rng = random.Random(seed)
    gaps = [rng.randint(2, 6) for _ in range(chords)]
    length = 2 * sum(gaps) + girth + rng.randrange(0, girth)
    pairs = [(i, (i + 1) % length) for i in range(length)]
    n = length
    a, b = 0, length - 1
    ends = set()
    for gap in gaps:
        a, b = a + gap, b - gap
        chain = [a] + list(range(n, n + girth)) + [b]
        n += girth
        pairs += list(zip(chain, chain[1:]))
        ends.update((a, b))
    free = [v for v in range(length) if v not in ends]
    for v in rng.sample(free, min(pendants, len(free))):
        k = rng.randint(1, 4)
        chain = [v] + list(range(n, n + k))
        n += k
        pairs += list(zip(chain, chain[1:]))
    return MultiGraph.from_pairs(n, pairs)


def generate(name: str, constraints: Sequence[tuple[str, object]] = ()) -> MultiGraph:
    """Build a graph from a family string such as ``g1``, ``g2:5``, ``rand:20:7``.

    ``sub:<k>:<seed>`` subdivides a random k-vertex skeleton and
    ``planar:<seed>`` gives a girth >= 20 planar construction.
    """
    head, *args = name.split(":")
    if head == "g1":
        return make_g1()
    if head == "g2":
        return make_g2(int(args[0]))
    if head == "g3":
        return make_g3()
    if head == "path":
        return make_path(int(args[0]))
    if head == "cycle":
        return make_cycle(int(args[0]))
    if head == "rand":
        extra = parse_constraints(args[2].split(",")) if len(args) > 2 else []
        return random_subcubic(int(args[0]), int(args[1]), list(constraints) + extra)
    if head == "sub":
        return random_subdivided(int(args[0]), int(args[1]))
    if head == "planar":
        return make_girth_planar(int(args[0]))
    raise GraphError(f"unknown family {name!r}")
