"""S-packing edge-colorings: class specs, validators and certificate text.

A coloring is a plain ``dict`` mapping edge id to a class index into the
``PackingSpec``. Partial colorings are allowed everywhere; only
``require_total`` asks for every edge to be colored.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from typing import Iterable, Optional

from packedge.graph import GraphError, MultiGraph

EdgeColoring = dict[int, int]


class ColoringError(ValueError):
    """Coloring does not fit its packing spec or the graph."""


@dataclass(frozen=True)
class PackingSpec:
    """Non-decreasing class strengths; class ``i`` is a distance-``s[i]+1`` packing."""

    s: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "s", tuple(int(x) for x in self.s))
        if not self.s:
            raise ColoringError("a packing spec needs at least one class")
        if any(x < 1 for x in self.s):
            raise ColoringError(f"class strengths must be positive: {self.s}")
        if any(a > b for a, b in zip(self.s, self.s[1:])):
            raise ColoringError(f"class strengths must be non-decreasing: {self.s}")

    @classmethod
    def from_counts(cls, ones: int, twos: int) -> "PackingSpec":
        return cls((1,) * ones + (2,) * twos)

    @classmethod
    def parse(cls, text: str) -> "PackingSpec":
        """Parse ``"1,1,2,2"`` (commas or whitespace)."""
        try:
            return cls(tuple(int(x) for x in text.replace(",", " ").split()))
        except ValueError:
            raise ColoringError(f"bad spec {text!r}") from None

    def __len__(self) -> int:
        return len(self.s)

    def strength(self, i: int) -> int:
        return self.s[i]

    def classes_of_strength(self, strength: int) -> list[int]:
        return [i for i, x in enumerate(self.s) if x == strength]

    @property
    def names(self) -> list[str]:
        out, seen = [], {}
        for x in self.s:
            k = seen.get(x, 0)
            seen[x] = k + 1
            out.append(f"{x}_{string.ascii_lowercase[k]}")
        return out

    def name(self, i: int) -> str:
        return self.names[i]

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ColoringError(f"unknown class name {name!r} for spec {self.s}") from None

    def __str__(self) -> str:
        return ",".join(map(str, self.s))


# (1^2, 2^2) in class-index order 1_a, 1_b, 2_a, 2_b
GOOD_SPEC = PackingSpec((1, 1, 2, 2))
A1, B1, A2, B2 = range(4)


@dataclass(frozen=True)
class Violation:
    kind: str  # distance | good-condition-I | good-condition-II | uncolored-edge
    witness: tuple[int, ...]

    def line(self) -> str:
        return "V " + " ".join([self.kind, *map(str, self.witness)])


def _check_ids(g: MultiGraph, spec: PackingSpec, c: EdgeColoring) -> None:
    for e, cls in c.items():
        if not g.has_edge_id(e):
            raise ColoringError(f"coloring assigns unknown edge id {e}")
        if not (0 <= cls < len(spec)):
            raise ColoringError(f"edge {e} has class {cls} outside spec of length {len(spec)}")


def validate(
    g: MultiGraph, spec: PackingSpec, c: EdgeColoring, require_total: bool = False
) -> list[Violation]:
    """All violations of the packing constraints, empty iff ``c`` is valid."""
    _check_ids(g, spec, c)
    out = []
    for e in sorted(c):
        cls = c[e]
        near = g.edges_within(e, spec.s[cls])
        for f in sorted(near):
            if f > e and c.get(f) == cls:
                out.append(Violation("distance", (e, f)))
    if require_total:
        out.extend(Violation("uncolored-edge", (e,)) for e in sorted(g.edge_ids()) if e not in c)
    return out


def middle_linked(g: MultiGraph, e: int) -> dict[int, int]:
    """Edges ``f`` disjoint from ``e`` joined to it by a path ``x w y``.

    ``x`` is an endpoint of ``e``, ``y`` an endpoint of ``f`` and the middle
    vertex ``w`` lies on neither edge. Maps each such ``f`` to its smallest
    middle vertex.
    """
    ends_e = set(g.ends(e))
    out: dict[int, int] = {}
    for x in ends_e:
        for w in g.neighbors(x):
            if w in ends_e:
                continue
            for y in g.neighbors(w):
                if y in ends_e:
                    continue
                for f in g.incident(y):
                    a, b = g.ends(f)
                    if w in (a, b) or a in ends_e or b in ends_e:
                        continue
                    if f not in out or w < out[f]:
                        out[f] = w
    return out


def good_violations_at(g: MultiGraph, spec: PackingSpec, c: EdgeColoring, e: int) -> list[Violation]:
    """Condition I/II violations pairing edge ``e`` with some other 2-colored edge."""
    cls = c.get(e)
    if cls is None or spec.s[cls] != 2:
        return []
    out = []
    for f in sorted(g.adjacent_edges(e)):
        other = c.get(f)
        if other is not None and other != cls and spec.s[other] == 2:
            out.append(Violation("good-condition-I", tuple(sorted((e, f)))))
    for f, w in sorted(middle_linked(g, e).items()):
        other = c.get(f)
        if other is not None and other != cls and spec.s[other] == 2:
            a, b = sorted((e, f))
            out.append(Violation("good-condition-II", (a, b, w)))
    return out


def validate_good(
    g: MultiGraph, c: EdgeColoring, spec: PackingSpec = GOOD_SPEC, require_total: bool = True
) -> list[Violation]:
    """Violations of the good-coloring predicate.

    Good means a valid packing coloring in which no two edges with distinct
    2-classes share an endpoint (condition I) or are linked through a single
    outside middle vertex (condition II).
    """
    if spec.s.count(1) != 2 or spec.s.count(2) != 2 or len(spec) != 4:
        raise ColoringError(f"good colorings use spec 1,1,2,2, not {spec}")
    out = validate(g, spec, c, require_total=require_total)
    seen = set()
    for e in sorted(c):
        for v in good_violations_at(g, spec, c, e):
            if v not in seen:
                seen.add(v)
                out.append(v)
    return out


def vertex_sees(g: MultiGraph, c: EdgeColoring, v: int, cls: int) -> bool:
    """True iff some edge at ``v`` has class ``cls``."""
    return any(c.get(e) == cls for e in g.incident(v))


def format_certificate(spec: PackingSpec, c: EdgeColoring) -> str:
    lines = ["c packing " + " ".join(map(str, spec.s))]
    lines += [f"a {e} {spec.name(c[e])}" for e in sorted(c)]
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> tuple[PackingSpec, EdgeColoring]:
    spec: Optional[PackingSpec] = None
    c: EdgeColoring = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "c":
            if spec is not None or len(parts) < 3 or parts[1] != "packing":
                raise ColoringError(f"line {lineno}: bad header {line!r}")
            spec = PackingSpec.parse(" ".join(parts[2:]))
        elif parts[0] == "a":
            if spec is None:
                raise ColoringError(f"line {lineno}: assignment before header")
            if len(parts) != 3:
                raise ColoringError(f"line {lineno}: bad assignment {line!r}")
            try:
                e = int(parts[1])
            except ValueError:
                raise ColoringError(f"line {lineno}: bad edge id {parts[1]!r}") from None
            if e in c:
                raise ColoringError(f"line {lineno}: edge {e} assigned twice")
            c[e] = spec.index(parts[2])
        else:
            raise ColoringError(f"line {lineno}: unknown record {parts[0]!r}")
    if spec is None:
        raise ColoringError("missing 'c packing' header")
    return spec, c


def permute_classes(c: EdgeColoring, perm: Iterable[int]) -> EdgeColoring:
    """Relabel class ``i`` as ``perm[i]``."""
    perm = list(perm)
    return {e: perm[x] for e, x in c.items()}


__all__ = [
    "EdgeColoring",
    "ColoringError",
    "PackingSpec",
    "GOOD_SPEC",
    "Violation",
    "validate",
    "validate_good",
    "vertex_sees",
    "middle_linked",
    "good_violations_at",
    "format_certificate",
    "parse_certificate",
    "permute_classes",
    "GraphError",
]
