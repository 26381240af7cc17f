"""Packing edge-colorings of subcubic multigraphs.

Decide, construct and certify (1^l, 2^k)-packing edge-colorings: partitions of
the edge set into l matchings and k induced matchings.
"""

from packedge.graph import MultiGraph, GraphError
from packedge.density import mad_exact
from packedge.coloring import (
    PackingSpec,
    Violation,
    validate,
    validate_good,
    vertex_sees,
)
from packedge.solver import SolverConfig, SolveResult, decide, decide_good
from packedge.theorem1 import color_3_irregular
from packedge.theorem2 import discharge_audit, find_reducible, good_color_sparse

__all__ = [
    "MultiGraph",
    "GraphError",
    "mad_exact",
    "PackingSpec",
    "Violation",
    "validate",
    "validate_good",
    "vertex_sees",
    "SolverConfig",
    "SolveResult",
    "decide",
    "decide_good",
    "color_3_irregular",
    "discharge_audit",
    "find_reducible",
    "good_color_sparse",
]

__version__ = "0.1.0"
