"""Undirected multigraphs with absorbing vertices."""

from asua.graph.core import (
    build_graph,
    check_invariants,
    contracted_id,
    degree_profile,
    find_stems,
    is_connected,
    merge_absorbers,
    stranded_vertices,
    validate_reachability,
    with_absorbing,
)
from asua.graph.io import format_graph, parse_graph, read_graph, write_graph
from asua.graph.sea_dragon import SeaDragonClass, is_sea_dragon, is_tree
from asua.graph.types import DegreeProfile, Graph, Stem, VertexId

__all__ = [
    "DegreeProfile",
    "Graph",
    "SeaDragonClass",
    "Stem",
    "VertexId",
    "build_graph",
    "check_invariants",
    "contracted_id",
    "degree_profile",
    "find_stems",
    "format_graph",
    "is_connected",
    "is_sea_dragon",
    "is_tree",
    "merge_absorbers",
    "parse_graph",
    "read_graph",
    "stranded_vertices",
    "validate_reachability",
    "with_absorbing",
    "write_graph",
]
