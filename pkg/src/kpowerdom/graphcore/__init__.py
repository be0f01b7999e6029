"""Graph representation, named families, isomorphism, and graph6 I/O."""

from . import families
from .canon import canonical_form, canonical_graph, contains_induced, is_isomorphic
from .graph import (
    MAX_VERTICES,
    Graph,
    GraphError,
    build,
    complement,
    components,
    contract,
    delete_vertices,
    disjoint_union,
    format_set,
    from_adjacency,
    induced_subgraph,
    members,
    normalize_edge,
    parse_set,
    popcount,
    subdivide,
    vset,
)
from .graph6 import Graph6Error, graph6_decode, graph6_encode

__all__ = [
    "MAX_VERTICES",
    "Graph",
    "Graph6Error",
    "GraphError",
    "build",
    "canonical_form",
    "canonical_graph",
    "complement",
    "components",
    "contains_induced",
    "contract",
    "delete_vertices",
    "disjoint_union",
    "families",
    "format_set",
    "from_adjacency",
    "graph6_decode",
    "graph6_encode",
    "induced_subgraph",
    "is_isomorphic",
    "members",
    "normalize_edge",
    "parse_set",
    "popcount",
    "subdivide",
    "vset",
]
