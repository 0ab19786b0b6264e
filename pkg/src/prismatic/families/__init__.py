"""Generators for the graph families, good-partition verification and Schlafli membership."""

from .chains import (BUILTIN_SPECS, CYCLE, CYCLE8, LADDER, MINIMAL, PATH, GoodPartition, TriangleChainSpec,
                     canonical_coloring, cycle_of_triangles, path_of_triangles, random_chain_spec, triangle_chain,
                     triangle_locations_ok, verify_good_partition, wide_ladder_spec)
from .registry import FAMILIES, FamilySpec, generate, parse_spec_text, read_spec
from .schlafli import embedding_is_valid, is_schlafli_prismatic
from .special import (MantledSpec, RingOfFiveSpec, complete_graph, core_ring_of_five, cycle_graph, diamond,
                      line_k33, lk33_index, mantled_line_k33, petersen, prism, ring_of_five, schlafli_complement)
from .worn import ColoredGraph, line_k33_colored, permitted_pairs, random_non_edges, worn_chain_compose

__all__ = [
    "BUILTIN_SPECS", "CYCLE", "CYCLE8", "LADDER", "MINIMAL", "PATH", "GoodPartition", "TriangleChainSpec",
    "canonical_coloring", "cycle_of_triangles", "path_of_triangles", "random_chain_spec", "triangle_chain",
    "triangle_locations_ok", "verify_good_partition", "wide_ladder_spec",
    "FAMILIES", "FamilySpec", "generate", "parse_spec_text", "read_spec",
    "embedding_is_valid", "is_schlafli_prismatic",
    "MantledSpec", "RingOfFiveSpec", "complete_graph", "core_ring_of_five", "cycle_graph", "diamond", "line_k33",
    "lk33_index", "mantled_line_k33", "petersen", "prism", "ring_of_five", "schlafli_complement",
    "ColoredGraph", "line_k33_colored", "permitted_pairs", "random_non_edges", "worn_chain_compose",
]
