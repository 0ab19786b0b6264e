"""Prismatic graphs: recognition, family generators, triangle hitting sets and minimum clique covers."""

from .covering import CliqueCover, CoverResult, clique_cover, cover_from_triangles, min_clique_cover_oracle
from .edgelist import format_edgelist, parse_edgelist, read_edgelist, write_edgelist
from .graph import Graph, build_graph, complement, disjoint_union, enumerate_triangles, induced_subgraph, t_matrix
from .hitting import HittingSet, bounded_hitting_set, min_hitting_set_oracle
from .matching import Matching, max_matching
from .recognition import (Certificate, Coloring, Pattern, Verdict, find_induced, is_cobridge_free, is_k_substantial,
                          is_orientable, is_prismatic, three_coloring)

__all__ = [
    "CliqueCover", "CoverResult", "clique_cover", "cover_from_triangles", "min_clique_cover_oracle",
    "format_edgelist", "parse_edgelist", "read_edgelist", "write_edgelist",
    "Graph", "build_graph", "complement", "disjoint_union", "enumerate_triangles", "induced_subgraph", "t_matrix",
    "HittingSet", "bounded_hitting_set", "min_hitting_set_oracle",
    "Matching", "max_matching",
    "Certificate", "Coloring", "Pattern", "Verdict", "find_induced", "is_cobridge_free", "is_k_substantial",
    "is_orientable", "is_prismatic", "three_coloring",
]
