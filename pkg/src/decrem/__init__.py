"""Decremental graph connectivity with witness queries.

Deletion-only connectivity engines built on Euler-tour (and linear-layout)
interval partitions with 2D range-emptiness adjacency tests, plus sparse
certificates, tree cut witnesses, and connectivity labeling schemes.
"""

from .graph import (
    Edge,
    Graph,
    ParseError,
    is_connected,
    norm_edge,
    oracle_components,
    oracle_connected,
    parse_edge_list,
    spanning_forest,
)
from .rangeindex import DynamicPointSet, StaticPointSet
from .tour import Tour, build_doubled_tour, build_tree_tour, nontree_edge_points, occurrence_pair_points
from .auxgraph import AuxGraph, DfsBackend, IntervalVertex, UnionFindBackend, WorstCaseUnionFind
from .certificate import Certificate, sparse_certificate
from .edge_deletion import EdgeDecremental, WitnessSession, k_edge_witness
from .tree_witness import (
    LcaIndex,
    is_edge_cut_tree,
    is_vertex_cut_tree,
    k_edge_witness_tree,
    k_vertex_witness_tree,
)
from .tree_variant import TreeDecremental, bfs_spanning_tree, min_degree_spanning_tree
from .layout import (
    LinearLayout,
    exact_path_cover,
    format_layout,
    greedy_path_cover,
    layout_from_path_cover,
    parse_layout,
)
from .vertex_deletion import LayoutDecremental
from .labels import (
    DecodeSession,
    LabelA,
    LabelB,
    decode,
    decode_pair,
    mark,
    mark_with_sets,
    parse_label,
    serialize_label,
)

__all__ = [
    "Edge",
    "Graph",
    "ParseError",
    "is_connected",
    "norm_edge",
    "oracle_components",
    "oracle_connected",
    "parse_edge_list",
    "spanning_forest",
    "DynamicPointSet",
    "StaticPointSet",
    "Tour",
    "build_doubled_tour",
    "build_tree_tour",
    "nontree_edge_points",
    "occurrence_pair_points",
    "AuxGraph",
    "DfsBackend",
    "IntervalVertex",
    "UnionFindBackend",
    "WorstCaseUnionFind",
    "Certificate",
    "sparse_certificate",
    "EdgeDecremental",
    "WitnessSession",
    "k_edge_witness",
    "LcaIndex",
    "is_edge_cut_tree",
    "is_vertex_cut_tree",
    "k_edge_witness_tree",
    "k_vertex_witness_tree",
    "TreeDecremental",
    "bfs_spanning_tree",
    "min_degree_spanning_tree",
    "LinearLayout",
    "exact_path_cover",
    "format_layout",
    "greedy_path_cover",
    "layout_from_path_cover",
    "parse_layout",
    "LayoutDecremental",
    "DecodeSession",
    "LabelA",
    "LabelB",
    "decode",
    "decode_pair",
    "mark",
    "mark_with_sets",
    "parse_label",
    "serialize_label",
]
