"""Berge-F-free hypergraphs: containment, blue-edge checks, constructions,
small Ramsey numbers and exact extremal oracles."""

__version__ = "0.1.0"

from .berge import BergeWitness, brute_force_contains_berge, contains_berge, is_berge_f_free
from .catalog import complete, cycle, named, path
from .classify import (
    EdgeClassification,
    blue_density_report,
    classify_edges,
    verify_blue_in_every_copy,
    verify_nonblue_within_edge_f_free,
)
from .constructions import greedy_maximal, kr_construction, single_edge
from .embed import count_copies, find_embeddings
from .hypergraph import Graph, Hypergraph, chromatic_number, clique_number, multiplicity, shadow
from .ramsey import TwoColoring, edge_size_threshold, mono_copy, ramsey_number
from .search import SearchReport, max_f_free_edges, max_weight_berge_free, verify_lemma1_margin
from .weights import WeightFunction, WeightReport, weigh

__all__ = [
    "BergeWitness",
    "EdgeClassification",
    "Graph",
    "Hypergraph",
    "SearchReport",
    "TwoColoring",
    "WeightFunction",
    "WeightReport",
    "blue_density_report",
    "brute_force_contains_berge",
    "chromatic_number",
    "classify_edges",
    "clique_number",
    "complete",
    "contains_berge",
    "count_copies",
    "cycle",
    "edge_size_threshold",
    "find_embeddings",
    "greedy_maximal",
    "is_berge_f_free",
    "kr_construction",
    "max_f_free_edges",
    "max_weight_berge_free",
    "mono_copy",
    "multiplicity",
    "named",
    "path",
    "ramsey_number",
    "shadow",
    "single_edge",
    "verify_blue_in_every_copy",
    "verify_lemma1_margin",
    "verify_nonblue_within_edge_f_free",
    "weigh",
]
