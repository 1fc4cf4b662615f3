"""Minimal separators, hole structure and independent sets for graphs
excluding squares, prisms, pyramids, thetas and even wheels."""

from minseps._backend import compiled_available
from minseps.classc import enumerate_all_minimal_separators_classC, run_A
from minseps.configs import find_config, is_in_class_C
from minseps.graph import Graph, GraphFormatError, WeightedGraph, dump_graph, load_graph
from minseps.mwis import brute_force_mwis, enumerate_pmcs, mwis_classC, mwis_via_pmc
from minseps.separators import (clique_minimal_separators, is_minimal_separator,
                                is_proper_separator, oracle_minimal_separators)

__version__ = "0.1.0"

__all__ = [
    "Graph", "WeightedGraph", "GraphFormatError", "load_graph", "dump_graph",
    "compiled_available", "find_config", "is_in_class_C",
    "is_minimal_separator", "is_proper_separator", "oracle_minimal_separators",
    "clique_minimal_separators", "run_A", "enumerate_all_minimal_separators_classC",
    "brute_force_mwis", "enumerate_pmcs", "mwis_via_pmc", "mwis_classC",
]
