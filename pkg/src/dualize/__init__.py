"""Enumerate the minimal hitting sets (the dual) of a hypergraph."""
from .hypergraph import (BitMatrix, Hypergraph, ParseError, complement, parse_hypergraph,
                         remove_superset_edges, sort_edges, write_hypergraph, write_sets)
from .sink import DualCollection, EnumStats, MhsSink
from .rs import RsOptions, enumerate_rs
from .dfs import DfsOptions, enumerate_dfs
from .baselines import enumerate_brute, enumerate_dl
from .generators import InstanceSpec, generate
from .solve import ALGORITHMS, dual, dual_labels, run

__all__ = [
    "ALGORITHMS", "BitMatrix", "DfsOptions", "DualCollection", "EnumStats", "Hypergraph",
    "InstanceSpec", "MhsSink", "ParseError", "RsOptions", "complement", "dual", "dual_labels",
    "enumerate_brute", "enumerate_dfs", "enumerate_dl", "enumerate_rs", "generate",
    "parse_hypergraph", "remove_superset_edges", "run", "sort_edges", "write_hypergraph",
    "write_sets",
]
__version__ = "0.1.0"
