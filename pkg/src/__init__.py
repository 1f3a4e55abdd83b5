# Positional Isomorphism Toolkit Package

from .graph_core import Graph, Permutation, build_graph
from .iso_heuristic import check_pair, decide_isomorphism
from .exact_oracle import exact_isomorphism

__version__ = "0.1.0"
__all__ = ["Graph", "Permutation", "build_graph", "check_pair", "decide_isomorphism", "exact_isomorphism"]
