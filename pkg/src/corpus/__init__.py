"""
Graph corpora: seeded generators, named fixtures and file formats
"""
from . import fixtures  # noqa: F401  registers the built-in named graphs
from .formats import (
    FORMATS,
    GraphFormatError,
    emit_edge_list,
    emit_graph,
    emit_graph6,
    from_networkx,
    load_graph,
    parse_edge_list,
    parse_graph,
    parse_graph6,
    resolve_format,
    save_graph,
    to_networkx,
)
from .generators import (
    PROVENANCE_INDEPENDENT,
    PROVENANCE_PERMUTED,
    GraphPair,
    derive_seed,
    gen_connected_gnp,
    gen_gnp,
    gen_independent_pair,
    gen_permuted_pair,
    make_rng,
    random_permutation,
)
from .registry import export_fixtures, list_named_graphs, named_graph, registry

__all__ = [
    "FORMATS", "GraphFormatError", "emit_edge_list", "emit_graph", "emit_graph6",
    "load_graph", "parse_edge_list", "parse_graph", "parse_graph6", "resolve_format",
    "save_graph", "to_networkx", "from_networkx", "PROVENANCE_INDEPENDENT", "PROVENANCE_PERMUTED", "GraphPair",
    "derive_seed", "gen_connected_gnp", "gen_gnp", "gen_independent_pair",
    "gen_permuted_pair", "make_rng", "random_permutation", "export_fixtures",
    "list_named_graphs", "named_graph", "registry",
]
