"""
graph6 and edge-list codecs

graph6 packing is delegated to networkx. On parse we additionally enforce
what networkx lets through: characters outside '?'..'~', a non-minimal '~'
length header, and nonzero padding bits. Only the short and '~' size forms
are accepted (n <= 258047). The edge-list text form is a header line "n m"
followed by m lines "u v".

Graphs whose ids are not 0..n-1 (for example after vertex removal) are
written with their vertices relabeled by ascending id.
"""
import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import networkx as nx

from ..graph_core import Edge, Graph, build_graph

logger = logging.getLogger(__name__)

GRAPH6_HEADER = ">>graph6<<"
FORMATS = ("g6", "edges")
SUFFIX_FORMATS = {".g6": "g6", ".graph6": "g6", ".edges": "edges", ".txt": "edges"}

_SMALL_LIMIT = 62
_MEDIUM_LIMIT = 258047


class GraphFormatError(ValueError):
    """Malformed graph text, or an unknown format or fixture name"""


def _compact_edges(graph: Graph) -> Tuple[int, List[Edge]]:
    rank: Dict[int, int] = {v: i for i, v in enumerate(graph.sorted_vertices())}
    return graph.order, sorted((rank[v], rank[u]) for v, u in graph.edges())


def to_networkx(graph: Graph) -> nx.Graph:
    """Compacted copy on nodes 0..n-1"""
    n, edges = _compact_edges(graph)
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(range(n))
    nx_graph.add_edges_from(edges)
    return nx_graph


def from_networkx(nx_graph: nx.Graph) -> Graph:
    n = nx_graph.number_of_nodes()
    if set(nx_graph.nodes()) != set(range(n)):
        raise GraphFormatError("networkx graph nodes must be 0..n-1")
    return build_graph(n, nx_graph.edges())


def emit_graph6(graph: Graph) -> str:
    """Standard header-less graph6 encoding"""
    if graph.order > _MEDIUM_LIMIT:
        raise GraphFormatError(f"graph6 encoding supports n <= {_MEDIUM_LIMIT}, got {graph.order}")
    return nx.to_graph6_bytes(to_networkx(graph), header=False).decode("ascii").strip()


def _graph6_order(data: str) -> Tuple[int, str]:
    """(n, body) from the size prefix"""
    if data[0] != "~":
        return ord(data[0]) - 63, data[1:]
    if len(data) >= 2 and data[1] == "~":
        raise GraphFormatError(f"graph6 graphs with more than {_MEDIUM_LIMIT} vertices are not supported")
    if len(data) < 4:
        raise GraphFormatError("Truncated graph6 length header")
    n = 0
    for ch in data[1:4]:
        n = (n << 6) | (ord(ch) - 63)
    if n <= _SMALL_LIMIT:
        raise GraphFormatError(f"Non-minimal graph6 length header for n={n}")
    return n, data[4:]


def parse_graph6(text: str) -> Graph:
    data = text.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    if not data:
        raise GraphFormatError("Empty graph6 string")
    for ch in data:
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"Character {ch!r} is outside the graph6 range")

    n, body = _graph6_order(data)
    padding = -(n * (n - 1) // 2) % 6
    if body and padding and (ord(body[-1]) - 63) & ((1 << padding) - 1):
        raise GraphFormatError("Nonzero padding bits in graph6 string")

    try:
        nx_graph = nx.from_graph6_bytes(data.encode("ascii"))
    except (nx.NetworkXError, ValueError) as e:
        raise GraphFormatError(f"Malformed graph6 string: {e}") from e
    return from_networkx(nx_graph)


def emit_edge_list(graph: Graph) -> str:
    n, edges = _compact_edges(graph)
    lines = [f"{n} {len(edges)}"]
    lines.extend(f"{v} {u}" for v, u in edges)
    return "\n".join(lines) + "\n"


def _parse_ints(line: str, line_no: int) -> Tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise GraphFormatError(f"Line {line_no}: expected two integers, got {line!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphFormatError(f"Line {line_no}: expected two integers, got {line!r}") from None


def parse_edge_list(text: str) -> Graph:
    """Parse "n m" followed by m lines "u v"; blank lines are ignored"""
    lines = [(no, line.strip()) for no, line in enumerate(text.splitlines(), start=1)]
    lines = [(no, line) for no, line in lines if line]
    if not lines:
        raise GraphFormatError("Empty edge list")
    header_no, header = lines[0]
    n, m = _parse_ints(header, header_no)
    if n < 0 or m < 0:
        raise GraphFormatError(f"Line {header_no}: counts must be non-negative")
    edge_lines = lines[1:]
    if len(edge_lines) != m:
        raise GraphFormatError(f"Header declares {m} edges but {len(edge_lines)} follow")
    return build_graph(n, [_parse_ints(line, no) for no, line in edge_lines])


def resolve_format(path: Union[str, Path], fmt: Optional[str] = None) -> str:
    if fmt is not None:
        if fmt not in FORMATS:
            raise GraphFormatError(f"Unknown format: {fmt} (expected one of {', '.join(FORMATS)})")
        return fmt
    suffix = Path(path).suffix.lower()
    if suffix not in SUFFIX_FORMATS:
        raise GraphFormatError(f"Cannot infer format from {path}; pass a format explicitly")
    return SUFFIX_FORMATS[suffix]


def parse_graph(text: str, fmt: str) -> Graph:
    if fmt == "g6":
        lines = [line for line in text.splitlines() if line.strip()]
        if not lines:
            raise GraphFormatError("Empty graph6 file")
        if len(lines) > 1:
            raise GraphFormatError(f"Expected one graph6 line, found {len(lines)}")
        return parse_graph6(lines[0])
    if fmt == "edges":
        return parse_edge_list(text)
    raise GraphFormatError(f"Unknown format: {fmt}")


def emit_graph(graph: Graph, fmt: str) -> str:
    if fmt == "g6":
        return emit_graph6(graph) + "\n"
    if fmt == "edges":
        return emit_edge_list(graph)
    raise GraphFormatError(f"Unknown format: {fmt}")


def load_graph(path: Union[str, Path], fmt: Optional[str] = None) -> Graph:
    fmt = resolve_format(path, fmt)
    with open(path, "r", encoding="ascii") as f:
        return parse_graph(f.read(), fmt)


def save_graph(graph: Graph, path: Union[str, Path], fmt: Optional[str] = None) -> Path:
    path = Path(path)
    fmt = resolve_format(path, fmt)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="ascii") as f:
        f.write(emit_graph(graph, fmt))
    logger.debug(f"Wrote {fmt} graph to {path}")
    return path
