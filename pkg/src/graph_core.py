"""
Undirected simple graphs with stable vertex identifiers

Graph values are immutable after construction; every operation returns a
new graph and never renumbers surviving vertices.
"""
import logging
from collections import deque
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple

logger = logging.getLogger(__name__)

DegreeVector = Tuple[int, ...]
Edge = Tuple[int, int]


class GraphError(ValueError):
    """Invalid graph input or an operation applied outside its domain"""


class DisconnectedGraphError(GraphError):
    """Raised when an operation needs a connected graph"""


class Graph:
    """Undirected simple graph: vertex id -> frozenset of neighbor ids"""

    __slots__ = ("_adjacency", "_edge_count")

    def __init__(self, adjacency: Mapping[int, Iterable[int]]):
        adj: Dict[int, FrozenSet[int]] = {
            int(v): frozenset(int(u) for u in neighbors)
            for v, neighbors in adjacency.items()
        }
        half_edges = 0
        for v, neighbors in adj.items():
            if v < 0:
                raise GraphError(f"Negative vertex id: {v}")
            if v in neighbors:
                raise GraphError(f"Loop at vertex {v}")
            for u in neighbors:
                if u not in adj:
                    raise GraphError(f"Neighbor {u} of vertex {v} is not a vertex")
                if v not in adj[u]:
                    raise GraphError(f"Asymmetric adjacency between {v} and {u}")
            half_edges += len(neighbors)
        self._adjacency = adj
        self._edge_count = half_edges // 2

    @property
    def vertex_ids(self) -> FrozenSet[int]:
        return frozenset(self._adjacency)

    @property
    def order(self) -> int:
        return len(self._adjacency)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def is_empty(self) -> bool:
        return not self._adjacency

    def sorted_vertices(self) -> List[int]:
        return sorted(self._adjacency)

    def neighbors(self, v: int) -> FrozenSet[int]:
        try:
            return self._adjacency[v]
        except KeyError:
            raise GraphError(f"Unknown vertex id: {v}") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_vertex(self, v: int) -> bool:
        return v in self._adjacency

    def has_edge(self, v: int, u: int) -> bool:
        return u in self._adjacency.get(v, ())

    def edges(self) -> List[Edge]:
        """Sorted list of edges as (low, high) pairs"""
        return sorted(
            (v, u) for v, neighbors in self._adjacency.items() for u in neighbors if v < u
        )

    def adjacency(self) -> Dict[int, FrozenSet[int]]:
        return dict(self._adjacency)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adjacency == other._adjacency

    def __hash__(self) -> int:
        return hash((self.vertex_ids, tuple(self.edges())))

    def __repr__(self):
        return f"<Graph(n={self.order}, m={self.edge_count})>"


class Permutation:
    """Bijection between two equal-size vertex-id sets"""

    __slots__ = ("_mapping",)

    def __init__(self, mapping: Mapping[int, int]):
        self._mapping: Dict[int, int] = {int(k): int(v) for k, v in mapping.items()}
        if len(set(self._mapping.values())) != len(self._mapping):
            raise GraphError("Permutation is not injective")

    @classmethod
    def identity(cls, vertex_ids: Iterable[int]) -> "Permutation":
        return cls({v: v for v in vertex_ids})

    @property
    def domain(self) -> FrozenSet[int]:
        return frozenset(self._mapping)

    @property
    def codomain(self) -> FrozenSet[int]:
        return frozenset(self._mapping.values())

    def __call__(self, v: int) -> int:
        try:
            return self._mapping[v]
        except KeyError:
            raise GraphError(f"Vertex {v} is outside the permutation domain") from None

    def inverse(self) -> "Permutation":
        return Permutation({target: source for source, target in self._mapping.items()})

    def as_dict(self) -> Dict[int, int]:
        return dict(self._mapping)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._mapping == other._mapping

    def __repr__(self):
        pairs = ", ".join(f"{k}->{v}" for k, v in sorted(self._mapping.items()))
        return f"<Permutation({pairs})>"


def build_graph(n: int, edges: Iterable[Edge]) -> Graph:
    """Build a graph on ids 0..n-1; duplicate pairs collapse to one edge"""
    if n < 0:
        raise GraphError(f"Vertex count must be non-negative, got {n}")
    adjacency: Dict[int, set] = {v: set() for v in range(n)}
    for pair in edges:
        v, u = (int(x) for x in pair)
        if v == u:
            raise GraphError(f"Loop edge ({v}, {u})")
        for x in (v, u):
            if not 0 <= x < n:
                raise GraphError(f"Vertex id {x} out of range [0, {n})")
        adjacency[v].add(u)
        adjacency[u].add(v)
    return Graph(adjacency)


def empty_graph() -> Graph:
    return Graph({})


def degree_vector(graph: Graph) -> DegreeVector:
    """Nondecreasing vector of local vertex degrees"""
    return tuple(sorted(graph.degree(v) for v in graph.vertex_ids))


def remove_vertex(graph: Graph, v: int) -> Graph:
    """Induced subgraph without v; surviving ids are unchanged"""
    if not graph.has_vertex(v):
        raise GraphError(f"Unknown vertex id: {v}")
    return Graph({
        w: neighbors - {v}
        for w, neighbors in graph.adjacency().items()
        if w != v
    })


def remove_vertices(graph: Graph, vertices: Iterable[int]) -> Graph:
    for v in vertices:
        graph = remove_vertex(graph, v)
    return graph


def apply_permutation(graph: Graph, permutation: Permutation) -> Graph:
    """Relabel every vertex v as permutation(v)"""
    if permutation.domain != graph.vertex_ids:
        raise GraphError("Permutation domain does not match the graph's vertex ids")
    return Graph({
        permutation(v): [permutation(u) for u in neighbors]
        for v, neighbors in graph.adjacency().items()
    })


def reachable_from(graph: Graph, root: int) -> Dict[int, int]:
    """BFS distances from root to every reachable vertex"""
    if not graph.has_vertex(root):
        raise GraphError(f"Unknown vertex id: {root}")
    distance = {root: 0}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for u in graph.neighbors(v):
            if u not in distance:
                distance[u] = distance[v] + 1
                queue.append(u)
    return distance


def is_connected(graph: Graph) -> bool:
    if graph.is_empty():
        raise GraphError("Connectivity is undefined for the empty graph")
    root = min(graph.vertex_ids)
    return len(reachable_from(graph, root)) == graph.order


def require_connected(graph: Graph, name: Optional[str] = None) -> None:
    if not is_connected(graph):
        label = f"Graph {name}" if name else "Graph"
        raise DisconnectedGraphError(f"{label} is not connected")
