"""
Exact isomorphism oracle

Two independent deciders: a pruned backtracking search used everywhere, and a
plain n!-enumeration kept for small graphs to cross-check the first.
"""
import logging
from dataclasses import dataclass
from itertools import permutations
from typing import Dict, List, Optional, Set

from .graph_core import Graph, Permutation, degree_vector

logger = logging.getLogger(__name__)

EXHAUSTIVE_LIMIT = 8
# largest order mining hands to the backtracking search
BACKTRACK_LIMIT = 40


class OracleError(ValueError):
    """The oracle was asked a question outside its domain"""


@dataclass(frozen=True)
class OracleResult:
    isomorphic: bool
    witness: Optional[Permutation] = None

    def __post_init__(self):
        if self.isomorphic != (self.witness is not None):
            raise ValueError("witness must be present exactly when isomorphic")


NOT_ISOMORPHIC = OracleResult(False)


def _is_isomorphism(g: Graph, h: Graph, mapping: Dict[int, int]) -> bool:
    return all(h.has_edge(mapping[v], mapping[u]) for v, u in g.edges())


def _search_order(g: Graph) -> List[int]:
    """Vertices of g, each next one having the most already-placed neighbors"""
    remaining = set(g.vertex_ids)
    placed: Set[int] = set()
    order: List[int] = []
    while remaining:
        v = min(
            remaining,
            key=lambda w: (-len(g.neighbors(w) & placed), -g.degree(w), w),
        )
        order.append(v)
        placed.add(v)
        remaining.discard(v)
    return order


def exact_isomorphism(g: Graph, h: Graph) -> OracleResult:
    """Backtracking vertex assignment pruned by degree and mapped neighborhoods"""
    if g.order != h.order:
        raise OracleError(f"Vertex counts differ: {g.order} vs {h.order}")
    if g.edge_count != h.edge_count or degree_vector(g) != degree_vector(h):
        return NOT_ISOMORPHIC
    if g.is_empty():
        return OracleResult(True, Permutation({}))

    order = _search_order(g)
    candidates = {
        v: sorted((u for u in h.vertex_ids if h.degree(u) == g.degree(v)), key=lambda u: (h.degree(u), u))
        for v in order
    }
    mapping: Dict[int, int] = {}
    used: Set[int] = set()

    def consistent(v: int, c: int) -> bool:
        mapped_neighbors = 0
        for w in g.neighbors(v):
            if w in mapping:
                if not h.has_edge(c, mapping[w]):
                    return False
                mapped_neighbors += 1
        return sum(1 for x in h.neighbors(c) if x in used) == mapped_neighbors

    def extend(depth: int) -> bool:
        if depth == len(order):
            return True
        v = order[depth]
        for c in candidates[v]:
            if c in used or not consistent(v, c):
                continue
            mapping[v] = c
            used.add(c)
            if extend(depth + 1):
                return True
            del mapping[v]
            used.discard(c)
        return False

    if not extend(0):
        return NOT_ISOMORPHIC
    return OracleResult(True, Permutation(mapping))


def exhaustive_isomorphism(g: Graph, h: Graph, limit: int = EXHAUSTIVE_LIMIT) -> OracleResult:
    """Try every bijection; reference implementation for tiny graphs"""
    if g.order != h.order:
        raise OracleError(f"Vertex counts differ: {g.order} vs {h.order}")
    if g.order > limit:
        raise OracleError(f"Exhaustive enumeration is limited to n <= {limit}, got {g.order}")
    if g.edge_count != h.edge_count:
        return NOT_ISOMORPHIC
    source = g.sorted_vertices()
    for image in permutations(h.sorted_vertices()):
        mapping = dict(zip(source, image))
        if _is_isomorphism(g, h, mapping):
            return OracleResult(True, Permutation(mapping))
    return NOT_ISOMORPHIC
