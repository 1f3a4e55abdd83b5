"""
Vertex positioning by BFS levels

A root vertex splits a connected graph into levels (shortest-path distance
classes). Every edge becomes one arc from the lower level to the higher one,
or a pair of opposite arcs when both ends share a level. Each vertex is then
positioned by its input and output characteristics: the sorted level numbers
of the arc sources coming in and of the arc targets going out.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, Set, Tuple

from .graph_core import DisconnectedGraphError, Graph, GraphError, reachable_from

logger = logging.getLogger(__name__)

Arc = Tuple[int, int]


@dataclass(frozen=True, order=True)
class Characteristic:
    """Input/output level vectors of one vertex, compared I first"""
    input_levels: Tuple[int, ...] = ()
    output_levels: Tuple[int, ...] = ()

    def render(self, label: str) -> str:
        return f"I_{label}={_render_levels(self.input_levels)} O_{label}={_render_levels(self.output_levels)}"


LevelProfile = Tuple[Tuple[Characteristic, ...], ...]


def _render_levels(levels: Tuple[int, ...]) -> str:
    return "(" + ",".join(str(k) for k in levels) + ")"


@dataclass(frozen=True)
class LevelDecomposition:
    root: int
    levels: Tuple[FrozenSet[int], ...]

    @cached_property
    def level_of(self) -> Dict[int, int]:
        return {v: k for k, members in enumerate(self.levels) for v in members}

    @property
    def depth(self) -> int:
        return len(self.levels)

    @property
    def vertex_count(self) -> int:
        return sum(len(members) for members in self.levels)


@dataclass(frozen=True)
class AuxiliaryDigraph:
    decomposition: LevelDecomposition
    arcs: FrozenSet[Arc]
    characteristics: Mapping[int, Characteristic] = field(compare=False)

    @property
    def root(self) -> int:
        return self.decomposition.root

    def level(self, v: int) -> int:
        return self.decomposition.level_of[v]

    @cached_property
    def profile(self) -> LevelProfile:
        return level_profile(self)


def compute_levels(graph: Graph, root: int) -> LevelDecomposition:
    """Shortest-path distance classes from root"""
    if not graph.has_vertex(root):
        raise GraphError(f"Unknown root vertex: {root}")
    distance = reachable_from(graph, root)
    if len(distance) != graph.order:
        missing = sorted(graph.vertex_ids - set(distance))
        raise DisconnectedGraphError(
            f"Vertices {missing} are unreachable from root {root}"
        )
    buckets: List[Set[int]] = [set() for _ in range(max(distance.values()) + 1)]
    for v, k in distance.items():
        buckets[k].add(v)
    return LevelDecomposition(root=root, levels=tuple(frozenset(b) for b in buckets))


def build_auxiliary_digraph(graph: Graph, root: int) -> AuxiliaryDigraph:
    """Layered digraph spawned by root, with characteristics populated"""
    decomposition = compute_levels(graph, root)
    level_of = decomposition.level_of
    arcs: Set[Arc] = set()
    for v, u in graph.edges():
        lv, lu = level_of[v], level_of[u]
        if lv == lu:
            arcs.add((v, u))
            arcs.add((u, v))
        elif lv < lu:
            arcs.add((v, u))
        else:
            arcs.add((u, v))
    frozen_arcs = frozenset(arcs)
    return AuxiliaryDigraph(
        decomposition=decomposition,
        arcs=frozen_arcs,
        characteristics=_characteristics(level_of, frozen_arcs),
    )


def _characteristics(level_of: Mapping[int, int], arcs: Iterable[Arc]) -> Dict[int, Characteristic]:
    incoming: Dict[int, List[int]] = {v: [] for v in level_of}
    outgoing: Dict[int, List[int]] = {v: [] for v in level_of}
    for source, target in arcs:
        incoming[target].append(level_of[source])
        outgoing[source].append(level_of[target])
    return {
        v: Characteristic(tuple(sorted(incoming[v])), tuple(sorted(outgoing[v])))
        for v in level_of
    }


def vertex_characteristics(digraph: AuxiliaryDigraph) -> Dict[int, Characteristic]:
    """Recompute every vertex's (I, O) pair from the digraph's arcs"""
    return _characteristics(digraph.decomposition.level_of, digraph.arcs)


def level_profile(digraph: AuxiliaryDigraph) -> LevelProfile:
    """Per level, the sorted multiset of characteristics held there"""
    chars = digraph.characteristics
    return tuple(
        tuple(sorted(chars[v] for v in members))
        for members in digraph.decomposition.levels
    )


def digraph_signature(digraph: AuxiliaryDigraph) -> int:
    """Hash of the level profile; positionally equivalent digraphs share it"""
    return hash(digraph.profile)


def positional_equivalence(first: AuxiliaryDigraph, second: AuxiliaryDigraph) -> bool:
    """Same level count and equal characteristic multisets on every level"""
    if first.decomposition.depth != second.decomposition.depth:
        return False
    if any(len(a) != len(b) for a, b in zip(first.decomposition.levels, second.decomposition.levels)):
        return False
    return first.profile == second.profile


def unique_vertices(digraph: AuxiliaryDigraph) -> FrozenSet[int]:
    """Vertices whose characteristic occurs exactly once in the digraph"""
    tally = Counter(digraph.characteristics.values())
    return frozenset(v for v, c in digraph.characteristics.items() if tally[c] == 1)
