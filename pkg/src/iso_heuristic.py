"""
Positional isomorphism heuristic

Repeatedly pick a pivot in the first graph, look for a vertex of the second
graph whose auxiliary digraph is positionally equivalent to the pivot's,
remove both and continue until the graphs are exhausted. The verdict is a
claim, not a proof: the removed pairs need not form an isomorphism.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, List, Optional, Tuple

from .graph_core import (
    Graph,
    GraphError,
    Permutation,
    degree_vector,
    is_connected,
    remove_vertex,
    require_connected,
)
from .positioning import build_auxiliary_digraph, digraph_signature, positional_equivalence

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


class IncompleteTraceError(ValueError):
    """A candidate mapping was requested from a trace that stopped early"""


class MappingError(ValueError):
    """A vertex correspondence is not a bijection between the two graphs"""


class Outcome(str, Enum):
    HEURISTIC_ISOMORPHIC = "HEURISTIC_ISOMORPHIC"
    HEURISTIC_NOT_ISOMORPHIC = "HEURISTIC_NOT_ISOMORPHIC"


class FailureKind(str, Enum):
    PRECHECK = "precheck"
    UNMATCHED = "unmatched"
    DISCONNECTED_INTERMEDIATE = "disconnected-intermediate"


@dataclass(frozen=True)
class FailureStage:
    kind: FailureKind
    round: Optional[int] = None
    pivot: Optional[int] = None
    graph: Optional[str] = None

    def describe(self) -> str:
        if self.kind is FailureKind.PRECHECK:
            return "precheck"
        if self.kind is FailureKind.UNMATCHED:
            return f"round {self.round}: unmatched {self.pivot}"
        return f"round {self.round}: disconnected-intermediate {self.graph}"


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    failure_stage: Optional[FailureStage] = None

    def __post_init__(self):
        rejected = self.outcome is Outcome.HEURISTIC_NOT_ISOMORPHIC
        if rejected != (self.failure_stage is not None):
            raise ValueError("failure_stage must be set exactly when the outcome is a rejection")

    @property
    def is_isomorphic(self) -> bool:
        return self.outcome is Outcome.HEURISTIC_ISOMORPHIC

    def describe(self) -> str:
        if self.failure_stage is None:
            return self.outcome.value
        return f"{self.outcome.value} ({self.failure_stage.describe()})"


@dataclass(frozen=True)
class RemovalTrace:
    rounds: Tuple[Pair, ...]
    vertex_count: int

    @property
    def is_complete(self) -> bool:
        return len(self.rounds) == self.vertex_count


@dataclass(frozen=True)
class CandidateMapping:
    pairs: Dict[int, int]

    def __call__(self, v: int) -> int:
        return self.pairs[v]

    def as_permutation(self) -> Permutation:
        return Permutation(self.pairs)


@dataclass(frozen=True)
class PairCheck:
    """Heuristic outcome for one pair plus the verified candidate mapping"""
    verdict: Verdict
    trace: RemovalTrace
    mapping: Optional[CandidateMapping] = None
    mapping_verified: Optional[bool] = None


def _require_input(graph: Graph, name: str) -> None:
    if graph.is_empty():
        raise GraphError(f"Graph {name} is empty")
    require_connected(graph, name)


def precheck(g: Graph, h: Graph) -> bool:
    """Equal vertex counts, edge counts and degree vectors"""
    _require_input(g, "G")
    _require_input(h, "H")
    return (
        g.order == h.order
        and g.edge_count == h.edge_count
        and degree_vector(g) == degree_vector(h)
    )


def find_positional_match(q: Graph, s: Graph, pivot: int) -> Optional[int]:
    """First vertex of s, by ascending id, whose digraph matches the pivot's

    Candidates are filtered by degree and by signature; a survivor is
    confirmed with the full level-by-level comparison.
    """
    pivot_digraph = build_auxiliary_digraph(q, pivot)
    pivot_degree = q.degree(pivot)
    pivot_signature = digraph_signature(pivot_digraph)
    for candidate in s.sorted_vertices():
        # the root's output vector has one entry per neighbor
        if s.degree(candidate) != pivot_degree:
            continue
        candidate_digraph = build_auxiliary_digraph(s, candidate)
        if digraph_signature(candidate_digraph) != pivot_signature:
            continue
        if positional_equivalence(pivot_digraph, candidate_digraph):
            return candidate
    return None


def decide_isomorphism(g: Graph, h: Graph) -> Tuple[Verdict, RemovalTrace]:
    """Run the removal loop on two connected graphs"""
    if not precheck(g, h):
        logger.debug("Precheck failed: sizes or degree vectors differ")
        return (
            Verdict(Outcome.HEURISTIC_NOT_ISOMORPHIC, FailureStage(FailureKind.PRECHECK)),
            RemovalTrace((), g.order),
        )

    q, s = g, h
    rounds: List[Pair] = []
    round_no = 0
    while not q.is_empty():
        round_no += 1
        for graph, name in ((q, "G"), (s, "H")):
            if not is_connected(graph):
                logger.debug(f"Round {round_no}: intermediate graph {name} is disconnected")
                stage = FailureStage(FailureKind.DISCONNECTED_INTERMEDIATE, round=round_no, graph=name)
                return Verdict(Outcome.HEURISTIC_NOT_ISOMORPHIC, stage), RemovalTrace(tuple(rounds), g.order)

        pivot = min(q.vertex_ids)
        match = find_positional_match(q, s, pivot)
        if match is None:
            logger.debug(f"Round {round_no}: no positional match for pivot {pivot}")
            stage = FailureStage(FailureKind.UNMATCHED, round=round_no, pivot=pivot)
            return Verdict(Outcome.HEURISTIC_NOT_ISOMORPHIC, stage), RemovalTrace(tuple(rounds), g.order)

        logger.debug(f"Round {round_no}: pivot {pivot} matched {match}")
        rounds.append((pivot, match))
        q = remove_vertex(q, pivot)
        s = remove_vertex(s, match)

    return Verdict(Outcome.HEURISTIC_ISOMORPHIC), RemovalTrace(tuple(rounds), g.order)


def replay_rounds(g: Graph, h: Graph, trace: RemovalTrace) -> Iterator[Tuple[int, Graph, Graph, Pair]]:
    """Yield (round, Q, S, pair) with Q and S the graphs before that round's removal"""
    q, s = g, h
    for round_no, (v, u) in enumerate(trace.rounds, start=1):
        yield round_no, q, s, (v, u)
        q = remove_vertex(q, v)
        s = remove_vertex(s, u)


def surviving_graphs(g: Graph, h: Graph, trace: RemovalTrace) -> Tuple[Graph, Graph]:
    """G and H with every traced pair removed"""
    q, s = g, h
    for v, u in trace.rounds:
        q = remove_vertex(q, v)
        s = remove_vertex(s, u)
    return q, s


def extract_candidate_mapping(trace: RemovalTrace) -> CandidateMapping:
    if not trace.is_complete:
        raise IncompleteTraceError(
            f"Trace has {len(trace.rounds)} of {trace.vertex_count} rounds"
        )
    return CandidateMapping(dict(trace.rounds))


def verify_mapping(g: Graph, h: Graph, mapping: CandidateMapping) -> bool:
    """True iff the mapping carries every edge of g onto an edge of h"""
    pairs = mapping.pairs
    if g.order != h.order:
        raise MappingError(f"Vertex counts differ: {g.order} vs {h.order}")
    if set(pairs) != g.vertex_ids:
        raise MappingError("Mapping is not total on the vertices of G")
    if len(set(pairs.values())) != len(pairs) or not set(pairs.values()) <= h.vertex_ids:
        raise MappingError("Mapping is not injective into the vertices of H")
    if g.edge_count != h.edge_count:
        return False
    return all(h.has_edge(pairs[v], pairs[u]) for v, u in g.edges())


def check_pair(g: Graph, h: Graph) -> PairCheck:
    verdict, trace = decide_isomorphism(g, h)
    if not trace.is_complete:
        return PairCheck(verdict, trace)
    mapping = extract_candidate_mapping(trace)
    return PairCheck(verdict, trace, mapping, verify_mapping(g, h, mapping))
