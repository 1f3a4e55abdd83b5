"""
Seeded random graph generators

Every generator takes an unsigned 64-bit seed and draws from numpy's PCG64
bit generator, so a seed reproduces the same graphs on every platform.
Sub-streams (per trial, per retry) are derived through SeedSequence.
"""
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

import numpy as np

from ..graph_core import Graph, GraphError, Permutation, apply_permutation, build_graph, is_connected

logger = logging.getLogger(__name__)

SEED_LIMIT = 2 ** 64

PROVENANCE_PERMUTED = "permuted"
PROVENANCE_INDEPENDENT = "independent-gnp"


@dataclass(frozen=True)
class GraphPair:
    left: Graph
    right: Graph
    provenance: str
    permutation: Optional[Permutation] = None


def _check_seed(seed: int) -> int:
    seed = int(seed)
    if not 0 <= seed < SEED_LIMIT:
        raise ValueError(f"Seed must be an unsigned 64-bit integer, got {seed}")
    return seed


def make_rng(seed: int, *stream: int) -> np.random.Generator:
    entropy = [_check_seed(seed), *(int(s) for s in stream)]
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy)))


def derive_seed(seed: int, *stream: int) -> int:
    """Child seed for an independent sub-stream of seed"""
    entropy = [_check_seed(seed), *(int(s) for s in stream)]
    return int(np.random.SeedSequence(entropy).generate_state(1, dtype=np.uint64)[0])


def gen_gnp(n: int, p: float, seed: int) -> Graph:
    """G(n, p): each vertex pair joined independently with probability p"""
    if n < 1:
        raise ValueError(f"Vertex count must be at least 1, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"Edge probability must lie in [0, 1], got {p}")
    pairs = list(combinations(range(n), 2))
    draws = make_rng(seed).random(len(pairs))
    return build_graph(n, [pair for pair, draw in zip(pairs, draws) if draw < p])


def gen_connected_gnp(n: int, p: float, seed: int, retries: int = 1000) -> Graph:
    """Rejection-sample G(n, p) until the draw is connected"""
    for attempt in range(retries):
        graph = gen_gnp(n, p, derive_seed(seed, attempt))
        if is_connected(graph):
            if attempt:
                logger.debug(f"Connected G({n}, {p}) after {attempt + 1} draws")
            return graph
    raise GraphError(f"No connected G({n}, {p}) within {retries} draws from seed {seed}")


def random_permutation(vertex_ids: Iterable[int], seed: int) -> Permutation:
    ids = sorted(vertex_ids)
    order = make_rng(seed).permutation(len(ids))
    return Permutation({v: ids[int(i)] for v, i in zip(ids, order)})


def gen_permuted_pair(graph: Graph, seed: int) -> GraphPair:
    """Pair a graph with a randomly relabeled copy; the permutation is kept"""
    if graph.is_empty():
        raise GraphError("Cannot permute the empty graph")
    permutation = random_permutation(graph.vertex_ids, seed)
    return GraphPair(graph, apply_permutation(graph, permutation), PROVENANCE_PERMUTED, permutation)


def gen_independent_pair(n: int, p: float, seed: int, retries: int = 1000) -> GraphPair:
    left = gen_connected_gnp(n, p, derive_seed(seed, 0), retries)
    right = gen_connected_gnp(n, p, derive_seed(seed, 1), retries)
    return GraphPair(left, right, PROVENANCE_INDEPENDENT)
