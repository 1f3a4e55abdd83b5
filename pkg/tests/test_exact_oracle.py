import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import connected_graphs
from src.corpus import gen_gnp, gen_permuted_pair, make_rng, named_graph
from src.exact_oracle import (
    NOT_ISOMORPHIC,
    OracleError,
    OracleResult,
    exact_isomorphism,
    exhaustive_isomorphism,
)
from src.graph_core import Graph, Permutation, apply_permutation, build_graph, empty_graph, is_connected


def to_networkx(graph: Graph) -> nx.Graph:
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(graph.sorted_vertices())
    nx_graph.add_edges_from(graph.edges())
    return nx_graph


def neighborhood(graph: Graph, v: int) -> Graph:
    members = graph.neighbors(v)
    return Graph({w: graph.neighbors(w) & members for w in members})


def assert_witness(g, h, result):
    assert result.isomorphic
    assert apply_permutation(g, result.witness) == h


def test_triangle_is_isomorphic_to_itself(k3):
    assert_witness(k3, k3, exact_isomorphism(k3, k3))


def test_different_edge_counts(k3, p3):
    assert exact_isomorphism(k3, p3) == NOT_ISOMORPHIC


def test_different_orders_are_an_error(k3):
    with pytest.raises(OracleError):
        exact_isomorphism(k3, named_graph("path_4"))
    with pytest.raises(OracleError):
        exhaustive_isomorphism(k3, named_graph("path_4"))


def test_empty_graphs_are_isomorphic():
    result = exact_isomorphism(empty_graph(), empty_graph())
    assert result.isomorphic
    assert result.witness == Permutation({})


def test_result_requires_witness_exactly_when_isomorphic():
    with pytest.raises(ValueError):
        OracleResult(True)
    with pytest.raises(ValueError):
        OracleResult(False, Permutation({0: 0}))


def test_exhaustive_limit():
    big = named_graph("path_9")
    with pytest.raises(OracleError):
        exhaustive_isomorphism(big, big)
    assert exhaustive_isomorphism(big, big, limit=9).isomorphic


def test_prism_is_not_k33():
    prism = build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
    k33 = build_graph(6, [(a, b) for a in range(3) for b in range(3, 6)])
    assert not exact_isomorphism(prism, k33).isomorphic
    assert not exhaustive_isomorphism(prism, k33).isomorphic


def test_appendix_graphs_are_isomorphic(appendix_g, appendix_h):
    assert_witness(appendix_g, appendix_h, exact_isomorphism(appendix_g, appendix_h))


def test_rook_and_shrikhande_are_not_isomorphic():
    rook, shrikhande = named_graph("rook_4x4"), named_graph("shrikhande")
    assert rook.edge_count == shrikhande.edge_count == 48
    assert {rook.degree(v) for v in rook.vertex_ids} == {shrikhande.degree(v) for v in shrikhande.vertex_ids} == {6}
    # every rook neighborhood is two triangles; every Shrikhande neighborhood is a 6-cycle
    assert not any(is_connected(neighborhood(rook, v)) for v in rook.vertex_ids)
    assert all(is_connected(neighborhood(shrikhande, v)) for v in shrikhande.vertex_ids)
    assert not exact_isomorphism(rook, shrikhande).isomorphic
    assert not nx.is_isomorphic(to_networkx(rook), to_networkx(shrikhande))


def test_petersen_against_relabeled_copy():
    pair = gen_permuted_pair(named_graph("petersen"), seed=42)
    assert_witness(pair.left, pair.right, exact_isomorphism(pair.left, pair.right))


def test_backtracking_matches_enumeration():
    rng = make_rng(7)
    for trial in range(500):
        n = int(rng.integers(1, 8))
        g = gen_gnp(n, 0.5, 2 * trial)
        if trial % 2:
            h = gen_permuted_pair(g, 2 * trial + 1).right
        else:
            h = gen_gnp(n, 0.5, 2 * trial + 1)
        fast, slow = exact_isomorphism(g, h), exhaustive_isomorphism(g, h)
        assert fast.isomorphic == slow.isomorphic
        if fast.isomorphic:
            assert_witness(g, h, fast)


@settings(max_examples=100, deadline=None)
@given(connected_graphs(min_n=1, max_n=9), connected_graphs(min_n=1, max_n=9))
def test_oracle_is_symmetric_and_agrees_with_networkx(g, h):
    if g.order != h.order:
        return
    forward, backward = exact_isomorphism(g, h), exact_isomorphism(h, g)
    assert forward.isomorphic == backward.isomorphic
    assert forward.isomorphic == nx.is_isomorphic(to_networkx(g), to_networkx(h))


@settings(max_examples=100, deadline=None)
@given(connected_graphs(min_n=1, max_n=12), st.integers(0, 2 ** 64 - 1))
def test_relabeled_copies_are_always_found(graph, seed):
    pair = gen_permuted_pair(graph, seed)
    assert_witness(pair.left, pair.right, exact_isomorphism(pair.left, pair.right))
