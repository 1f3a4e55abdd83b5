import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import connected_corpus, connected_graphs
from src.corpus import gen_permuted_pair, named_graph
from src.exact_oracle import exact_isomorphism
from src.graph_core import DisconnectedGraphError, GraphError, build_graph, empty_graph
from src.iso_heuristic import (
    CandidateMapping,
    FailureKind,
    FailureStage,
    IncompleteTraceError,
    MappingError,
    Outcome,
    RemovalTrace,
    Verdict,
    check_pair,
    decide_isomorphism,
    extract_candidate_mapping,
    find_positional_match,
    precheck,
    replay_rounds,
    verify_mapping,
)
from src.positioning import build_auxiliary_digraph, positional_equivalence

PRISM = build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
K33 = build_graph(6, [(a, b) for a in range(3) for b in range(3, 6)])


def test_appendix_trace_pairs_in_order(appendix_g, appendix_h):
    verdict, trace = decide_isomorphism(appendix_g, appendix_h)
    assert verdict == Verdict(Outcome.HEURISTIC_ISOMORPHIC)
    assert trace.rounds == tuple((i, i) for i in range(6))
    assert trace.is_complete


def test_appendix_candidate_mapping_is_not_an_isomorphism(appendix_g, appendix_h):
    result = check_pair(appendix_g, appendix_h)
    assert result.verdict.is_isomorphic
    assert result.mapping.pairs == {i: i for i in range(6)}
    # v1-v5 is an edge of G but u1-u5 is not an edge of H
    assert appendix_g.has_edge(0, 4) and not appendix_h.has_edge(0, 4)
    assert result.mapping_verified is False
    assert exact_isomorphism(appendix_g, appendix_h).isomorphic


def test_precheck_rejects_different_edge_counts(k3, p3):
    verdict, trace = decide_isomorphism(k3, p3)
    assert verdict.failure_stage == FailureStage(FailureKind.PRECHECK)
    assert verdict.describe() == "HEURISTIC_NOT_ISOMORPHIC (precheck)"
    assert trace.rounds == ()


def test_precheck_rejects_different_degree_vectors():
    path, star = named_graph("path_4"), named_graph("star_4")
    assert path.edge_count == star.edge_count
    assert not precheck(path, star)
    verdict, _ = decide_isomorphism(path, star)
    assert verdict.failure_stage.kind is FailureKind.PRECHECK


def test_precheck_rejects_different_orders(k3):
    verdict, _ = decide_isomorphism(k3, named_graph("path_4"))
    assert verdict.failure_stage.kind is FailureKind.PRECHECK


def test_prism_against_k33_is_unmatched_in_round_one():
    verdict, trace = decide_isomorphism(PRISM, K33)
    assert verdict.failure_stage == FailureStage(FailureKind.UNMATCHED, round=1, pivot=0)
    assert verdict.describe() == "HEURISTIC_NOT_ISOMORPHIC (round 1: unmatched 0)"
    assert trace.rounds == ()
    assert not exact_isomorphism(PRISM, K33).isomorphic


def test_star_with_itself_hits_disconnected_intermediate():
    star = named_graph("star_4")
    verdict, trace = decide_isomorphism(star, star)
    assert verdict.failure_stage == FailureStage(FailureKind.DISCONNECTED_INTERMEDIATE, round=2, graph="G")
    assert verdict.describe() == "HEURISTIC_NOT_ISOMORPHIC (round 2: disconnected-intermediate G)"
    assert trace.rounds == ((0, 0),)
    assert not trace.is_complete


def test_single_vertex_graphs():
    single = build_graph(1, [])
    result = check_pair(single, single)
    assert result.verdict.is_isomorphic
    assert result.trace.rounds == ((0, 0),)
    assert result.mapping_verified


@pytest.mark.parametrize("name", ["path_5", "complete_5", "cycle_3", "appendix_G"])
def test_graph_against_itself(name):
    graph = named_graph(name)
    result = check_pair(graph, graph)
    assert result.verdict.is_isomorphic
    assert result.mapping_verified


def test_disconnected_input_is_an_error(k3):
    with pytest.raises(DisconnectedGraphError):
        decide_isomorphism(build_graph(3, [(0, 1)]), k3)


def test_empty_input_is_an_error(k3):
    with pytest.raises(GraphError):
        decide_isomorphism(empty_graph(), k3)


def test_find_positional_match_returns_lowest_candidate(p3, appendix_g, appendix_h):
    assert find_positional_match(appendix_g, appendix_h, 0) == 0
    assert find_positional_match(p3, p3, 0) == 0
    assert find_positional_match(p3, p3, 2) == 0
    assert find_positional_match(p3, p3, 1) == 1


def test_find_positional_match_can_fail():
    assert find_positional_match(PRISM, K33, 0) is None


def _first_equivalent(q, s, pivot):
    pivot_digraph = build_auxiliary_digraph(q, pivot)
    for candidate in s.sorted_vertices():
        if positional_equivalence(pivot_digraph, build_auxiliary_digraph(s, candidate)):
            return candidate
    return None


def test_find_positional_match_agrees_with_plain_scan():
    corpus = list(connected_corpus(120, seed=13))
    for q, s in zip(corpus, corpus[1:]):
        for pivot in q.sorted_vertices():
            assert find_positional_match(q, s, pivot) == _first_equivalent(q, s, pivot)
            assert find_positional_match(q, q, pivot) == _first_equivalent(q, q, pivot)


def test_verdict_requires_stage_exactly_on_rejection():
    with pytest.raises(ValueError):
        Verdict(Outcome.HEURISTIC_ISOMORPHIC, FailureStage(FailureKind.PRECHECK))
    with pytest.raises(ValueError):
        Verdict(Outcome.HEURISTIC_NOT_ISOMORPHIC)


def test_incomplete_trace_has_no_mapping():
    with pytest.raises(IncompleteTraceError):
        extract_candidate_mapping(RemovalTrace(((0, 0),), vertex_count=4))


def test_check_pair_leaves_mapping_empty_on_rejection(k3, p3):
    result = check_pair(k3, p3)
    assert result.mapping is None
    assert result.mapping_verified is None


def test_verify_mapping_rejects_non_bijection(k3):
    with pytest.raises(MappingError):
        verify_mapping(k3, k3, CandidateMapping({0: 0, 1: 1}))
    with pytest.raises(MappingError):
        verify_mapping(k3, k3, CandidateMapping({0: 0, 1: 0, 2: 2}))


def test_verify_mapping_on_path(p3):
    assert verify_mapping(p3, p3, CandidateMapping({0: 2, 1: 1, 2: 0}))
    assert not verify_mapping(p3, p3, CandidateMapping({0: 1, 1: 0, 2: 2}))


def _assert_trace_is_consistent(g, h):
    verdict, trace = decide_isomorphism(g, h)
    for _, q, s, (v, u) in replay_rounds(g, h, trace):
        assert v == min(q.vertex_ids)
        assert positional_equivalence(build_auxiliary_digraph(q, v), build_auxiliary_digraph(s, u))
    assert trace.is_complete == verdict.is_isomorphic
    return verdict


@settings(max_examples=150, deadline=None)
@given(connected_graphs(), st.integers(0, 2 ** 64 - 1))
def test_relabeled_copy_is_never_rejected_in_round_one(graph, seed):
    pair = gen_permuted_pair(graph, seed)
    verdict = _assert_trace_is_consistent(pair.left, pair.right)
    stage = verdict.failure_stage
    assert stage is None or stage.kind is not FailureKind.PRECHECK
    assert not (stage is not None and stage.kind is FailureKind.UNMATCHED and stage.round == 1)


@settings(max_examples=150, deadline=None)
@given(connected_graphs(min_n=2, max_n=8), connected_graphs(min_n=2, max_n=8))
def test_trace_prefix_is_consistent_for_arbitrary_pairs(g, h):
    _assert_trace_is_consistent(g, h)


def test_verified_mappings_are_sound_on_seeded_corpus():
    graphs = connected_corpus(400, seed=11, min_n=3, max_n=8)
    for i, g in enumerate(graphs):
        for h in (graphs[(i + 6) % len(graphs)], gen_permuted_pair(g, i).right):
            if g.order != h.order:
                continue
            result = check_pair(g, h)
            if result.mapping_verified:
                assert exact_isomorphism(g, h).isomorphic
