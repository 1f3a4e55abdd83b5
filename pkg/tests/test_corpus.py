import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.corpus import (
    GraphFormatError,
    derive_seed,
    emit_edge_list,
    emit_graph6,
    export_fixtures,
    from_networkx,
    gen_connected_gnp,
    gen_gnp,
    gen_independent_pair,
    gen_permuted_pair,
    list_named_graphs,
    load_graph,
    named_graph,
    parse_edge_list,
    parse_graph,
    parse_graph6,
    random_permutation,
    resolve_format,
    save_graph,
    to_networkx,
)
from src.graph_core import GraphError, apply_permutation, build_graph, degree_vector, empty_graph, is_connected, remove_vertex


class TestGraph6:
    def test_known_encodings(self, k3, appendix_g):
        assert emit_graph6(k3) == "Bw"
        assert emit_graph6(build_graph(1, [])) == "@"
        assert emit_graph6(empty_graph()) == "?"
        assert emit_graph6(appendix_g) == "EznW"

    def test_parse_known_encodings(self, k3, appendix_g):
        assert parse_graph6("Bw") == k3
        assert parse_graph6("EznW") == appendix_g
        assert parse_graph6(">>graph6<<Bw\n") == k3
        assert parse_graph6("@").order == 1

    def test_sparse_ids_are_compacted(self, k3):
        assert emit_graph6(remove_vertex(k3, 0)) == "A_"

    def test_long_form(self):
        path = named_graph("path_63")
        encoded = emit_graph6(path)
        assert encoded.startswith("~??~")
        assert parse_graph6(encoded) == path

    @pytest.mark.parametrize("text", [
        "",
        "Bx",
        "B",
        "Bww",
        "B\x7f",
        "~?",
        "~??}" + "?" * 315,
        "~~??????",
        "B>",
        "~??Bw",
        "~???",
    ])
    def test_malformed_input(self, text):
        with pytest.raises(GraphFormatError):
            parse_graph6(text)

    def test_matches_networkx_codec(self):
        for seed in range(200):
            graph = gen_gnp(1 + seed % 20, 0.4, seed)
            ours = emit_graph6(graph)
            theirs = nx.to_graph6_bytes(to_networkx(graph), header=False).decode("ascii").strip()
            assert ours == theirs
            parsed = nx.from_graph6_bytes(ours.encode("ascii"))
            assert sorted(tuple(sorted(e)) for e in parsed.edges()) == graph.edges()

    def test_file_holds_exactly_one_graph(self, k3):
        assert parse_graph("\nBw\n\n", "g6") == k3
        with pytest.raises(GraphFormatError, match="one graph6 line"):
            parse_graph("Bw\nBw\n", "g6")

    def test_networkx_conversion(self, k3):
        assert from_networkx(to_networkx(remove_vertex(k3, 0))) == parse_graph6("A_")
        with pytest.raises(GraphFormatError):
            from_networkx(nx.path_graph([1, 2, 3]))


class TestEdgeList:
    def test_emit_triangle(self, k3):
        assert emit_edge_list(k3) == "3 3\n0 1\n0 2\n1 2\n"

    def test_parse_ignores_blank_lines(self, k3):
        assert parse_edge_list("3 3\n\n0 1\n1 2\n 2 0 \n") == k3

    def test_isolated_vertices_survive(self):
        graph = parse_edge_list("4 1\n0 1\n")
        assert graph.order == 4
        assert graph.edge_count == 1

    @pytest.mark.parametrize("text", [
        "",
        "3\n",
        "3 2\n0 1\n",
        "3 1\n0 x\n",
        "3 1\n0 1 2\n",
        "-1 0\n",
    ])
    def test_malformed_input(self, text):
        with pytest.raises(GraphFormatError):
            parse_edge_list(text)

    def test_bad_edges_are_graph_errors(self):
        with pytest.raises(GraphError):
            parse_edge_list("2 1\n0 0\n")
        with pytest.raises(GraphError):
            parse_edge_list("2 1\n0 5\n")


def test_codecs_reproduce_seeded_corpus():
    for seed in range(1000):
        graph = gen_gnp(1 + seed % 30, 0.3, seed)
        assert parse_graph6(emit_graph6(graph)) == graph
        assert parse_edge_list(emit_edge_list(graph)) == graph


def test_save_and_load_by_suffix(tmp_path, appendix_g):
    for name in ("g.g6", "g.graph6", "g.edges", "g.txt"):
        path = save_graph(appendix_g, tmp_path / name)
        assert load_graph(path) == appendix_g


def test_resolve_format():
    assert resolve_format("graph.g6") == "g6"
    assert resolve_format("graph.dat", "edges") == "edges"
    with pytest.raises(GraphFormatError):
        resolve_format("graph.dat")
    with pytest.raises(GraphFormatError):
        resolve_format("graph.g6", "dot")


class TestGenerators:
    def test_gnp_is_deterministic(self):
        assert gen_gnp(12, 0.5, 99) == gen_gnp(12, 0.5, 99)
        assert gen_gnp(12, 0.5, 99) != gen_gnp(12, 0.5, 100)

    def test_gnp_extremes(self):
        assert gen_gnp(6, 0.0, 1).edge_count == 0
        assert gen_gnp(6, 1.0, 1).edge_count == 15

    @pytest.mark.parametrize("n,p", [(0, 0.5), (3, -0.1), (3, 1.5)])
    def test_gnp_rejects_bad_parameters(self, n, p):
        with pytest.raises(ValueError):
            gen_gnp(n, p, 0)

    @pytest.mark.parametrize("seed", [-1, 2 ** 64])
    def test_seed_must_fit_in_64_bits(self, seed):
        with pytest.raises(ValueError):
            gen_gnp(3, 0.5, seed)

    def test_derive_seed_separates_streams(self):
        assert derive_seed(5, 1) == derive_seed(5, 1)
        assert derive_seed(5, 1) != derive_seed(5, 2)
        assert 0 <= derive_seed(5, 1) < 2 ** 64

    def test_connected_gnp_gives_up(self):
        with pytest.raises(GraphError):
            gen_connected_gnp(3, 0.0, 0, retries=5)

    @settings(max_examples=100, deadline=None)
    @given(st.integers(1, 20), st.sampled_from([0.2, 0.5, 0.9]), st.integers(0, 2 ** 64 - 1))
    def test_connected_gnp_is_connected(self, n, p, seed):
        graph = gen_connected_gnp(n, p, seed)
        assert graph.order == n
        assert is_connected(graph)

    @settings(max_examples=100, deadline=None)
    @given(st.integers(1, 20), st.integers(0, 2 ** 64 - 1))
    def test_random_permutation_is_a_bijection(self, n, seed):
        perm = random_permutation(range(n), seed)
        assert perm.domain == perm.codomain == frozenset(range(n))
        assert random_permutation(range(n), seed) == perm

    def test_permuted_pair_keeps_its_permutation(self):
        base = gen_connected_gnp(9, 0.4, 3)
        pair = gen_permuted_pair(base, 4)
        assert pair.provenance == "permuted"
        assert apply_permutation(pair.left, pair.permutation) == pair.right

    def test_independent_pair_sides_differ(self):
        pair = gen_independent_pair(10, 0.5, 8)
        assert pair.provenance == "independent-gnp"
        assert pair.permutation is None
        assert pair.left != pair.right
        assert is_connected(pair.left) and is_connected(pair.right)


class TestNamedGraphs:
    def test_petersen(self):
        graph = named_graph("petersen")
        assert graph.order == 10
        assert graph.edge_count == 15
        assert set(degree_vector(graph)) == {3}

    @pytest.mark.parametrize("name,order,edges", [
        ("path_5", 5, 4),
        ("cycle_6", 6, 6),
        ("complete_5", 5, 10),
        ("star_6", 6, 5),
        ("wheel_7", 7, 12),
        ("rook_4x4", 16, 48),
        ("shrikhande", 16, 48),
        ("appendix_H", 6, 12),
    ])
    def test_sizes(self, name, order, edges):
        graph = named_graph(name)
        assert (graph.order, graph.edge_count) == (order, edges)
        assert is_connected(graph)

    @pytest.mark.parametrize("name", ["cycle_2", "wheel_3", "path_0", "petersen_3", "hypercube_3", "nope"])
    def test_unknown_or_invalid(self, name):
        with pytest.raises(GraphFormatError):
            named_graph(name)

    def test_listing(self):
        names = list_named_graphs()
        assert {"petersen", "appendix_G", "appendix_H", "rook_4x4", "shrikhande"} <= set(names)
        assert {"path_n", "cycle_n", "complete_n", "star_n", "wheel_n"} <= set(names)

    def test_export_fixtures(self, tmp_path):
        written = export_fixtures(tmp_path / "fixtures")
        assert sorted(p.name for p in written) == sorted(
            f"{name}.g6" for name in list_named_graphs() if not name.endswith("_n")
        )
        assert load_graph(tmp_path / "fixtures" / "petersen.g6") == named_graph("petersen")
