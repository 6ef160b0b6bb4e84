import pytest
from hypothesis import given

from conftest import graphs
from domval.generators import (
    FamilySpec,
    FamilySpecError,
    complete_graph,
    complete_multipartite_graph,
    cycle_graph,
    generate,
    matching_graph,
    path_graph,
    petersen_graph,
)
from domval.graph import (
    MAX_VERTICES,
    Graph,
    GraphError,
    GraphFormatError,
    GraphSizeError,
    closed_neighborhood,
    complement,
    disjoint_union,
    is_dominating,
    iter_labels,
    mask_of,
    parse_graph,
    render,
)


def lab(*vs):
    return mask_of(v - 1 for v in vs)


def edge_labels(g):
    return {(u + 1, v + 1) for u, v in g.edges()}


class TestParse:
    def test_k2(self):
        g = parse_graph("p 2\ne 1 2")
        assert g.n == 2 and g.num_edges == 1

    def test_p3_degrees(self):
        g = parse_graph("p 3\ne 1 2\ne 2 3")
        assert g.degrees() == [1, 2, 1]

    def test_comments_crlf_and_whitespace(self):
        g = parse_graph("# a path\r\n\r\np   3\r\ne 1\t2\r\n  e 2 3\r\n")
        assert edge_labels(g) == {(1, 2), (2, 3)}

    def test_isolated_vertices_allowed(self):
        g = parse_graph("p 4\ne 1 2\n")
        assert g.degrees() == [1, 1, 0, 0]

    @pytest.mark.parametrize(
        "text, line, fragment",
        [
            ("p 2\ne 1 1", 2, "self-loop"),
            ("p 3\ne 1 2\ne 2 1", 3, "duplicate"),
            ("p 3\ne 1 4", 2, "out of range"),
            ("p 3\ne 0 1", 2, "out of range"),
            ("p 3\ne 1", 2, "expected 'e <u> <v>'"),
            ("p 3\ne 1 x", 2, "integer"),
            ("p 3\nq 1 2", 2, "unknown line"),
            ("e 1 2\np 3", 1, "before"),
            ("p 3\np 3", 2, "repeated"),
        ],
    )
    def test_rejects_with_line_number(self, text, line, fragment):
        with pytest.raises(GraphFormatError) as err:
            parse_graph(text)
        assert err.value.line == line
        assert fragment in str(err.value)

    def test_missing_header(self):
        with pytest.raises(GraphFormatError):
            parse_graph("# nothing\n")

    def test_size_bound(self):
        parse_graph(f"p {MAX_VERTICES}")
        with pytest.raises(GraphSizeError):
            parse_graph(f"p {MAX_VERTICES + 1}")


class TestGenerate:
    def test_path5(self):
        assert edge_labels(path_graph(5)) == {(1, 2), (2, 3), (3, 4), (4, 5)}

    def test_cycle_closes(self):
        assert (1, 6) in edge_labels(cycle_graph(6))
        assert cycle_graph(6).num_edges == 6

    def test_petersen(self):
        g = petersen_graph()
        assert g.n == 10 and g.num_edges == 15
        assert set(g.degrees()) == {3}
        assert is_dominating(g, lab(1, 3, 7))

    def test_petersen_girth_five(self):
        g = petersen_graph()
        # no triangles and no 4-cycles: adjacent vertices share no neighbor,
        # non-adjacent vertices share exactly one
        for u in range(10):
            for v in range(u + 1, 10):
                common = bin(g.adj[u] & g.adj[v]).count("1")
                assert common == (0 if g.has_edge(u, v) else 1)

    def test_star(self):
        g = complete_multipartite_graph([1, 2])
        assert edge_labels(g) == {(1, 2), (1, 3)}

    def test_multipartite_parts_in_order(self):
        g = complete_multipartite_graph([2, 3])
        assert not g.has_edge(0, 1)
        assert g.has_edge(1, 2)
        assert not g.has_edge(2, 4)

    def test_matching(self):
        assert edge_labels(matching_graph(3)) == {(1, 2), (3, 4), (5, 6)}

    @pytest.mark.parametrize(
        "text",
        ["path:1", "cycle:2", "complete:0", "matching:0", "multipartite:3",
         "multipartite:2,0", "petersen:3", "wheel:5", "path:", "path:x", "path:3,4"],
    )
    def test_invalid_specs(self, text):
        with pytest.raises(FamilySpecError):
            FamilySpec.parse(text)

    def test_spec_roundtrip(self):
        for text in ["path:7", "cycle:10", "multipartite:2,3,4", "petersen", "matching:3", "complete:5"]:
            assert str(FamilySpec.parse(text)) == text

    def test_oversized_family_refused(self):
        with pytest.raises(GraphSizeError):
            FamilySpec.path(MAX_VERTICES + 1)

    @pytest.mark.parametrize(
        "spec", ["path:9", "cycle:9", "multipartite:2,3,4", "petersen", "matching:4", "complete:6"]
    )
    def test_degree_sum(self, spec):
        g = generate(FamilySpec.parse(spec))
        assert sum(g.degrees()) == 2 * g.num_edges


class TestOperations:
    def test_complement_of_matching_is_c4(self):
        g = complement(matching_graph(2))
        # 4-cycle 1-3-2-4-1
        assert edge_labels(g) == {(1, 3), (2, 3), (2, 4), (1, 4)}

    def test_complement_of_complete(self):
        assert complement(complete_graph(3)) == Graph.empty(3)

    def test_disjoint_union_of_k2(self):
        k2 = complete_graph(2)
        assert disjoint_union(k2, k2) == matching_graph(2)

    def test_disjoint_union_identity(self):
        g = petersen_graph()
        assert disjoint_union(g, Graph.empty(0)) == g

    def test_closed_neighborhood(self):
        assert set(iter_labels(closed_neighborhood(cycle_graph(5), 0))) == {5, 1, 2}
        assert set(iter_labels(closed_neighborhood(petersen_graph(), 0))) == {1, 2, 5, 6}
        assert set(iter_labels(closed_neighborhood(complete_graph(1), 0))) == {1}
        with pytest.raises(GraphError):
            closed_neighborhood(cycle_graph(5), 5)

    def test_is_dominating(self):
        assert is_dominating(petersen_graph(), lab(1, 3, 7))
        for v in range(1, 6):
            assert is_dominating(complete_graph(5), lab(v))
        assert not is_dominating(path_graph(5), lab(2))

    def test_relabel_rejects_non_permutation(self):
        with pytest.raises(GraphError):
            path_graph(3).relabel([0, 0, 1])

    def test_graph_is_immutable(self):
        g = path_graph(3)
        with pytest.raises(AttributeError):
            g.n = 4

    def test_raw_constructor_validates(self):
        with pytest.raises(GraphError):
            Graph(2, (0b10, 0))
        with pytest.raises(GraphError):
            Graph(2, (0b01, 0b00))


@given(graphs(min_n=0, max_n=10))
def test_complement_involution_and_degrees(g):
    c = complement(g)
    assert complement(c) == g
    assert c.n == g.n
    for v in range(g.n):
        assert g.degree(v) + c.degree(v) == g.n - 1


@given(graphs(min_n=1))
def test_whole_vertex_set_dominates(g):
    assert is_dominating(g, g.full_mask)


@given(graphs(min_n=0))
def test_render_parse_roundtrip(g):
    assert parse_graph(render(g, comment="roundtrip")) == g


@given(graphs(min_n=0, max_n=6), graphs(min_n=0, max_n=6))
def test_disjoint_union_counts(g1, g2):
    u = disjoint_union(g1, g2)
    assert u.n == g1.n + g2.n
    assert u.num_edges == g1.num_edges + g2.num_edges
