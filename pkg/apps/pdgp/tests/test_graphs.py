"""Tests for graph construction, operations and the graph text format."""

import itertools

import numpy as np
import pytest

from apps.pdgp.core.errors import (
    BadParameter,
    EmptyInput,
    ParseError,
    SameVertex,
    SelfLoop,
    SizeCapExceeded,
    VertexOutOfRange,
)
from apps.pdgp.services import graphs
from apps.pdgp.services.gf2 import rank
from apps.pdgp.services.graph_io import parse_edge_spec, read_graph_file, read_graph_text, write_graph_text


# ---------------------------------------------------------------------------
# a. Construction
# ---------------------------------------------------------------------------
def test_from_edge_list_builds_path(p3):
    g = graphs.from_edge_list(3, [(0, 1), (1, 2)])
    assert g == p3
    assert g.edges() == [(0, 1), (1, 2)]


def test_duplicate_edges_collapse():
    assert graphs.from_edge_list(2, [(0, 1), (1, 0)]) == graphs.complete_graph(2)


@pytest.mark.parametrize(
    "n, edges, error",
    [
        (1, [(0, 0)], SelfLoop),
        (3, [(0, 3)], VertexOutOfRange),
        (64, [], SizeCapExceeded),
    ],
)
def test_from_edge_list_errors(n, edges, error):
    with pytest.raises(error):
        graphs.from_edge_list(n, edges)


def test_constructors():
    assert graphs.complete_graph(3).edge_count == 3
    k22 = graphs.complete_bipartite(2, 2)
    assert k22.edge_count == 4
    assert rank(k22.matrix) == 2
    assert graphs.cycle(5).edge_count == 5
    assert all(graphs.cycle(5).degree(v) == 2 for v in range(5))
    assert graphs.empty_graph(4).edge_count == 0


@pytest.mark.parametrize(
    "build",
    [
        lambda: graphs.empty_graph(-1),
        lambda: graphs.complete_graph(-1),
        lambda: graphs.complete_bipartite(-1, 2),
        lambda: graphs.complete_bipartite(2, -1),
        lambda: graphs.path(-2),
        lambda: graphs.random_graph(-1, 0.5, seed=0),
        lambda: graphs.random_graph(5, 0.5, seed=-1),
    ],
)
def test_constructors_reject_negative_arguments(build):
    with pytest.raises(BadParameter):
        build()


def test_random_graph_reproducible():
    assert graphs.random_graph(5, 0.5, seed=42) == graphs.random_graph(5, 0.5, seed=42)
    assert graphs.random_graph(6, 0.0, seed=1).edge_count == 0
    assert graphs.random_graph(6, 1.0, seed=1) == graphs.complete_graph(6)


@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (2, 2), (3, 8), (4, 64)])
def test_enumerate_labeled_graphs_counts(n, count):
    found = list(graphs.enumerate_labeled_graphs(n))
    assert len(found) == count
    assert len({g.adj for g in found}) == count, "duplicate graph in enumeration"


def test_enumerate_labeled_graphs_cap(override_env):
    override_env(PDGP_GRAPH_ENUM_CAP=3)
    with pytest.raises(SizeCapExceeded):
        next(graphs.enumerate_labeled_graphs(4))


# ---------------------------------------------------------------------------
# b. Operations
# ---------------------------------------------------------------------------
def test_induced_examples(p3):
    k3 = graphs.complete_graph(3)
    assert graphs.induced(k3, 0b011) == graphs.complete_graph(2)
    assert graphs.induced(k3, 0b111) == k3
    assert graphs.induced(p3, 0b101) == graphs.empty_graph(2)


def test_induced_composes():
    rng = np.random.default_rng(7)
    for trial in range(20):
        g = graphs.random_graph(8, 0.5, seed=trial)
        outer = int(rng.integers(0, 1 << 8))
        inner_local = int(rng.integers(0, 1 << outer.bit_count()))
        # the same vertices expressed in the original labels
        outer_vertices = [v for v in range(8) if (outer >> v) & 1]
        inner_global = graphs.subset_of(outer_vertices[i] for i in range(len(outer_vertices)) if (inner_local >> i) & 1)
        assert graphs.induced(graphs.induced(g, outer), inner_local) == graphs.induced(g, inner_global)


def test_toggle_edge_examples():
    k3 = graphs.complete_graph(3)
    assert graphs.toggle_edge(k3, 0, 1) == graphs.from_edge_list(3, [(0, 2), (2, 1)])
    assert graphs.toggle_edge(graphs.empty_graph(2), 0, 1) == graphs.complete_graph(2)
    with pytest.raises(SameVertex):
        graphs.toggle_edge(k3, 1, 1)


def test_neighbor_toggle_examples():
    a, b, c = 0, 1, 2
    g = graphs.from_edge_list(3, [(a, b), (b, c)])
    assert graphs.neighbor_toggle(g, a, b) == graphs.complete_graph(3)

    isolated_b = graphs.from_edge_list(3, [(0, 2)])
    assert graphs.neighbor_toggle(isolated_b, 0, 1) == isolated_b
    with pytest.raises(SameVertex):
        graphs.neighbor_toggle(g, 2, 2)


def test_neighbor_toggle_is_not_symmetric_in_a_b():
    g = graphs.from_edge_list(4, [(0, 1), (1, 2), (0, 3)])
    assert graphs.neighbor_toggle(g, 0, 1) != graphs.neighbor_toggle(g, 1, 0)


def test_four_term_graphs_valid_and_operations_commute():
    for n in range(2, 6):
        for g in graphs.enumerate_labeled_graphs(n):
            for a, b in itertools.permutations(range(n), 2):
                assert graphs.toggle_edge(graphs.toggle_edge(g, a, b), a, b) == g
                tilde = graphs.neighbor_toggle(g, a, b)
                assert graphs.neighbor_toggle(tilde, a, b) == g
                assert tilde.has_edge(a, b) == g.has_edge(a, b)
                assert graphs.toggle_edge(tilde, a, b) == graphs.neighbor_toggle(graphs.toggle_edge(g, a, b), a, b)


def test_disjoint_union_examples():
    k1 = graphs.complete_graph(1)
    assert graphs.disjoint_union(k1, k1) == graphs.empty_graph(2)
    k2 = graphs.complete_graph(2)
    assert graphs.disjoint_union(k2, k2) == graphs.from_edge_list(4, [(0, 1), (2, 3)])
    g = graphs.random_graph(5, 0.5, seed=9)
    assert graphs.disjoint_union(g, graphs.empty_graph(0)) == g
    with pytest.raises(SizeCapExceeded):
        graphs.disjoint_union(graphs.empty_graph(40), graphs.empty_graph(30))


def test_connected_components():
    g = graphs.from_edge_list(6, [(0, 2), (2, 4), (1, 5)])
    assert graphs.connected_components(g) == [0b010101, 0b100010, 0b001000]


# ---------------------------------------------------------------------------
# c. Text format and edge specs
# ---------------------------------------------------------------------------
def test_read_graph_text_skips_comments_and_blank_lines(p3):
    text = "# path\n3\n\n0 1\n# middle\n1 2"
    assert read_graph_text(text) == p3


def test_write_then_read_preserves_graph():
    g = graphs.random_graph(7, 0.5, seed=2)
    text = write_graph_text(g)
    assert text.endswith("\n")
    assert read_graph_text(text) == g


@pytest.mark.parametrize(
    "text, error",
    [
        ("", EmptyInput),
        ("# only a comment\n", EmptyInput),
        ("x\n", ParseError),
        ("3\n0 1 2\n", ParseError),
        ("2\n0 0\n", SelfLoop),
        ("2\n0 5\n", VertexOutOfRange),
    ],
)
def test_read_graph_text_errors(text, error):
    with pytest.raises(error):
        read_graph_text(text)


def test_read_graph_file(tmp_path, p3):
    path = tmp_path / "p3.txt"
    path.write_text("3\n0 1\n1 2\n", encoding="ascii")
    assert read_graph_file(path) == p3
    with pytest.raises(ParseError):
        read_graph_file(tmp_path / "missing.txt")


def test_parse_edge_spec(p3):
    assert parse_edge_spec(3, "0-1,1-2") == p3
    assert parse_edge_spec(3, " 0 - 1 , 1-2 ") == p3
    assert parse_edge_spec(2, "") == graphs.empty_graph(2)
    with pytest.raises(ParseError):
        parse_edge_spec(3, "0:1")
