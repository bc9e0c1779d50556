"""Unit tests for oracle.py."""

import io
from unittest.mock import patch

import networkx as nx
import numpy as np
import pytest
from gv_bounds.bounds.table import evaluate_bounds
from gv_bounds.combinatorics import binomial, hamming_intersection_number, hamming_volume, johnson_intersection_number
from gv_bounds.construct import greedy_lexicode
from gv_bounds.errors import BudgetExceededError
from gv_bounds.oracle import (
    ExplicitGraph,
    brute_intersection_counts,
    brute_johnson_intersection_counts,
    build_gilbert_graph,
    build_sphere_graph,
    dump_edge_list,
    exact_max_independent_set,
    graph_stats,
    maximum_independent_set,
    vertex_triangle_counts,
)
from gv_bounds.params import CodeParams
from gv_bounds.sphere_graph import (
    e_binary,
    gilbert_triangle_count,
    heavy_weight_degree_floor,
    johnson_sphere_edge_count,
    qary_sphere_edge_count,
    sphere_degree,
    sphere_edge_count,
)


def test_gilbert_graph_stats(gilbert_4_3: ExplicitGraph) -> None:
    """Test the Gilbert graph of length 4 and distance 3 against closed forms."""
    stats = graph_stats(gilbert_4_3)

    assert gilbert_4_3.n_vertices == 16
    assert gilbert_4_3.n_edges == 80
    assert stats.max_degree == 10
    assert stats.neighborhood_edges_max == 30
    assert stats.triangle_count == gilbert_triangle_count(4, 3) == 160
    assert np.all(vertex_triangle_counts(gilbert_4_3.require_adjacency()) == 30)


def test_binary_sphere_graph() -> None:
    """Test the regular sphere graph of length 4 and radius 2."""
    graph = build_sphere_graph(CodeParams(4, 3))

    assert graph.n_vertices == 10
    assert graph.n_edges == 30
    assert set(np.diff(graph.require_adjacency().indptr).tolist()) == {6}


def test_qary_sphere_graphs() -> None:
    """Test ternary sphere graphs against the closed-form edge counts."""
    small = build_sphere_graph(CodeParams(3, 2, q=3))
    assert small.n_vertices == 6
    assert small.n_edges == 3

    larger = build_sphere_graph(CodeParams(4, 3, q=3))
    assert larger.n_vertices == 32
    assert larger.n_edges == qary_sphere_edge_count(4, 2, 3) == 256


def test_constant_weight_sphere_graph() -> None:
    """Test the Johnson sphere graph against the closed-form edge count."""
    graph = build_sphere_graph(CodeParams(6, 2, w=2))

    assert graph.n_vertices == 8
    assert graph.n_edges == johnson_sphere_edge_count(6, 1, 2) == 16
    assert all(graph.word(i).count("1") == 2 for i in range(graph.n_vertices))


def test_graph_words_and_networkx(gilbert_4_3: ExplicitGraph) -> None:
    """Test vertex words and the networkx conversion."""
    graph = gilbert_4_3.to_networkx()

    assert graph.number_of_nodes() == 16
    assert graph.number_of_edges() == 80
    assert graph.nodes[0]["word"] == "0000"
    assert gilbert_4_3.word(15) == "1111"


def test_neighbours_on_demand() -> None:
    """Test that graphs above the materialisation limit generate neighbours lazily."""
    params = CodeParams(5, 3)
    full = build_gilbert_graph(params)

    with patch("gv_bounds.oracle.MATERIALIZE_LIMIT", 4):
        lazy = build_gilbert_graph(params)

    assert lazy.adjacency is None
    for index in (0, 7, 31):
        assert lazy.neighbours(index).tolist() == full.neighbours(index).tolist()
    with pytest.raises(BudgetExceededError):
        lazy.require_adjacency()


def test_graph_budget() -> None:
    """Test that the vertex budget is enforced."""
    with pytest.raises(BudgetExceededError):
        build_gilbert_graph(CodeParams(10, 3), budget=100)


@pytest.mark.parametrize("n,d", [(4, 3), (5, 3), (6, 3), (6, 4), (7, 4), (8, 5), (8, 6), (8, 7), (8, 8)])
def test_exact_max_independent_set(n: int, d: int, known_binary_codes: dict[tuple[int, int], int]) -> None:
    """Test exact search against known optimal code sizes."""
    book = exact_max_independent_set(build_gilbert_graph(CodeParams(n, d)))

    assert book.size == known_binary_codes[(n, d)]
    assert book.min_distance >= d
    assert book.metadata["method"] == "exact"


def test_exact_search_on_complete_graph() -> None:
    """Test that weight-2 words of length 3 pairwise conflict."""
    book = exact_max_independent_set(build_gilbert_graph(CodeParams(3, 2, w=2)))

    assert book.size == 1


def test_exact_search_limit() -> None:
    """Test that large graphs are refused by exact search."""
    with pytest.raises(BudgetExceededError):
        exact_max_independent_set(build_gilbert_graph(CodeParams(9, 3)))


def test_maximum_independent_set_matches_networkx() -> None:
    """Test branch and bound against a maximum clique of the complement."""
    graph = build_gilbert_graph(CodeParams(4, 2))

    chosen = maximum_independent_set(graph.require_adjacency())
    _, clique_size = nx.max_weight_clique(nx.complement(graph.to_networkx()), weight=None)

    assert len(chosen) == clique_size == 8


def test_brute_intersection_counts() -> None:
    """Test Hamming intersection numbers by enumeration."""
    for i in range(6):
        for j in range(6):
            assert brute_intersection_counts(5, 3, 2, i, j) == hamming_intersection_number(5, 3, 2, i, j)


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_brute_johnson_intersection_counts(k: int) -> None:
    """Test Johnson intersection numbers by enumeration."""
    for i in range(4):
        for j in range(4):
            assert brute_johnson_intersection_counts(7, 3, i, j, k) == johnson_intersection_number(7, 3, i, j, k)


def test_dump_edge_list() -> None:
    """Test the edge list format."""
    sink = io.StringIO()

    dump_edge_list(build_sphere_graph(CodeParams(3, 2, q=3)), sink)

    assert sink.getvalue() == "6 3\n0 1\n2 3\n4 5\n"


@pytest.mark.parametrize("n,d", [(4, 3), (5, 3), (6, 3), (6, 4), (7, 4), (8, 5), (8, 6), (8, 7), (8, 8)])
def test_lower_bounds_never_exceed_exact_optimum(n: int, d: int) -> None:
    """Test every selectable bound and the lexicode against the exact optimum."""
    params = CodeParams(n, d)
    optimum = exact_max_independent_set(build_gilbert_graph(params)).size

    for result in evaluate_bounds(params).results:
        if result.eligible:
            assert result.floor_int <= optimum, result.formula_id
    lexicode = greedy_lexicode(params).size
    assert lexicode <= optimum
    if (n, d) in {(4, 3), (5, 3)}:
        assert lexicode == optimum


@pytest.mark.parametrize("n", range(2, 11))
def test_sphere_graph_matches_closed_forms(n: int) -> None:
    """Test per-weight degrees and edge counts of explicit sphere graphs."""
    for d in range(2, n + 1):
        params = CodeParams(n, d)
        graph = build_sphere_graph(params)
        degrees = np.diff(graph.require_adjacency().indptr)
        weights = np.count_nonzero(graph.space.digits(graph.labels), axis=1)

        for w in range(1, params.d_prime + 1):
            assert set(degrees[weights == w].tolist()) == {sphere_degree(params, w)}, (n, d, w)
        assert graph.n_edges == sphere_edge_count(params) == 3 * e_binary(n, d - 1)


@pytest.mark.parametrize("n", range(2, 11))
def test_gilbert_graph_triangles_match_closed_form(n: int) -> None:
    """Test explicit triangle and degree statistics of Gilbert graphs."""
    # dense graphs above n = 7 make A @ A slow
    for d in range(2, (n if n <= 7 else 4) + 1):
        params = CodeParams(n, d)
        stats = graph_stats(build_gilbert_graph(params))

        assert stats.triangle_count == gilbert_triangle_count(n, d), (n, d)
        assert stats.max_degree == hamming_volume(n, d - 1) - 1
        assert stats.neighborhood_edges_max == sphere_edge_count(params)


@pytest.mark.parametrize("n", [2, 4, 6, 8, 10])
def test_middle_weight_degrees_reach_heavy_floor(n: int) -> None:
    """Test the heavy-weight degree floor on the explicit radius-n/2 sphere graph."""
    graph = build_sphere_graph(CodeParams(n, n // 2 + 1))
    degrees = np.diff(graph.require_adjacency().indptr)
    weights = np.count_nonzero(graph.space.digits(graph.labels), axis=1)

    middle = degrees[weights == n // 2]
    assert len(middle) == binomial(n, n // 2)
    assert np.all(middle + 1 >= heavy_weight_degree_floor(n))
