"""Unit tests for construct.py."""

from fractions import Fraction
from unittest.mock import patch

import pytest
from gv_bounds.bounds import ndg_coloring_bound
from gv_bounds.combinatorics import ceil_plus, hamming_volume
from gv_bounds.construct import (
    greedy_distance_coloring,
    greedy_lexicode,
    hl_independent_set,
    triangle_free_core,
    verify_code,
)
from gv_bounds.errors import BudgetExceededError, InvalidParametersError
from gv_bounds.oracle import ExplicitGraph, build_gilbert_graph, vertex_triangle_counts
from gv_bounds.params import CodeParams


def test_greedy_lexicode_n5_d3() -> None:
    """Test the lexicode of length 5 and distance 3."""
    book = greedy_lexicode(CodeParams(5, 3))

    assert book.words == ("00000", "00111", "11001", "11110")
    assert book.min_distance == 3
    assert book.metadata["method"] == "greedy"
    assert verify_code(book) == 3


def test_greedy_lexicode_is_hamming_code_at_n7() -> None:
    """Test that the distance-3 lexicode of length 7 is perfect."""
    book = greedy_lexicode(CodeParams(7, 3))

    assert book.size == 16
    assert book.meets_distance


def test_greedy_lexicode_qary_and_constant_weight() -> None:
    """Test lexicodes over three symbols and of constant weight."""
    ternary = greedy_lexicode(CodeParams(3, 3, q=3))
    assert ternary.words == ("000", "111", "222")

    weighted = greedy_lexicode(CodeParams(6, 2, w=3))
    assert weighted.meets_distance
    assert all(word.count("1") == 3 for word in weighted.words)


def test_greedy_lexicode_budget() -> None:
    """Test that the word budget is enforced."""
    with pytest.raises(BudgetExceededError):
        greedy_lexicode(CodeParams(12, 3), budget=100)


def test_triangle_free_core(gilbert_4_3: ExplicitGraph) -> None:
    """Test that triangle removal leaves a triangle-free graph and is cached."""
    core = triangle_free_core(gilbert_4_3)

    adjacency = gilbert_4_3.require_adjacency()
    remaining = adjacency[core][:, core]
    assert core.any()
    assert not vertex_triangle_counts(remaining).any()
    assert triangle_free_core(gilbert_4_3) is core


def test_hl_independent_set_is_deterministic() -> None:
    """Test that a seed fixes the result regardless of the thread count."""
    graph = build_gilbert_graph(CodeParams(6, 3))

    first = hl_independent_set(graph, seed=1, trials=8, threads=1)
    second = hl_independent_set(graph, seed=1, trials=8, threads=4)

    assert first.words == second.words
    assert first.meets_distance
    assert ceil_plus(Fraction(64, hamming_volume(6, 2))) <= first.size <= 8
    assert first.metadata["method"] == "hl"
    assert first.metadata["seed"] == 1
    assert first.metadata["trials"] == 8


def test_hl_independent_set_is_maximal(gilbert_4_3: ExplicitGraph) -> None:
    """Test that no further word can be added to the result."""
    book = hl_independent_set(gilbert_4_3, seed=0, trials=4)

    chosen = set(book.words)
    indices = [i for i in range(gilbert_4_3.n_vertices) if gilbert_4_3.word(i) in chosen]
    blocked = set(indices)
    for i in indices:
        blocked.update(gilbert_4_3.neighbours(i).tolist())
    assert blocked == set(range(gilbert_4_3.n_vertices))


def test_hl_independent_set_rejects_no_trials(gilbert_4_3: ExplicitGraph) -> None:
    """Test that at least one trial is needed."""
    with pytest.raises(InvalidParametersError):
        hl_independent_set(gilbert_4_3, seed=0, trials=0)


def test_greedy_distance_coloring_small_cases() -> None:
    """Test colorings where the answer is forced."""
    assert greedy_distance_coloring(3, 3).n_colors == 8
    parity = greedy_distance_coloring(4, 1)
    assert parity.n_colors == 2
    assert parity.color_of("0000") == 0
    assert parity.color_of("0001") == 1


@pytest.mark.parametrize("d", range(1, 7))
def test_greedy_distance_coloring_within_coset_bound(d: int) -> None:
    """Test that first-fit stays within the coset coloring bound."""
    coloring = greedy_distance_coloring(6, d)

    assert coloring.is_proper()
    assert coloring.n_colors <= ndg_coloring_bound(6, d)


def test_coloring_rows() -> None:
    """Test the word and color listing."""
    rows = greedy_distance_coloring(3, 1).rows()

    assert len(rows) == 8
    assert rows[0] == ("000", 0)
    assert rows[7] == ("111", 1)


def test_greedy_distance_coloring_invalid() -> None:
    """Test distance and budget checks."""
    with pytest.raises(InvalidParametersError):
        greedy_distance_coloring(3, 4)
    with pytest.raises(BudgetExceededError):
        greedy_distance_coloring(12, 2, budget=100)


@pytest.mark.parametrize("n", range(1, 15))
def test_greedy_lexicode_reaches_gv_count(n: int) -> None:
    """Test that every lexicode meets its distance and the Gilbert-Varshamov count."""
    for d in range(1, n + 1):
        book = greedy_lexicode(CodeParams(n, d))

        assert book.meets_distance, (n, d)
        assert book.size >= ceil_plus(Fraction(2**n, hamming_volume(n, d - 1))), (n, d)


@pytest.mark.parametrize(
    "n,d",
    [(n, d) for n in range(3, 9) for d in range(2, n + 1)] + [(10, 3), (12, 3)],
)
def test_hl_independent_set_reaches_gv_count(n: int, d: int) -> None:
    """Test that every seed gives a code meeting the Gilbert-Varshamov count."""
    graph = build_gilbert_graph(CodeParams(n, d))
    floor = ceil_plus(Fraction(2**n, hamming_volume(n, d - 1)))

    for seed in range(32):
        book = hl_independent_set(graph, seed=seed, trials=1)
        assert book.meets_distance, seed
        assert book.size >= floor, seed


@pytest.mark.parametrize("n", range(1, 11))
def test_greedy_distance_coloring_within_volume(n: int) -> None:
    """Test that first-fit colorings are proper and use at most V(n, d) colors."""
    for d in range(1, n + 1):
        coloring = greedy_distance_coloring(n, d)

        assert coloring.is_proper(), (n, d)
        assert coloring.n_colors <= hamming_volume(n, d), (n, d)


def test_greedy_distance_coloring_checks_color_count() -> None:
    """Test that a color count above the ball volume is reported."""
    with patch("gv_bounds.construct.hamming_volume", return_value=1):
        with pytest.raises(ArithmeticError):
            greedy_distance_coloring(3, 1)
