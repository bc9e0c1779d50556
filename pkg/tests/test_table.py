"""Unit tests for bounds/table.py."""

import json

import pytest
from gv_bounds.bounds import BOUNDS, FormulaId, best_bound_table, table_to_csv, table_to_json
from gv_bounds.bounds.table import evaluate_bounds
from gv_bounds.constants import TABLE_HEADER
from gv_bounds.errors import InvalidParametersError
from gv_bounds.params import CodeParams


def test_evaluate_bounds_best_ties_to_first_formula() -> None:
    """Test that Varshamov wins the tie with BGS at n=6, d=3."""
    row = evaluate_bounds(CodeParams(6, 3))

    assert row.best.formula_id == FormulaId.VARSHAMOV
    assert row.best_floor == 8
    formulas = [result.formula_id for result in row.results]
    assert FormulaId.FABRIS2 in formulas
    assert FormulaId.SPARSE_QARY not in formulas


def test_excluded_formula_never_wins() -> None:
    """Test that the overshooting Fabris formula is not selected at n=4, d=3."""
    row = evaluate_bounds(CodeParams(4, 3))

    assert row.best.formula_id != FormulaId.FABRIS2
    assert row.best_floor == 2


def test_best_floor_is_at_least_one() -> None:
    """Test that a single word always counts as a code."""
    row = evaluate_bounds(CodeParams(10, 3, w=4))

    assert row.best_floor >= 1


def test_best_never_exceeds_known_optimum(known_binary_codes: dict[tuple[int, int], int]) -> None:
    """Test every best bound against known values of A2(n, d)."""
    n_values = sorted({n for n, _ in known_binary_codes})
    d_values = sorted({d for _, d in known_binary_codes})

    table = best_bound_table(n_values, d_values, threads=2)

    assert not table.truncated
    assert len(table.rows) == len(known_binary_codes)
    for row in table.rows:
        assert row.best_floor <= known_binary_codes[(row.params.n, row.params.d)], str(row.params)


def test_table_rows_are_ordered_and_filtered() -> None:
    """Test that invalid instances are skipped and rows follow (n, d, q, w) order."""
    table = best_bound_table([6, 4], [3, 5], q_values=[3, 2])

    keys = [(row.params.n, row.params.d, row.params.q) for row in table.rows]
    assert keys == [(4, 3, 2), (4, 3, 3), (6, 3, 2), (6, 3, 3), (6, 5, 2), (6, 5, 3)]


def test_table_skips_weights_without_bounds() -> None:
    """Test that weights above n/2 have no applicable bound and are skipped."""
    table = best_bound_table([6], [2], w_values=[2, 3, 4])

    assert [row.params.w for row in table.rows] == [2, 3]


def test_table_truncation() -> None:
    """Test that the row budget truncates the table."""
    table = best_bound_table(range(3, 8), [3], row_budget=2)

    assert table.truncated
    assert table.requested == 5
    assert len(table.rows) == 2
    assert table_to_csv(table).endswith("# truncated: 2 of 5 instances\n")
    assert json.loads(table_to_json(table))[-1] == {"truncated": True, "emitted": 2, "requested": 5}


@pytest.mark.parametrize("n_values,d_values,row_budget", [([3], [5], 10), ([5], [3], 0)])
def test_table_invalid_requests(n_values: list[int], d_values: list[int], row_budget: int) -> None:
    """Test that empty ranges and non-positive budgets are rejected."""
    with pytest.raises(InvalidParametersError):
        best_bound_table(n_values, d_values, row_budget=row_budget)


def test_table_to_csv() -> None:
    """Test the CSV layout of a table."""
    table = best_bound_table([4], [3])

    lines = table_to_csv(table).splitlines()

    assert lines[0] == ",".join(TABLE_HEADER)
    assert lines[1].startswith("4,3,2,,GV,16,11,")
    assert lines[-1].startswith("4,3,2,,BEST,2,1,1,2,winner=VARSHAMOV")
    tolhuizen = next(line for line in lines if ",TOLHUIZEN," in line)
    assert tolhuizen.endswith(",f_t=1")
    sparse = next(line for line in lines if ",SPARSE_GV," in line)
    assert ",,," in sparse


def test_table_to_json() -> None:
    """Test the JSON layout of a table."""
    table = best_bound_table([4], [3])

    records = json.loads(table_to_json(table))

    assert len(records) == len([b for b in BOUNDS if b.is_applicable(CodeParams(4, 3))]) + 1
    assert records[0]["formula"] == "GV"
    assert records[0]["w"] is None
    assert records[0]["exact_num"] == 16
    assert records[-1]["formula"] == "BEST"
    assert records[-1]["aux"] == {"winner": "VARSHAMOV"}
