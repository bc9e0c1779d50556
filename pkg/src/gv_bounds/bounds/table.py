"""Best-of bound tables and their CSV and JSON export."""

import csv
import io
import json
import logging
from collections.abc import Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any

from gv_bounds.bounds.classical import (
    BGSBound,
    EliaBound,
    FabrisFirstBound,
    FabrisSecondBound,
    GilbertVarshamovBound,
    TolhuizenBound,
    VarshamovBound,
)
from gv_bounds.bounds.constant_weight import LevenshteinBound, SparseConstantWeightBound
from gv_bounds.bounds.generic_bound import BoundResult, GenericBound
from gv_bounds.bounds.sparse import SparseGVBound, SparseQaryBound
from gv_bounds.constants import CSV_FLOAT_FORMAT, DEFAULT_ROW_BUDGET, TABLE_HEADER
from gv_bounds.errors import InvalidParametersError
from gv_bounds.params import CodeParams

LOGGER = logging.getLogger(__name__)

BOUNDS: list[GenericBound] = [
    GilbertVarshamovBound(),
    VarshamovBound(),
    EliaBound(),
    TolhuizenBound(),
    FabrisFirstBound(),
    FabrisSecondBound(),
    BGSBound(),
    SparseGVBound(),
    SparseQaryBound(),
    LevenshteinBound(),
    SparseConstantWeightBound(),
]


@dataclass(frozen=True)
class BoundRow:
    """All applicable bounds of one instance and the best of them."""

    params: CodeParams
    results: tuple[BoundResult, ...]
    best: BoundResult

    @property
    def best_floor(self) -> int:
        """Get the best floor, at least 1 since a single word is always a code."""
        return max(1, self.best.floor_int)


@dataclass(frozen=True)
class BoundTable:
    """Rows of a table in (n, d, q, w) order."""

    rows: tuple[BoundRow, ...]
    requested: int
    truncated: bool


def evaluate_bounds(params: CodeParams) -> BoundRow:
    """Evaluate every applicable bound on one instance."""
    results = tuple(bound.compute(params) for bound in BOUNDS if bound.is_applicable(params))
    eligible = [result for result in results if result.eligible]
    # the first formula in table order wins ties
    best = max(eligible, key=lambda result: (result.floor_int, -results.index(result)))
    LOGGER.debug(f"{params}: best {best.formula_id.value} with floor {best.floor_int}")
    return BoundRow(params, results, best)


def _instances(
    n_values: Iterable[int],
    d_values: Iterable[int],
    q_values: Iterable[int],
    w_values: Iterable[int | None],
) -> list[CodeParams]:
    """Get the valid instances of the ranges in lexicographic order."""
    instances = []
    for n in n_values:
        for d in d_values:
            for q in q_values:
                for w in w_values:
                    try:
                        params = CodeParams(n, d, q, w)
                    except InvalidParametersError as e:
                        LOGGER.debug(f"Skipping n={n} d={d} q={q} w={w}: {e}")
                        continue
                    if any(bound.is_applicable(params) for bound in BOUNDS):
                        instances.append(params)
                    else:
                        LOGGER.debug(f"Skipping {params}: no bound applies")
    return sorted(instances, key=lambda p: (p.n, p.d, p.q, -1 if p.w is None else p.w))


def best_bound_table(
    n_values: Iterable[int],
    d_values: Sequence[int],
    q_values: Sequence[int] = (2,),
    w_values: Sequence[int | None] = (None,),
    row_budget: int = DEFAULT_ROW_BUDGET,
    threads: int | None = None,
) -> BoundTable:
    """Evaluate all bounds over the ranges, truncating to row_budget instances."""
    if row_budget < 1:
        raise InvalidParametersError(f"Row budget must be positive, got {row_budget}")
    instances = _instances(n_values, d_values, q_values, w_values)
    if not instances:
        raise InvalidParametersError("No valid (n, d, q, w) instance in the requested ranges")

    truncated = len(instances) > row_budget
    if truncated:
        LOGGER.warning(f"Table truncated to {row_budget} of {len(instances)} instances")

    with ThreadPoolExecutor(max_workers=threads) as executor:
        rows = tuple(executor.map(evaluate_bounds, instances[:row_budget]))
    return BoundTable(rows, len(instances), truncated)


def _format_aux(aux: dict[str, Any]) -> str:
    return ";".join(f"{key}={aux[key]}" for key in sorted(aux))


def _records(table: BoundTable) -> list[dict[str, Any]]:
    """Flatten a table into one record per bound plus one best record per instance."""
    records = []
    for row in table.rows:
        p = row.params
        entries = [(result.formula_id.value, result, result.floor_int, dict(result.aux)) for result in row.results]
        entries.append(("BEST", row.best, row.best_floor, {"winner": row.best.formula_id.value}))
        for formula, result, floor, aux in entries:
            exact = result.exact
            records.append(
                {
                    "n": p.n,
                    "d": p.d,
                    "q": p.q,
                    "w": p.w,
                    "formula": formula,
                    "exact_num": None if exact is None else exact.numerator,
                    "exact_den": None if exact is None else exact.denominator,
                    "log2": result.log2_value.log2,
                    "floor": floor,
                    "aux": aux,
                }
            )
    return records


def table_to_csv(table: BoundTable) -> str:
    """Render a table as CSV, with a trailing comment line when truncated."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(TABLE_HEADER)
    for record in _records(table):
        writer.writerow(
            [
                record["n"],
                record["d"],
                record["q"],
                "" if record["w"] is None else record["w"],
                record["formula"],
                "" if record["exact_num"] is None else record["exact_num"],
                "" if record["exact_den"] is None else record["exact_den"],
                CSV_FLOAT_FORMAT.format(record["log2"]),
                record["floor"],
                _format_aux(record["aux"]),
            ]
        )
    if table.truncated:
        buffer.write(f"# truncated: {len(table.rows)} of {table.requested} instances\n")
    return buffer.getvalue()


def table_to_json(table: BoundTable) -> str:
    """Render a table as a JSON array, ending with a truncation object when truncated."""
    records: list[dict[str, Any]] = []
    for record in _records(table):
        record["aux"] = {key: str(value) for key, value in record["aux"].items()}
        records.append(record)
    if table.truncated:
        records.append({"truncated": True, "emitted": len(table.rows), "requested": table.requested})
    return json.dumps(records, indent=2) + "\n"
