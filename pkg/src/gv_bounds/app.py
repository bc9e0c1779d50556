#!/usr/bin/env python3
"""gv-bounds application.

Compute lower bounds on the size of codes with a given minimum distance, check
the closed-form sphere graph counts against explicit graphs, reproduce the
sparsity threshold analysis and construct codes.
"""

import argparse
import csv
import io
import json
import logging
import math
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import numpy as np

from gv_bounds.asymptotics import LOGGER as asymptotics_logger
from gv_bounds.asymptotics import emit_curves, gilbert_rate, threshold_scan
from gv_bounds.bounds.classical import LOGGER as classical_logger
from gv_bounds.bounds.classical import ndg_coloring_bound
from gv_bounds.bounds.constant_weight import SparseConstantWeightBound
from gv_bounds.bounds.generic_bound import GenericBound
from gv_bounds.bounds.sparse import LOGGER as sparse_logger
from gv_bounds.bounds.sparse import SparseQaryBound, locally_sparse_bound
from gv_bounds.bounds.table import BOUNDS, best_bound_table, evaluate_bounds, table_to_csv, table_to_json
from gv_bounds.bounds.table import LOGGER as table_logger
from gv_bounds.codebook import LOGGER as codebook_logger
from gv_bounds.codebook import codebook_from_text, codebook_to_text
from gv_bounds.combinatorics import LOGGER as combinatorics_logger
from gv_bounds.combinatorics import constant_weight_volume, hamming_volume, qary_volume, sphere_intersection_volume
from gv_bounds.constants import (
    CSV_FLOAT_FORMAT,
    DEFAULT_CURVE_STEP,
    DEFAULT_EPSILON,
    DEFAULT_GRID_STEP,
    DEFAULT_LAMBDA,
    DEFAULT_REFINE_TOL,
    DEFAULT_ROW_BUDGET,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    DEFAULT_VERTEX_BUDGET,
    EXIT_BUDGET,
    EXIT_INVALID,
    EXIT_OK,
    SPHERE_HEADER,
    SPHERE_ORACLE_VERTEX_LIMIT,
    THRESHOLD_DECIMALS,
)
from gv_bounds.construct import LOGGER as construct_logger
from gv_bounds.construct import greedy_distance_coloring, greedy_lexicode, hl_independent_set
from gv_bounds.errors import BudgetExceededError, CodebookError, InvalidParametersError, ThresholdNotFoundError
from gv_bounds.oracle import LOGGER as oracle_logger
from gv_bounds.oracle import (
    ExplicitGraph,
    brute_intersection_counts,
    build_gilbert_graph,
    build_sphere_graph,
    graph_stats,
)
from gv_bounds.output import LOGGER as output_logger
from gv_bounds.output import write_output
from gv_bounds.params import CodeParams, SplitParams
from gv_bounds.sphere_graph import LOGGER as sphere_graph_logger
from gv_bounds.sphere_graph import (
    gilbert_triangle_count,
    johnson_sphere_edge_count,
    qary_sphere_degree,
    qary_sphere_edge_count,
)
from gv_bounds.words import WordSpace

LOGGER = logging.getLogger(__name__)

COMMANDS = ("bounds", "sphere", "asym", "construct", "color", "verify")


def int_values(text: str) -> tuple[int, ...]:
    """Parse "4", "4..6" or "3,5,7" into integers."""
    try:
        if ".." in text:
            low, high = (int(part) for part in text.split("..", 1))
            values = tuple(range(low, high + 1))
        else:
            values = tuple(int(part) for part in text.split(","))
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"Invalid integer range {text!r}") from e
    if not values:
        raise argparse.ArgumentTypeError(f"Empty integer range {text!r}")
    return values


def delta_range(text: str) -> tuple[float, float, float]:
    """Parse "start:stop" or "start:stop:step"."""
    parts = text.split(":")
    try:
        values = [float(part) for part in parts]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"Invalid range {text!r}") from e
    if len(values) == 2:
        return values[0], values[1], DEFAULT_CURVE_STEP
    if len(values) == 3:
        return values[0], values[1], values[2]
    raise argparse.ArgumentTypeError(f"Range must be start:stop[:step], got {text!r}")


def _common_parser() -> argparse.ArgumentParser:
    """Get the flags shared by every subcommand."""
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--n", type=int_values, help="Code length, e.g. 8, 4..6 or 4,8.")
    parser.add_argument("--d", type=int_values, help="Minimum distance (half-distance for constant weight).")
    parser.add_argument("--q", type=int_values, default=(2,), help="Alphabet size.")
    parser.add_argument("--w", type=int_values, help="Constant weight.")
    parser.add_argument("--format", choices=("csv", "json"), default="csv", help="Output format.")
    parser.add_argument("--out", type=Path, help="Output file, standard output if not given.")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Seed of randomized constructions.")
    parser.add_argument("--budget", type=int, default=DEFAULT_VERTEX_BUDGET, help="Vertex budget of explicit graphs.")
    parser.add_argument("--threads", type=int, default=os.cpu_count(), help="Worker threads.")
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Produce verbose output. Use multiple times to increase verbosity.",
    )
    return parser


def handle_args(argv: list[str] | None = None) -> argparse.Namespace:
    """Handle command-line arguments."""
    parser = argparse.ArgumentParser(
        description=__doc__,
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    common = _common_parser()
    subparsers = parser.add_subparsers(dest="command", required=True)
    formatter = argparse.ArgumentDefaultsHelpFormatter

    bounds = subparsers.add_parser("bounds", parents=[common], formatter_class=formatter, help="Bound tables.")
    bounds.add_argument("--max-rows", type=int, default=DEFAULT_ROW_BUDGET, help="Largest number of instances.")

    sphere = subparsers.add_parser("sphere", parents=[common], formatter_class=formatter, help="Sphere graph counts.")
    sphere.add_argument("--oracle", action="store_true", help="Compare against explicit graphs.")

    asym = subparsers.add_parser("asym", parents=[common], formatter_class=formatter, help="Sparsity threshold.")
    asym.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON, help="Sparsity exponent.")
    asym.add_argument("--lambda", dest="lam", type=float, default=DEFAULT_LAMBDA, help="Weight split.")
    asym.add_argument(
        "--range",
        dest="delta_range",
        type=delta_range,
        default=(DEFAULT_CURVE_STEP, 0.5, DEFAULT_CURVE_STEP),
        help="Curve range start:stop[:step].",
    )
    asym.add_argument("--grid-step", type=float, default=DEFAULT_GRID_STEP, help="Threshold scan grid step.")
    asym.add_argument("--refine-tol", type=float, default=DEFAULT_REFINE_TOL, help="Threshold bisection tolerance.")

    construct = subparsers.add_parser("construct", parents=[common], formatter_class=formatter, help="Build a code.")
    construct.add_argument("--method", choices=("greedy", "hl"), default="greedy", help="Construction.")
    construct.add_argument("--trials", type=int, default=DEFAULT_TRIALS, help="Randomized trials of hl.")

    subparsers.add_parser("color", parents=[common], formatter_class=formatter, help="Distance coloring.")

    verify = subparsers.add_parser("verify", parents=[common], formatter_class=formatter, help="Verify a codebook.")
    verify.add_argument("--codebook", type=Path, required=True, help="Codebook file.")

    args = parser.parse_args(argv)

    # set logging
    if args.verbose == 1:
        level = logging.INFO
    elif args.verbose > 1:
        level = logging.DEBUG
    else:
        level = logging.WARNING
    logging.basicConfig(
        level=level,
    )
    for logger in (
        LOGGER,
        asymptotics_logger,
        classical_logger,
        codebook_logger,
        combinatorics_logger,
        construct_logger,
        oracle_logger,
        output_logger,
        sparse_logger,
        sphere_graph_logger,
        table_logger,
    ):
        logger.setLevel(level)

    return args


@dataclass(frozen=True)
class RunConfig:
    """Configuration of one run, built from the command line."""

    command: str
    n_values: tuple[int, ...] = ()
    d_values: tuple[int, ...] = ()
    q_values: tuple[int, ...] = (2,)
    w_values: tuple[int | None, ...] = (None,)
    fmt: str = "csv"
    out: Path | None = None
    seed: int = DEFAULT_SEED
    budget: int = DEFAULT_VERTEX_BUDGET
    max_rows: int = DEFAULT_ROW_BUDGET
    threads: int | None = None
    epsilon: float = DEFAULT_EPSILON
    lam: float = DEFAULT_LAMBDA
    delta_range: tuple[float, float, float] = (DEFAULT_CURVE_STEP, 0.5, DEFAULT_CURVE_STEP)
    grid_step: float = DEFAULT_GRID_STEP
    refine_tol: float = DEFAULT_REFINE_TOL
    method: str = "greedy"
    trials: int = DEFAULT_TRIALS
    oracle: bool = False
    codebook: Path | None = None

    def __post_init__(self) -> None:
        """Validate the configuration."""
        if self.command not in COMMANDS:
            raise InvalidParametersError(f"Unknown command {self.command!r}")
        if self.budget < 1:
            raise InvalidParametersError(f"Budget must be positive, got {self.budget}")
        if self.command in ("bounds", "sphere", "construct", "color") and not (self.n_values and self.d_values):
            raise InvalidParametersError(f"{self.command} needs --n and --d")

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        """Build a configuration from parsed arguments."""
        options = vars(args)
        return cls(
            command=args.command,
            n_values=args.n or (),
            d_values=args.d or (),
            q_values=args.q,
            w_values=args.w or (None,),
            fmt=args.format,
            out=args.out,
            seed=args.seed,
            budget=args.budget,
            max_rows=options.get("max_rows", DEFAULT_ROW_BUDGET),
            threads=args.threads,
            epsilon=options.get("epsilon", DEFAULT_EPSILON),
            lam=options.get("lam", DEFAULT_LAMBDA),
            delta_range=options.get("delta_range", (DEFAULT_CURVE_STEP, 0.5, DEFAULT_CURVE_STEP)),
            grid_step=options.get("grid_step", DEFAULT_GRID_STEP),
            refine_tol=options.get("refine_tol", DEFAULT_REFINE_TOL),
            method=options.get("method", "greedy"),
            trials=options.get("trials", DEFAULT_TRIALS),
            oracle=options.get("oracle", False),
            codebook=options.get("codebook"),
        )

    def single_params(self) -> CodeParams:
        """Get the one instance of a command that works on a single code."""
        values = (self.n_values, self.d_values, self.q_values, self.w_values)
        if any(len(v) != 1 for v in values):
            raise InvalidParametersError(f"{self.command} takes single values of --n, --d, --q and --w")
        return CodeParams(self.n_values[0], self.d_values[0], self.q_values[0], self.w_values[0])


def _report(config: RunConfig, text: str) -> None:
    """Print a summary, to standard error when standard output carries data."""
    print(text, file=sys.stdout if config.out is not None else sys.stderr)


def cmd_bounds(config: RunConfig) -> int:
    """Write the bound table of the requested ranges."""
    table = best_bound_table(
        config.n_values,
        config.d_values,
        config.q_values,
        config.w_values,
        row_budget=config.max_rows,
        threads=config.threads,
    )
    text = table_to_json(table) if config.fmt == "json" else table_to_csv(table)
    write_output(text, config.out)
    return EXIT_OK


def _status(closed: Any, oracle: Any, mismatch: str = "FAIL") -> str:
    if oracle is None:
        return "SKIPPED"
    return "PASS" if closed == oracle else mismatch


def _sparse_bound(params: CodeParams) -> GenericBound:
    return SparseConstantWeightBound() if params.constant_weight else SparseQaryBound(include_binary=True)


def _degrees_by_weight(graph: ExplicitGraph) -> dict[int, Any]:
    """Get the degree of the vertices of each weight, a sorted list when they disagree."""
    weights = np.count_nonzero(graph.space.digits(graph.labels), axis=1)
    degrees = np.diff(graph.require_adjacency().indptr)
    found: dict[int, Any] = {}
    for weight in np.unique(weights).tolist():
        values = sorted(set(degrees[weights == weight].tolist()))
        found[weight] = values[0] if len(values) == 1 else values
    return found


def sphere_rows(params: CodeParams, oracle: bool, budget: int) -> list[tuple[str, Any, Any, str]]:
    """Compare closed-form sphere graph counts with an explicit sphere graph.

    Rows are (quantity, closed form, oracle value, status).
    """
    n, radius, q, w = params.n, params.d_prime, params.q, params.w
    if w is None:
        vertices = qary_volume(n, radius, q) - 1
        edges = qary_sphere_edge_count(n, radius, q)
    else:
        vertices = constant_weight_volume(n, radius, w) - 1
        edges = johnson_sphere_edge_count(n, radius, w)

    graph = None
    if oracle:
        if vertices > min(budget, SPHERE_ORACLE_VERTEX_LIMIT):
            LOGGER.warning(f"Sphere graph of {params} has {vertices} vertices, oracle skipped")
        else:
            graph = build_sphere_graph(params, budget)
    stats = graph_stats(graph) if graph is not None else None

    rows: list[tuple[str, Any, Any, str]] = []
    measured = stats.n_vertices if stats is not None else None
    rows.append(("vertices", vertices, measured, _status(vertices, measured)))

    found_degrees = _degrees_by_weight(graph) if w is None and graph is not None else {}
    for weight in range(1, radius + 1) if w is None else ():
        closed = qary_sphere_degree(params, weight)
        found = found_degrees.get(weight) if graph is not None else None
        rows.append((f"degree_w{weight}", closed, found, _status(closed, found)))

    measured = graph.n_edges if graph is not None else None
    rows.append(("edges", edges, measured, _status(edges, measured)))

    if w is None:
        triangles = gilbert_triangle_count(n, params.d, q)
        found = None
        if oracle and q**n <= min(budget, SPHERE_ORACLE_VERTEX_LIMIT):
            found = graph_stats(build_gilbert_graph(params, budget)).triangle_count
        rows.append(("gilbert_triangles", triangles, found, _status(triangles, found)))

    if w is None and q == 2:
        overlap = sphere_intersection_volume(n, radius, params.d)
        found = None
        if oracle and 2**n <= min(budget, SPHERE_ORACLE_VERTEX_LIMIT):
            found = sum(
                brute_intersection_counts(n, 2, params.d, i, j, budget)
                for i in range(radius + 1)
                for j in range(radius + 1)
            )
        rows.append(("intersection", overlap.by_definition, found, _status(overlap.by_definition, found)))
        displayed = overlap.displayed_formula
        if displayed is None:
            rows.append(("intersection_displayed", None, found, "N/A"))
        else:
            rows.append(("intersection_displayed", displayed, found, _status(displayed, found, "DIFFER")))

    bound = _sparse_bound(params)
    if bound.is_applicable(params):
        closed_log2 = bound.compute(params).log2_value.log2
        measured_log2 = None
        if graph is not None and graph.n_vertices >= 2:
            space = WordSpace.of(params).size
            value = locally_sparse_bound(space, graph.n_vertices, graph.n_edges)
            measured_log2 = math.log2(value) if value > 0 else None
        rows.append(
            (
                "sparse_bound_log2",
                CSV_FLOAT_FORMAT.format(closed_log2),
                None if measured_log2 is None else CSV_FLOAT_FORMAT.format(measured_log2),
                "INFO",
            )
        )
    return rows


def cmd_sphere(config: RunConfig) -> int:
    """Write closed-form sphere graph counts, with oracle agreement when requested."""
    records = []
    for n in config.n_values:
        for d in config.d_values:
            for q in config.q_values:
                for w in config.w_values:
                    params = CodeParams(n, d, q, w)
                    for quantity, closed, found, status in sphere_rows(params, config.oracle, config.budget):
                        if status == "FAIL":
                            LOGGER.error(f"{params}: {quantity} closed form {closed} but oracle {found}")
                        records.append((n, d, q, w, quantity, closed, found, status))

    if config.fmt == "json":
        text = json.dumps([dict(zip(SPHERE_HEADER, record)) for record in records], indent=2) + "\n"
    else:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(SPHERE_HEADER)
        writer.writerows(tuple("" if value is None else value for value in record) for record in records)
        text = buffer.getvalue()
    write_output(text, config.out)
    return EXIT_OK


def cmd_asym(config: RunConfig) -> int:
    """Write the condition curves and report the threshold."""
    split = SplitParams(config.lam, config.epsilon)
    start, stop, step = config.delta_range
    buffer = io.StringIO()
    emit_curves(split, (start, stop), step, buffer)
    result = threshold_scan(split, config.grid_step, config.refine_tol)
    write_output(buffer.getvalue(), config.out)
    _report(
        config,
        f"threshold={result.delta:.{THRESHOLD_DECIMALS}f} binding={result.binding or 'none'} "
        f"gilbert_rate={gilbert_rate(result.delta):.{THRESHOLD_DECIMALS}f}",
    )
    return EXIT_OK


def cmd_construct(config: RunConfig) -> int:
    """Write a constructed codebook and compare its size with the bounds."""
    params = config.single_params()
    if config.method == "hl":
        graph = build_gilbert_graph(params, config.budget)
        book = hl_independent_set(graph, config.seed, config.trials, config.threads)
    else:
        book = greedy_lexicode(params, config.budget)
    write_output(codebook_to_text(book), config.out)

    row = evaluate_bounds(params) if any(b.is_applicable(params) for b in BOUNDS) else None
    floors = [] if row is None else [f"{r.formula_id.value}={r.floor_int}" for r in row.results]
    _report(config, " ".join([f"size={book.size}", f"mindist={book.min_distance}", *floors]))
    return EXIT_OK


def cmd_color(config: RunConfig) -> int:
    """Color words first-fit and report the color count against the coset bound."""
    params = config.single_params()
    coloring = greedy_distance_coloring(params.n, params.d, config.budget)
    if config.out is not None:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(("word", "color"))
        writer.writerows(coloring.rows())
        write_output(buffer.getvalue(), config.out)
    print(
        f"n_colors={coloring.n_colors} ndg_bound={ndg_coloring_bound(params.n, params.d)} "
        f"volume={hamming_volume(params.n, params.d)} proper={str(coloring.is_proper()).lower()}"
    )
    return EXIT_OK


def cmd_verify(config: RunConfig) -> int:
    """Verify a codebook file against its header distance or --d."""
    assert config.codebook is not None
    book = codebook_from_text(config.codebook.read_text(encoding="utf-8"))
    required = book.required_distance
    if config.d_values:
        d = config.d_values[0]
        required = 2 * d if book.params.constant_weight else d
    ok = book.min_distance >= required
    print(f"size={book.size} mindist={book.min_distance} required={required} {'PASS' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_INVALID


COMMAND_HANDLERS = {
    "bounds": cmd_bounds,
    "sphere": cmd_sphere,
    "asym": cmd_asym,
    "construct": cmd_construct,
    "color": cmd_color,
    "verify": cmd_verify,
}


def run_app(args: argparse.Namespace) -> int:
    """Run the requested subcommand and get its exit status."""
    LOGGER.info(f"Running {args.command}")
    try:
        config = RunConfig.from_args(args)
        return COMMAND_HANDLERS[config.command](config)
    except BudgetExceededError as e:
        LOGGER.error(str(e))
        return EXIT_BUDGET
    except (InvalidParametersError, ThresholdNotFoundError, CodebookError, OSError) as e:
        LOGGER.error(str(e))
        return EXIT_INVALID
