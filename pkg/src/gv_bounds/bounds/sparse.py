"""Lower bounds from the local sparsity of the Gilbert graph.

Every vertex neighbourhood of the Gilbert graph is a copy of the sphere graph,
so a graph with few triangles per vertex has an independence number larger
than the Gilbert-Varshamov count by a factor of about log2 V / 10.
"""

import logging
import math
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from gv_bounds.bounds.generic_bound import (
    BinaryBound,
    BoundResult,
    FormulaId,
    GenericBound,
    rational_result,
    scaled_result,
)
from gv_bounds.combinatorics import Count, Rational, log2_count, log2_rational, qary_volume
from gv_bounds.errors import InvalidParametersError
from gv_bounds.params import CodeParams
from gv_bounds.sphere_graph import e_binary, e_qary

LOGGER = logging.getLogger(__name__)


def locally_sparse_bound(n_vertices: int, max_degree: int, neighborhood_edges: int) -> float:
    """Get the independence bound for a graph whose neighbourhoods span at most t edges.

    With t = 0 the graph is triangle-free and N log2(D) / (8 D) applies.
    """
    if max_degree < 2:
        raise InvalidParametersError(f"Sparse independence bound needs max degree >= 2, got {max_degree}")
    if neighborhood_edges == 0:
        return n_vertices * math.log2(max_degree) / (8 * max_degree)
    return (
        n_vertices
        / (10 * max_degree)
        * (math.log2(max_degree) - 0.5 * math.log2(Fraction(neighborhood_edges, 3)))
    )


def sparse_factor(volume: Count, edges_third: Rational) -> float:
    """Get (log2 V - log2 sqrt(e)) / 10 for a positive e."""
    return (log2_count(volume).log2 - 0.5 * log2_rational(Fraction(edges_third)).log2) / 10


def sparse_result(
    formula_id: FormulaId,
    params: CodeParams,
    space: Count,
    volume: Count,
    edges_third: Rational,
) -> BoundResult:
    """Evaluate a sparse bound from the space size, ball volume and e value."""
    quotient = Fraction(space, volume)
    if edges_third > 0:
        return scaled_result(
            formula_id,
            quotient,
            sparse_factor(volume, edges_third),
            params,
            gv_quotient=quotient,
            e=Fraction(edges_third),
        )

    degree = volume - 1
    if degree < 2:
        return rational_result(formula_id, quotient, params, fallback="gv")
    LOGGER.debug(f"Edgeless sphere graph for {params}, using the triangle-free bound")
    return scaled_result(
        formula_id,
        Fraction(space, 8 * degree),
        math.log2(degree),
        params,
        triangle_free=True,
    )


class SparseGVBound(BinaryBound):
    """(2^n / V(n, d-1)) (log2 V(n, d-1) - log2 sqrt(e(n, d-1))) / 10."""

    MIN_D = 2

    @property
    def formula_id(self) -> FormulaId:
        """Get the identifier of the bound."""
        return FormulaId.SPARSE_GV

    def _compute(self, params: CodeParams) -> BoundResult:
        n, radius = params.n, params.d_prime
        return sparse_result(
            self.formula_id, params, 2**n, qary_volume(n, radius, 2), e_binary(n, radius)
        )


class SparseQaryBound(GenericBound):
    """q-ary counterpart of the sparse bound, from V_q and e_q."""

    def __init__(self, include_binary: bool = False) -> None:
        """Initialize an instance."""
        self.include_binary = include_binary

    @property
    def formula_id(self) -> FormulaId:
        """Get the identifier of the bound."""
        return FormulaId.SPARSE_QARY

    def is_applicable(self, params: CodeParams) -> bool:
        """Get whether the bound is defined for the instance."""
        min_q = 2 if self.include_binary else 3
        return params.w is None and params.q >= min_q and params.d >= 2

    def _compute(self, params: CodeParams) -> BoundResult:
        n, radius, q = params.n, params.d_prime, params.q
        return sparse_result(
            self.formula_id, params, q**n, qary_volume(n, radius, q), e_qary(n, radius, q)
        )


def sparse_gv_bound(params: CodeParams) -> BoundResult:
    """Get the binary sparse-graph improvement of the Gilbert-Varshamov bound."""
    if params.d < 2:
        raise InvalidParametersError(f"Sparse bound needs d >= 2, got {params}")
    return SparseGVBound().compute(params)


def sparse_qary_bound(params: CodeParams) -> BoundResult:
    """Get the q-ary sparse-graph improvement; q = 2 matches the binary one."""
    if params.d < 2:
        raise InvalidParametersError(f"Sparse bound needs d >= 2, got {params}")
    return SparseQaryBound(include_binary=True).compute(params)


@dataclass(frozen=True)
class FrontierRow:
    """Where the sparse bound gains most over the Gilbert-Varshamov bound for one n."""

    n: int
    best_d: int
    best_gain_bits: float
    improving_d: tuple[int, ...]


def sparse_gain_bits(n: int, d: int) -> float:
    """Get log2 of sparse bound over the Gilbert-Varshamov bound, for d >= 3."""
    if not 3 <= d <= n:
        raise InvalidParametersError(f"Gain needs 3 <= d <= n, got n={n} d={d}")
    return math.log2(sparse_factor(qary_volume(n, d - 1, 2), e_binary(n, d - 1)))


def sparse_gain_frontier(
    n_values: Iterable[int], ratio_range: tuple[float, float] = (0.1, 0.3)
) -> list[FrontierRow]:
    """Report, per n, the best d within d/n in ratio_range and every d with positive gain."""
    low, high = ratio_range
    rows = []
    for n in n_values:
        d_values = range(max(3, math.ceil(low * n)), min(n, math.floor(high * n)) + 1)
        if not d_values:
            LOGGER.warning(f"No distances with d/n in [{low}, {high}] for n={n}")
            continue
        gains = {d: sparse_gain_bits(n, d) for d in d_values}
        best_d = max(gains, key=lambda d: gains[d])
        improving = tuple(d for d, gain in gains.items() if gain > 0)
        LOGGER.info(f"n={n}: best d={best_d} gains {gains[best_d]:.6f} bits")
        rows.append(FrontierRow(n, best_d, gains[best_d], improving))
    return rows


def log_gain_constant_curve(n: int, d_values: Iterable[int]) -> list[tuple[int, float]]:
    """Get c(n, d) = sparse bound / (GV bound * log2 V(n, d-1)) for each d >= 3."""
    curve = []
    for d in d_values:
        volume = qary_volume(n, d - 1, 2)
        curve.append((d, sparse_factor(volume, e_binary(n, d - 1)) / log2_count(volume).log2))
    return curve
