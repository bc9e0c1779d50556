"""Gilbert-Varshamov bound and its classical improvements."""

import logging
from fractions import Fraction

from gv_bounds.bounds.generic_bound import (
    EXCLUDED_FROM_BEST,
    BinaryBound,
    BoundResult,
    FormulaId,
    GenericBound,
    rational_result,
)
from gv_bounds.combinatorics import (
    Count,
    floor_log2,
    hamming_volume,
    qary_volume,
    sphere_intersection_volume,
)
from gv_bounds.errors import InvalidParametersError
from gv_bounds.params import CodeParams

LOGGER = logging.getLogger(__name__)


def _power_floor(n: int, d: int) -> Count:
    """Get 2^floor(log2 V(n, d))."""
    return 1 << floor_log2(hamming_volume(n, d))


class GilbertVarshamovBound(GenericBound):
    """q^n / V_q(n, d - 1)."""

    @property
    def formula_id(self) -> FormulaId:
        """Get the identifier of the bound."""
        return FormulaId.GV

    def is_applicable(self, params: CodeParams) -> bool:
        """Get whether the bound is defined for the instance."""
        return params.w is None

    def _compute(self, params: CodeParams) -> BoundResult:
        value = Fraction(params.q**params.n, qary_volume(params.n, params.d_prime, params.q))
        formula = FormulaId.GV if params.q == 2 else FormulaId.QGV
        return rational_result(formula, value, params)


class VarshamovBound(BinaryBound):
    """Linear-code bound 2^(n-1) / 2^floor(log2 V(n-1, d-2))."""

    MIN_D = 2
    MIN_N = 2

    @property
    def formula_id(self) -> FormulaId:
        """Get the identifier of the bound."""
        return FormulaId.VARSHAMOV

    def _compute(self, params: CodeParams) -> BoundResult:
        n, d = params.n, params.d
        return rational_result(self.formula_id, Fraction(2 ** (n - 1), _power_floor(n - 1, d - 2)), params)


class EliaBound(BinaryBound):
    """2^(n-2) over the larger of the powers of two below V(n-3, d-2) and V(n-2, d-3)."""

    MIN_D = 3
    MIN_N = 4

    @property
    def formula_id(self) -> FormulaId:
        """Get the identifier of the bound."""
        return FormulaId.ELIA

    def _compute(self, params: CodeParams) -> BoundResult:
        n, d = params.n, params.d
        denominator = max(_power_floor(n - 3, d - 2), _power_floor(n - 2, d - 3))
        return rational_result(self.formula_id, Fraction(2 ** (n - 2), denominator), params)


def _tolhuizen_holds(space: Count, volume: Count, m: int) -> bool:
    """Decide 2^n/M + r(M - r)/(2^n M) > V exactly, r = 2^n mod M."""
    r = space % m
    return space * space + r * (m - r) > volume * space * m


class TolhuizenBound(BinaryBound):
    """f_T + 1, with f_T the largest M satisfying the Turan-type inequality.

    Above 2^n/V the inequality cannot hold, so f_T lies within one of the
    Gilbert-Varshamov quotient and a short exact window around it suffices.

    At d = 1 the inequality first fails at M = 2^n, so f_T = 2^n - 1 and the
    bound is the whole space 2^n.
    """

    WINDOW = 2

    @property
    def formula_id(self) -> FormulaId:
        """Get the identifier of the bound."""
        return FormulaId.TOLHUIZEN

    def _compute(self, params: CodeParams) -> BoundResult:
        space = 2**params.n
        volume = hamming_volume(params.n, params.d_prime)
        quotient = space // volume
        low = max(1, quotient - self.WINDOW)
        high = min(space, quotient + self.WINDOW)

        f_t = next(
            (m for m in range(high, low - 1, -1) if _tolhuizen_holds(space, volume, m)),
            None,
        )
        if f_t is None:
            LOGGER.debug(f"Tolhuizen window [{low}, {high}] empty for {params}, descending")
            f_t = next(m for m in range(low - 1, 0, -1) if _tolhuizen_holds(space, volume, m))

        value = min(f_t + 1, space)
        return rational_result(self.formula_id, Fraction(value), params, f_t=f_t)


class FabrisFirstBound(BinaryBound):
    """(2^n - I(n, d-1)) / (V(n, d-1) - I(n, d-1))."""

    MIN_D = 2

    @property
    def formula_id(self) -> FormulaId:
        """Get the identifier of the bound."""
        return FormulaId.FABRIS1

    def _compute(self, params: CodeParams) -> BoundResult:
        n, d = params.n, params.d
        overlap = sphere_intersection_volume(n, d - 1, d).by_definition
        volume = hamming_volume(n, d - 1)
        return rational_result(
            self.formula_id,
            Fraction(2**n - overlap, volume - overlap),
            params,
            intersection=overlap,
        )


class FabrisSecondBound(BinaryBound):
    """(2^n / V(n, d-1)) (V(n, d-1) + I(n, d-2)) / V(n, d-2).

    Evaluated as written it exceeds the true optimum on small instances such
    as (4, 3), so it is reported but never selected as the best bound.
    """

    MIN_D = 3

    @property
    def formula_id(self) -> FormulaId:
        """Get the identifier of the bound."""
        return FormulaId.FABRIS2

    def _compute(self, params: CodeParams) -> BoundResult:
        n, d = params.n, params.d
        overlap = sphere_intersection_volume(n, d - 2, d).by_definition
        outer = hamming_volume(n, d - 1)
        value = Fraction(2**n, outer) * Fraction(outer + overlap, hamming_volume(n, d - 2))
        return rational_result(
            self.formula_id,
            value,
            params,
            intersection=overlap,
            **{EXCLUDED_FROM_BEST: True},
        )


def bgs_term(params: CodeParams, b: int) -> Fraction:
    """Get the BGS quotient for one value of the parameter b."""
    n, d = params.n, params.d
    if not 0 <= b <= d - 1:
        raise InvalidParametersError(f"BGS parameter must satisfy 0 <= b <= d - 1, got b={b}")
    denominator = max(_power_floor(n - b - 1, d - 2), _power_floor(n - b, d - b - 1))
    return Fraction(2**n, 2**b * denominator)


class BGSBound(BinaryBound):
    """Maximum over b of the BGS generalisation of the Elia bound."""

    MIN_D = 2

    def __init__(self, b_max: int | None = None) -> None:
        """Initialize an instance."""
        self.b_max = b_max

    @property
    def formula_id(self) -> FormulaId:
        """Get the identifier of the bound."""
        return FormulaId.BGS

    def _compute(self, params: CodeParams) -> BoundResult:
        top = params.d - 1 if self.b_max is None else min(self.b_max, params.d - 1)
        if top < 0:
            raise InvalidParametersError(f"BGS parameter range is empty for b_max={self.b_max}")
        # ties go to the smallest b
        best_b = max(range(top + 1), key=lambda b: (bgs_term(params, b), -b))
        return rational_result(self.formula_id, bgs_term(params, best_b), params, b=best_b)


def gv_bound(params: CodeParams) -> BoundResult:
    """Get the Gilbert-Varshamov bound, q-ary when params.q > 2."""
    return GilbertVarshamovBound().compute(params)


def varshamov_bound(params: CodeParams) -> BoundResult:
    """Get the Varshamov bound."""
    return VarshamovBound().compute(params)


def elia_bound(params: CodeParams) -> BoundResult:
    """Get the Elia bound."""
    return EliaBound().compute(params)


def tolhuizen_bound(params: CodeParams) -> BoundResult:
    """Get the Tolhuizen bound."""
    return TolhuizenBound().compute(params)


def fabris_bounds(params: CodeParams) -> tuple[BoundResult, BoundResult | None]:
    """Get both Fabris bounds; the second one is None for d = 2."""
    first = FabrisFirstBound().compute(params)
    second_bound = FabrisSecondBound()
    second = second_bound.compute(params) if second_bound.is_applicable(params) else None
    return first, second


def bgs_bound(params: CodeParams, b_max: int | None = None) -> BoundResult:
    """Get the BGS bound optimised over b <= b_max."""
    return BGSBound(b_max).compute(params)


def ndg_coloring_bound(n: int, d: int) -> Count:
    """Get 2^(floor(log2 V(n-1, d-1)) + 1), an upper bound on the distance-d chromatic number."""
    if not 1 <= d <= n:
        raise InvalidParametersError(f"Coloring bound needs 1 <= d <= n, got n={n} d={d}")
    return 2 ** (floor_log2(hamming_volume(n - 1, d - 1)) + 1)
