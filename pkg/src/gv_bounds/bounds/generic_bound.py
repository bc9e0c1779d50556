"""Generic bound handling for gv-bounds."""

import math
from abc import ABC, abstractmethod
from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any

from gv_bounds.combinatorics import Count, LogValue, Rational, log2_rational
from gv_bounds.errors import InvalidParametersError
from gv_bounds.params import CodeParams


class FormulaId(Enum):
    """Identifiers of the bound formulas, in table order."""

    GV = "GV"
    QGV = "QGV"
    VARSHAMOV = "VARSHAMOV"
    ELIA = "ELIA"
    TOLHUIZEN = "TOLHUIZEN"
    FABRIS1 = "FABRIS1"
    FABRIS2 = "FABRIS2"
    BGS = "BGS"
    SPARSE_GV = "SPARSE_GV"
    SPARSE_QARY = "SPARSE_QARY"
    LEV_CW = "LEV_CW"
    SPARSE_CW = "SPARSE_CW"
    NDG_COLORING = "NDG_COLORING"


# aux key marking results that must never win a best-of comparison
EXCLUDED_FROM_BEST = "excluded_from_best"


@dataclass(frozen=True)
class BoundResult:
    """Value of one lower bound on one instance.

    `exact` is present for bounds with a closed rational form. `floor_int` is
    the floor of the value clamped to be nonnegative.
    """

    formula_id: FormulaId
    exact: Rational | None
    log2_value: LogValue
    floor_int: Count
    params: CodeParams
    aux: Mapping[str, Any] = field(default_factory=dict)

    @property
    def eligible(self) -> bool:
        """Get whether the result may be selected as the best bound."""
        return not self.aux.get(EXCLUDED_FROM_BEST, False)


def rational_result(
    formula_id: FormulaId, value: Rational, params: CodeParams, **aux: Any
) -> BoundResult:
    """Build a result from an exact rational value."""
    value = Fraction(value)
    return BoundResult(
        formula_id,
        value,
        log2_rational(value),
        max(0, math.floor(value)),
        params,
        aux,
    )


def scaled_result(
    formula_id: FormulaId,
    base: Rational,
    factor: float,
    params: CodeParams,
    **aux: Any,
) -> BoundResult:
    """Build a result equal to an exact rational times a positive real factor."""
    if factor <= 0:
        raise InvalidParametersError(f"{formula_id.value} factor must be positive, got {factor}")
    base = Fraction(base)
    return BoundResult(
        formula_id,
        None,
        log2_rational(base) + LogValue(math.log2(factor)),
        max(0, math.floor(base * Fraction(factor))),
        params,
        aux,
    )


class GenericBound(ABC):
    """Lower bound on the size of a code."""

    @property
    @abstractmethod
    def formula_id(self) -> FormulaId:
        """Get the identifier of the bound."""

    @abstractmethod
    def is_applicable(self, params: CodeParams) -> bool:
        """Get whether the bound is defined for the instance."""

    @abstractmethod
    def _compute(self, params: CodeParams) -> BoundResult:
        """Evaluate the bound on an instance it applies to."""

    def compute(self, params: CodeParams) -> BoundResult:
        """Evaluate the bound, rejecting instances it does not apply to."""
        if not self.is_applicable(params):
            raise InvalidParametersError(f"{self.formula_id.value} does not apply to {params}")
        return self._compute(params)


class BinaryBound(GenericBound):
    """Bound on A2(n, d) for unrestricted binary codes."""

    MIN_D = 1
    MIN_N = 1

    def is_applicable(self, params: CodeParams) -> bool:
        """Get whether the bound is defined for the instance."""
        return (
            params.q == 2
            and params.w is None
            and params.d >= self.MIN_D
            and params.n >= self.MIN_N
        )
