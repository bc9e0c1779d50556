"""Lower bounds on A(n, 2d, w) for constant-weight codes."""

from fractions import Fraction

from gv_bounds.bounds.generic_bound import BoundResult, FormulaId, GenericBound, rational_result
from gv_bounds.bounds.sparse import sparse_result
from gv_bounds.combinatorics import binomial, constant_weight_volume
from gv_bounds.errors import InvalidParametersError
from gv_bounds.params import CodeParams
from gv_bounds.sphere_graph import e_johnson


class ConstantWeightBound(GenericBound):
    """Bound on A(n, 2d, w) with d <= w <= n/2."""

    MIN_D = 1

    def is_applicable(self, params: CodeParams) -> bool:
        """Get whether the bound is defined for the instance."""
        return params.w is not None and 2 * params.w <= params.n and params.d >= self.MIN_D


class LevenshteinBound(ConstantWeightBound):
    """C(n, w) / V(n, d-1, w)."""

    @property
    def formula_id(self) -> FormulaId:
        """Get the identifier of the bound."""
        return FormulaId.LEV_CW

    def _compute(self, params: CodeParams) -> BoundResult:
        assert params.w is not None
        n, w = params.n, params.w
        value = Fraction(binomial(n, w), constant_weight_volume(n, params.d_prime, w))
        return rational_result(self.formula_id, value, params)


class SparseConstantWeightBound(ConstantWeightBound):
    """Sparse-graph improvement of the Levenshtein bound on the Johnson graph."""

    MIN_D = 2

    @property
    def formula_id(self) -> FormulaId:
        """Get the identifier of the bound."""
        return FormulaId.SPARSE_CW

    def _compute(self, params: CodeParams) -> BoundResult:
        assert params.w is not None
        n, radius, w = params.n, params.d_prime, params.w
        return sparse_result(
            self.formula_id,
            params,
            binomial(n, w),
            constant_weight_volume(n, radius, w),
            e_johnson(n, radius, w),
        )


def levenshtein_cw_bound(params: CodeParams) -> BoundResult:
    """Get the Levenshtein constant-weight Gilbert bound."""
    if params.w is None:
        raise InvalidParametersError(f"Constant-weight bound needs a weight, got {params}")
    return LevenshteinBound().compute(params)


def sparse_cw_bound(params: CodeParams) -> BoundResult:
    """Get the sparse-graph constant-weight bound."""
    if params.w is None:
        raise InvalidParametersError(f"Constant-weight bound needs a weight, got {params}")
    return SparseConstantWeightBound().compute(params)
