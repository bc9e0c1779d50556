"""Unit tests for params.py."""

import pytest
from gv_bounds.errors import InvalidParametersError
from gv_bounds.params import CodeParams, SplitParams


def test_code_params_derived_values() -> None:
    """Test the radius and relative distance of an instance."""
    params = CodeParams(10, 4)

    assert params.d_prime == 3
    assert params.delta == pytest.approx(0.3)
    assert params.q == 2
    assert not params.constant_weight
    assert str(params) == "n=10 d=4 q=2"


def test_code_params_constant_weight() -> None:
    """Test a constant-weight instance."""
    params = CodeParams(8, 2, w=3)

    assert params.constant_weight
    assert str(params) == "n=8 d=2 q=2 w=3"


@pytest.mark.parametrize(
    "n,d,q,w",
    [(0, 1, 2, None), (4, 0, 2, None), (4, 5, 2, None), (4, 2, 1, None), (6, 2, 3, 2), (6, 3, 2, 2), (6, 2, 2, 7)],
)
def test_code_params_invalid(n: int, d: int, q: int, w: int | None) -> None:
    """Test that invalid instances are rejected."""
    with pytest.raises(InvalidParametersError):
        CodeParams(n, d, q, w)


def test_split_params() -> None:
    """Test the split parameters and their complement."""
    split = SplitParams(lam=0.75, epsilon=0.01)

    assert split.mu == pytest.approx(0.25)


@pytest.mark.parametrize("lam,epsilon", [(0.5, 0.01), (1.0, 0.01), (0.8, 0.0), (0.8, 1.0)])
def test_split_params_invalid(lam: float, epsilon: float) -> None:
    """Test that splits outside the analysed range are rejected."""
    with pytest.raises(InvalidParametersError):
        SplitParams(lam=lam, epsilon=epsilon)
