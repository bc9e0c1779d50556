"""Problem instance descriptors shared by every module."""

from dataclasses import dataclass

from gv_bounds.constants import DEFAULT_Q, MIN_LAMBDA
from gv_bounds.errors import InvalidParametersError


@dataclass(frozen=True, order=True)
class CodeParams:
    """Length, minimum distance, alphabet size and optional constant weight.

    For constant-weight instances `d` is the half-distance: codes have minimum
    Hamming distance 2d, i.e. Johnson distance d.
    """

    n: int
    d: int
    q: int = DEFAULT_Q
    w: int | None = None

    def __post_init__(self) -> None:
        """Validate the instance."""
        if self.n < 1:
            raise InvalidParametersError(f"Length must be positive, got n={self.n}")
        if not 1 <= self.d <= self.n:
            raise InvalidParametersError(f"Distance must satisfy 1 <= d <= n, got n={self.n} d={self.d}")
        if self.q < 2:
            raise InvalidParametersError(f"Alphabet size must be at least 2, got q={self.q}")
        if self.w is not None:
            if self.q != 2:
                raise InvalidParametersError("Constant-weight instances are binary")
            if not self.d <= self.w <= self.n:
                raise InvalidParametersError(
                    f"Weight must satisfy d <= w <= n, got n={self.n} d={self.d} w={self.w}"
                )

    @property
    def d_prime(self) -> int:
        """Get the radius d' = d - 1 of the Gilbert graph adjacency."""
        return self.d - 1

    @property
    def delta(self) -> float:
        """Get the relative radius d'/n."""
        return self.d_prime / self.n

    @property
    def constant_weight(self) -> bool:
        """Get whether the instance is a constant-weight one."""
        return self.w is not None

    def __str__(self) -> str:
        """Get a compact description of the instance."""
        text = f"n={self.n} d={self.d} q={self.q}"
        if self.w is not None:
            text += f" w={self.w}"
        return text


@dataclass(frozen=True)
class SplitParams:
    """Weight split lambda and sparsity exponent epsilon of the asymptotic analysis."""

    lam: float
    epsilon: float

    def __post_init__(self) -> None:
        """Validate the split."""
        if not MIN_LAMBDA <= self.lam < 1:
            raise InvalidParametersError(f"Lambda must satisfy 2/3 <= lambda < 1, got {self.lam}")
        if not 0 < self.epsilon < 1:
            raise InvalidParametersError(f"Epsilon must satisfy 0 < epsilon < 1, got {self.epsilon}")

    @property
    def mu(self) -> float:
        """Get mu = 1 - lambda."""
        return 1 - self.lam
