"""Exact combinatorial primitives.

Binomials, Hamming sphere volumes and the intersection numbers of the Hamming
and Johnson schemes. Counts are plain Python integers and exact rationals are
`fractions.Fraction`, so every comparison between counts is decided exactly.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from gv_bounds.errors import InvalidParametersError

LOGGER = logging.getLogger(__name__)

Count = int
Rational = Fraction

# bits kept from the top of a large integer when converting to log2
_MANTISSA_BITS = 64


@dataclass(frozen=True, order=True)
class LogValue:
    """Base-2 logarithm of a positive quantity."""

    log2: float

    def __post_init__(self) -> None:
        """Reject non-finite logarithms."""
        if not math.isfinite(self.log2):
            raise InvalidParametersError(f"LogValue must be finite, got {self.log2}")

    def __add__(self, other: "LogValue") -> "LogValue":
        """Multiply the underlying quantities."""
        return LogValue(self.log2 + other.log2)

    def __sub__(self, other: "LogValue") -> "LogValue":
        """Divide the underlying quantities."""
        return LogValue(self.log2 - other.log2)


def log2_count(x: Count) -> LogValue:
    """Convert a positive count to log2 using bit length and the leading word."""
    if x <= 0:
        raise InvalidParametersError(f"log2 of non-positive count {x}")
    shift = x.bit_length() - _MANTISSA_BITS
    if shift <= 0:
        return LogValue(math.log2(x))
    return LogValue(math.log2(x >> shift) + shift)


def log2_rational(x: Rational) -> LogValue:
    """Convert a positive rational to log2."""
    if x <= 0:
        raise InvalidParametersError(f"log2 of non-positive rational {x}")
    return log2_count(x.numerator) - log2_count(x.denominator)


def floor_log2(x: Count) -> int:
    """Get the exact value of floor(log2(x)) for a positive count."""
    if x <= 0:
        raise InvalidParametersError(f"log2 of non-positive count {x}")
    return x.bit_length() - 1


def binomial(n: int, k: int) -> Count:
    """Get C(n, k), zero outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def ceil_plus(x: Rational | int) -> int:
    """Get the smallest nonnegative integer m with m >= x."""
    return max(0, math.ceil(Fraction(x)))


def hamming_volume(n: int, d: int) -> Count:
    """Get the volume of a binary Hamming sphere of radius d."""
    return qary_volume(n, d, 2)


def qary_volume(n: int, d: int, q: int) -> Count:
    """Get the volume of a q-ary Hamming sphere of radius d."""
    if q < 2:
        raise InvalidParametersError(f"Alphabet size must be at least 2, got {q}")
    if d < 0:
        raise InvalidParametersError(f"Radius must be nonnegative, got {d}")
    return sum(binomial(n, i) * (q - 1) ** i for i in range(min(d, n) + 1))


def constant_weight_volume(n: int, r: int, w: int) -> Count:
    """Get the number of weight-w words within Johnson distance r of a weight-w word."""
    if r < 0:
        raise InvalidParametersError(f"Radius must be nonnegative, got {r}")
    return sum(binomial(w, i) * binomial(n - w, i) for i in range(r + 1))


def binary_entropy(x: float) -> float:
    """Get the binary entropy H2(x)."""
    if not 0 <= x <= 1:
        raise InvalidParametersError(f"Binary entropy argument outside [0, 1]: {x}")
    if x in (0, 1):
        return 0.0
    return -x * math.log2(x) - (1 - x) * math.log2(1 - x)


def hamming_intersection_number(n: int, q: int, w: int, i: int, j: int) -> Count:
    """Count words at distance i from u and j from v, where d(u, v) = w.

    The w coordinates where u and v differ split into positions agreeing with
    u, positions agreeing with v and positions agreeing with neither; the other
    n - w coordinates contribute e positions where x differs from both.
    """
    if q < 2:
        raise InvalidParametersError(f"Alphabet size must be at least 2, got {q}")
    total = 0
    for e in range(n - w + 1):
        agree_u = w + e - i
        agree_v = w + e - j
        neither = w - agree_u - agree_v
        if agree_u < 0 or agree_v < 0 or neither < 0:
            continue
        total += (
            binomial(n - w, e)
            * (q - 1) ** e
            * binomial(w, agree_u)
            * binomial(w - agree_u, agree_v)
            * (q - 2) ** neither
        )
    return total


def johnson_intersection_number(n: int, w: int, i: int, j: int, k: int) -> Count:
    """Get the Johnson scheme intersection number p^k_{i,j} on weight-w words."""
    if k > i + j:
        return 0
    low = max(0, i - k, j - k, i + j - w)
    high = min(i, j, i + j - k, n - w - k)
    return sum(
        binomial(n - w - k, m)
        * binomial(k, i - m)
        * binomial(k, j - m)
        * binomial(w - k, i + j - k - m)
        for m in range(low, high + 1)
    )


@dataclass(frozen=True)
class IntersectionVolume:
    """Volume of the intersection of two Hamming spheres.

    `by_definition` counts words within radius r of both centers using the
    intersection numbers. `displayed_formula` is the closed-form sum commonly
    quoted for it, which is None when the radius reaches the center distance.
    """

    n: int
    radius: int
    distance: int
    by_definition: Count
    displayed_formula: Count | None

    @property
    def agrees(self) -> bool:
        """Get whether both evaluations give the same volume."""
        return self.by_definition == self.displayed_formula


def sphere_intersection_volume(n: int, r: int, d: int) -> IntersectionVolume:
    """Get |B(u, r) & B(v, r)| for binary words u, v at distance d."""
    if not (0 <= r and 0 <= d <= n):
        raise InvalidParametersError(f"Invalid intersection volume parameters n={n} r={r} d={d}")
    radius = min(r, n)
    by_definition = sum(
        hamming_intersection_number(n, 2, d, i, j)
        for i in range(radius + 1)
        for j in range(radius + 1)
    )

    displayed: Count | None = None
    offset = d - r
    if offset >= 1:
        displayed = sum(
            binomial(offset, j) * binomial(n - offset, i - j)
            for i in range(offset, r + 1)
            for j in range((offset + i + 1) // 2, i + 1)
        )
        if displayed != by_definition:
            LOGGER.debug(
                f"Intersection volume mismatch for n={n} r={r} d={d}: "
                f"{by_definition} by definition, {displayed} by displayed formula"
            )

    return IntersectionVolume(n, r, d, by_definition, displayed)
