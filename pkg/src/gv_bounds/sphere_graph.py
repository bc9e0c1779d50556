"""Closed-form degree and edge counts of sphere graphs.

The sphere graph is the subgraph of the Gilbert graph induced by the
neighbourhood of the zero word: words of weight 1..d' with edges between words
at distance at most d'. Every vertex neighbourhood of the Gilbert graph is
isomorphic to it, so its edge count measures how locally sparse the Gilbert
graph is.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from gv_bounds.combinatorics import (
    Count,
    Rational,
    binary_entropy,
    binomial,
    ceil_plus,
    johnson_intersection_number,
)
from gv_bounds.errors import InvalidParametersError
from gv_bounds.params import CodeParams, SplitParams

LOGGER = logging.getLogger(__name__)


def _adjacent_of_weight(n: int, radius: int, w: int, i: int) -> Count:
    """Count weight-i words within distance radius of a fixed weight-w word."""
    low = ceil_plus(Fraction(w + i - radius, 2))
    return sum(binomial(w, j) * binomial(n - w, i - j) for j in range(low, min(w, i) + 1))


def _binary_degree(n: int, radius: int, w: int) -> Count:
    """Get the degree of a weight-w vertex in the binary sphere graph."""
    return sum(_adjacent_of_weight(n, radius, w, i) for i in range(1, radius + 1)) - 1


def _qary_degree(n: int, radius: int, q: int, w: int) -> Count:
    """Get the degree of a weight-w vertex in the q-ary sphere graph."""
    total = 0
    for i in range(1, radius + 1):
        top = min(w, i)
        for j in range(top + 1):
            low = ceil_plus(w + i - j - min(radius + j, n))
            for k in range(low, top - j + 1):
                c = j + k
                total += (
                    binomial(w, j)
                    * binomial(w - j, k)
                    * binomial(n - w, i - c)
                    * (q - 2) ** k
                    * (q - 1) ** (i - c)
                )
    return total - 1


def _check_vertex_weight(params: CodeParams, w: int) -> None:
    """Make sure a weight belongs to the sphere graph."""
    if not 1 <= w <= params.d_prime:
        raise InvalidParametersError(
            f"Vertex weight must satisfy 1 <= w <= d' = {params.d_prime}, got {w}"
        )


def sphere_degree(params: CodeParams, w: int) -> Count:
    """Get the degree of a weight-w vertex in the binary sphere graph."""
    _check_vertex_weight(params, w)
    return _binary_degree(params.n, params.d_prime, w)


def qary_sphere_degree(params: CodeParams, w: int) -> Count:
    """Get the degree of a weight-w vertex in the q-ary sphere graph."""
    _check_vertex_weight(params, w)
    return _qary_degree(params.n, params.d_prime, params.q, w)


def sphere_edge_count(params: CodeParams) -> Count:
    """Get the number of edges of the binary sphere graph."""
    n, radius = params.n, params.d_prime
    handshake = sum(binomial(n, w) * _binary_degree(n, radius, w) for w in range(1, radius + 1))
    if handshake % 2:
        raise ArithmeticError(f"Odd degree sum {handshake} for {params}")
    return handshake // 2


def _check_radius(n: int, d: int) -> None:
    if not 0 <= d <= n:
        raise InvalidParametersError(f"Radius must satisfy 0 <= d <= n, got n={n} d={d}")


def e_binary(n: int, d: int) -> Count:
    """Get e(n, d), one third of the edge count of the radius-d sphere graph."""
    _check_radius(n, d)
    total = sum(binomial(n, w) * _binary_degree(n, d, w) for w in range(1, d + 1))
    if total % 6:
        raise ArithmeticError(f"e({n}, {d}) sum {total} is not divisible by 6")
    return total // 6


def qary_sphere_edge_count(n: int, d: int, q: int) -> Count:
    """Get the number of edges of the radius-d q-ary sphere graph."""
    _check_radius(n, d)
    handshake = sum(
        binomial(n, w) * (q - 1) ** w * _qary_degree(n, d, q, w) for w in range(1, d + 1)
    )
    if handshake % 2:
        raise ArithmeticError(f"Odd degree sum {handshake} for n={n} d={d} q={q}")
    return handshake // 2


def e_qary(n: int, d: int, q: int) -> Rational:
    """Get e_q(n, d), one third of the edge count of the radius-d q-ary sphere graph.

    For q > 2 the edge count need not be divisible by three, so the value is
    an exact rational.
    """
    if q < 2:
        raise InvalidParametersError(f"Alphabet size must be at least 2, got q={q}")
    return Fraction(qary_sphere_edge_count(n, d, q), 3)


def johnson_sphere_edge_count(n: int, d: int, w: int) -> Count:
    """Get the number of edges of the radius-d sphere graph on weight-w words."""
    if not 0 <= d <= w <= n:
        raise InvalidParametersError(f"Johnson parameters must satisfy 0 <= d <= w <= n, got n={n} d={d} w={w}")
    radius = range(1, d + 1)
    total = sum(
        binomial(w, k) * binomial(n - w, k) * johnson_intersection_number(n, w, i, j, k)
        for i in radius
        for j in radius
        for k in radius
    )
    if total % 2:
        raise ArithmeticError(f"Odd degree sum {total} for n={n} d={d} w={w}")
    return total // 2


def e_johnson(n: int, d: int, w: int) -> Rational:
    """Get e(n, d, w), one third of the Johnson sphere graph edge count."""
    return Fraction(johnson_sphere_edge_count(n, d, w), 3)


def gilbert_triangle_count(n: int, d: int, q: int = 2) -> Count:
    """Get the number of triangles of the q-ary Gilbert graph.

    Each vertex lies in as many triangles as its neighbourhood has edges and
    each triangle is counted at three vertices.
    """
    _check_radius(n, d - 1)
    triangles = q**n * e_qary(n, d - 1, q)
    if triangles.denominator != 1:
        raise ArithmeticError(f"Non-integral triangle count {triangles}")
    return triangles.numerator


def _split_boundary(params: CodeParams, split: SplitParams) -> int:
    """Get the first weight of the heavy part of the split."""
    if params.d_prime < 1:
        raise InvalidParametersError(f"Split needs d' >= 1, got {params}")
    if 2 * params.d_prime >= params.n:
        raise InvalidParametersError(f"Split needs d' < n/2, got {params}")
    return max(1, math.floor(Fraction(str(split.lam)) * params.d_prime))


def split_e1_e2(params: CodeParams, split: SplitParams) -> tuple[Count, Count]:
    """Split the sum of deg(v) + 1 by vertex weight below and above lambda d'."""
    boundary = _split_boundary(params, split)
    n, radius = params.n, params.d_prime

    def part(weights: range) -> Count:
        return sum(binomial(n, w) * (_binary_degree(n, radius, w) + 1) for w in weights)

    e1 = part(range(1, boundary))
    e2 = part(range(boundary, radius + 1))
    LOGGER.debug(f"Split of {params} at weight {boundary}: e1={e1} e2={e2}")
    return e1, e2


@dataclass(frozen=True)
class EntropyExponents:
    """Log2-domain upper bounds on the parts of the split."""

    e1: float
    h1: float
    h2: float
    e2: float


def entropy_upper_bounds(params: CodeParams, split: SplitParams) -> EntropyExponents:
    """Get the entropy exponents bounding e1, e2 and the heavy-vertex degree parts."""
    _split_boundary(params, split)
    n, delta, lam, mu = params.n, params.delta, split.lam, split.mu
    heavy = lam * delta
    rest = 1 - heavy
    tail = binary_entropy((delta - heavy / 2) / rest)

    e1 = n * (binary_entropy(delta) + binary_entropy(heavy))
    h1 = n * heavy * binary_entropy(mu / lam) + n * rest * binary_entropy(mu * delta / rest)
    h2 = math.log2(n * heavy) + n * heavy + n * rest * tail
    e2 = math.log2(n * heavy + 1) + n * (binary_entropy(delta) + heavy + rest * tail)
    return EntropyExponents(e1, h1, h2, e2)


def heavy_weight_degree_floor(n: int) -> Count:
    """Get the floor on deg(v) + 1 for weight-n/2 vertices of the radius-n/2 sphere graph."""
    if n % 2:
        raise InvalidParametersError(f"Heavy-weight floor needs even n, got {n}")
    total = sum(binomial(n, w) for w in range(1, n // 2 + 1))
    return -(-total // 2)
