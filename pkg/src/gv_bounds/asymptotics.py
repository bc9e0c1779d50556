"""Entropy-domain analysis of the sphere graph sparsity.

The sphere graph has at most V^(2 - epsilon) edges for large n when both
f(delta) > 0 and g(delta) > 0, where

    f(delta) = (1 - eps) H(delta) - H(lam delta)
    g(delta) = (1 - eps) H(delta) - lam delta
               - (1 - lam delta) H((delta - lam delta / 2) / (1 - lam delta))

This module evaluates both curves, locates the largest delta where they stay
positive and emits the curves as plot-ready CSV.
"""

import csv
import logging
import math
from dataclasses import dataclass
from typing import TextIO

import numpy as np
import numpy.typing as npt
from scipy.optimize import bisect

from gv_bounds.combinatorics import binary_entropy, hamming_volume, log2_count
from gv_bounds.constants import (
    CSV_FLOAT_FORMAT,
    CURVE_HEADER,
    DEFAULT_CURVE_STEP,
    DEFAULT_GRID_STEP,
    DEFAULT_REFINE_TOL,
    FINITE_N_MARGIN,
)
from gv_bounds.errors import InvalidParametersError, ThresholdNotFoundError
from gv_bounds.params import CodeParams, SplitParams
from gv_bounds.sphere_graph import sphere_edge_count

LOGGER = logging.getLogger(__name__)

FloatArray = npt.NDArray[np.float64]


def _entropy(x: FloatArray) -> FloatArray:
    """Get H2 elementwise, with H2(0) = H2(1) = 0."""
    with np.errstate(divide="ignore", invalid="ignore"):
        h = -x * np.log2(x) - (1 - x) * np.log2(1 - x)
    return np.where((x <= 0) | (x >= 1), 0.0, h)


def f_curve(delta: npt.ArrayLike, epsilon: float, lam: float) -> FloatArray:
    """Evaluate f for raw (epsilon, lambda), without range checks."""
    x = np.asarray(delta, dtype=np.float64)
    return (1 - epsilon) * _entropy(x) - _entropy(lam * x)


def g_curve(delta: npt.ArrayLike, epsilon: float, lam: float) -> FloatArray:
    """Evaluate g for raw (epsilon, lambda), without range checks."""
    x = np.asarray(delta, dtype=np.float64)
    heavy = lam * x
    rest = 1 - heavy
    return (1 - epsilon) * _entropy(x) - heavy - rest * _entropy((x - heavy / 2) / rest)


def _check_delta(delta: float) -> None:
    if not 0 < delta <= 0.5:
        raise InvalidParametersError(f"Relative distance must satisfy 0 < delta <= 0.5, got {delta}")


def f_func(delta: float, split: SplitParams) -> float:
    """Get (1 - eps) H(delta) - H(lam delta)."""
    _check_delta(delta)
    return float(f_curve(delta, split.epsilon, split.lam))


def g_func(delta: float, split: SplitParams) -> float:
    """Get the second sparsity condition function at delta."""
    _check_delta(delta)
    inner = (delta - split.lam * delta / 2) / (1 - split.lam * delta)
    if not 0 <= inner <= 1:
        raise InvalidParametersError(f"Inner entropy argument {inner} outside [0, 1]")
    return float(g_curve(delta, split.epsilon, split.lam))


@dataclass(frozen=True)
class AsymptoticPoint:
    """Both condition functions at one relative distance."""

    delta: float
    f_value: float
    g_value: float

    @property
    def conditions_hold(self) -> bool:
        """Get whether both conditions hold strictly."""
        return self.f_value > 0 and self.g_value > 0


def evaluate_point(delta: float, split: SplitParams) -> AsymptoticPoint:
    """Evaluate both condition functions at delta."""
    return AsymptoticPoint(delta, f_func(delta, split), g_func(delta, split))


def conditions_hold(delta: float, split: SplitParams) -> bool:
    """Get whether f(delta) > 0 and g(delta) > 0."""
    return evaluate_point(delta, split).conditions_hold


@dataclass(frozen=True)
class ThresholdResult:
    """Largest delta where both conditions hold and the condition failing first beyond it."""

    delta: float
    binding: str | None
    last_grid_delta: float


def threshold_scan(
    split: SplitParams,
    grid_step: float = DEFAULT_GRID_STEP,
    refine_tol: float = DEFAULT_REFINE_TOL,
) -> ThresholdResult:
    """Scan (0, 0.5] on a grid and refine the first failure by bisection.

    `binding` is "f", "g" or "both", or None when the conditions hold on the
    whole grid.
    """
    if not 0 < grid_step <= 0.5:
        raise InvalidParametersError(f"Grid step must satisfy 0 < step <= 0.5, got {grid_step}")
    if refine_tol <= 0:
        raise InvalidParametersError(f"Refine tolerance must be positive, got {refine_tol}")

    count = int(math.floor(0.5 / grid_step + 1e-9))
    grid = np.minimum(np.arange(1, count + 1) * grid_step, 0.5)
    f = f_curve(grid, split.epsilon, split.lam)
    g = g_curve(grid, split.epsilon, split.lam)
    holds = (f > 0) & (g > 0)

    if not holds[0]:
        raise ThresholdNotFoundError(
            f"Conditions fail at the first grid point {grid[0]} for lambda={split.lam} epsilon={split.epsilon}"
        )
    if holds.all():
        LOGGER.info(f"Conditions hold on the whole grid up to {grid[-1]}")
        return ThresholdResult(float(grid[-1]), None, float(grid[-1]))

    k = int(np.argmin(holds))
    low, high = float(grid[k - 1]), float(grid[k])
    roots = {}
    for name, curve, value in (("f", f_curve, f[k]), ("g", g_curve, g[k])):
        if value <= 0:
            roots[name] = float(
                bisect(lambda x, c=curve: float(c(x, split.epsilon, split.lam)), low, high, xtol=refine_tol)
            )
    delta = min(roots.values())
    binding = "both" if len(roots) == 2 and roots["f"] == roots["g"] else min(roots, key=lambda name: roots[name])
    LOGGER.info(f"Threshold {delta:.9f} between grid points {low} and {high}, {binding} binding")
    return ThresholdResult(delta, binding, low)


def gilbert_rate(delta: float) -> float:
    """Get the asymptotic Gilbert-Varshamov rate 1 - H2(delta)."""
    if not 0 <= delta <= 0.5:
        raise InvalidParametersError(f"Relative distance must satisfy 0 <= delta <= 0.5, got {delta}")
    return 1 - binary_entropy(delta)


def ratio_decay_check(params: CodeParams, split: SplitParams) -> float:
    """Get log2(e(G_S) / V(n, d')^(2 - eps)), or -inf for an edgeless sphere graph."""
    if 2 * params.d_prime > params.n:
        raise InvalidParametersError(f"Ratio check needs d' <= n/2, got {params}")
    edges = sphere_edge_count(params)
    if edges == 0:
        return -math.inf
    volume = hamming_volume(params.n, params.d_prime)
    return log2_count(edges).log2 - (2 - split.epsilon) * log2_count(volume).log2


def sparsity_holds_at(n: int, delta: float, split: SplitParams, margin: float = FINITE_N_MARGIN) -> bool:
    """Check log2 e(G_S) < (2 - eps) log2 V(n, d') + margin n for d' = floor(delta n)."""
    d_prime = math.floor(delta * n)
    if d_prime < 1:
        return True
    ratio = ratio_decay_check(CodeParams(n, d_prime + 1), split)
    return ratio < margin * n


def emit_curves(
    split: SplitParams,
    delta_range: tuple[float, float],
    step: float = DEFAULT_CURVE_STEP,
    sink: TextIO | None = None,
) -> list[AsymptoticPoint]:
    """Evaluate both curves on delta_range and write them as CSV to sink.

    A range with start > stop produces the header only.
    """
    start, stop = delta_range
    if step <= 0:
        raise InvalidParametersError(f"Curve step must be positive, got {step}")
    if not (0 < start and stop <= 0.5):
        raise InvalidParametersError(f"Curve range must lie within (0, 0.5], got [{start}, {stop}]")

    if start > stop:
        deltas = np.empty(0)
    else:
        count = int(math.floor((stop - start) / step + 1e-9)) + 1
        deltas = np.minimum(start + step * np.arange(count), stop)
    f = f_curve(deltas, split.epsilon, split.lam)
    g = g_curve(deltas, split.epsilon, split.lam)
    points = [AsymptoticPoint(float(x), float(fx), float(gx)) for x, fx, gx in zip(deltas, f, g)]
    LOGGER.debug(f"Evaluated {len(points)} curve points on [{start}, {stop}]")

    if sink is not None:
        writer = csv.writer(sink, lineterminator="\n")
        writer.writerow(CURVE_HEADER)
        for point in points:
            writer.writerow(
                [
                    CSV_FLOAT_FORMAT.format(point.delta),
                    CSV_FLOAT_FORMAT.format(point.f_value),
                    CSV_FLOAT_FORMAT.format(point.g_value),
                    str(point.conditions_hold).lower(),
                ]
            )
    return points
