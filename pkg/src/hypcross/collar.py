"""Collar half-widths around short geodesics, the asymmetric (widened) collar
profile, the hexagon gap identity, and the embedded cusp-neighborhood constant.

Only widths and gap values are computed here; the embeddedness statements they
come from enter the test suite as inequality checks over grids.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


class NonPositiveLength(ValueError):
    """Core length of a collar must be strictly positive."""


def _check_positive(x: float) -> None:
    if not x > 0.0:
        raise NonPositiveLength(f"core length must be > 0, got {x}")


def collar_width(x: float) -> float:
    """Symmetric collar half-width asinh(1/sinh(x/2)); strictly decreasing."""
    _check_positive(x)
    return math.asinh(1.0 / math.sinh(0.5 * x))


def wide_width(x: float) -> float:
    """Half-width asinh(1/sinh(x/4)) of the wide side of the asymmetric collar."""
    _check_positive(x)
    return math.asinh(1.0 / math.sinh(0.25 * x))


def generalized_width(x: float) -> tuple[float, float]:
    """Asymmetric half-width pair (wide, narrow) = (w1(x), 2 w(x) - w1(x)).

    The narrow side is returned unclamped; it goes negative once the core is
    long enough that the widened side eats the whole symmetric collar (see
    CollarProfile for the clamped version).
    """
    w1 = wide_width(x)
    return w1, 2.0 * collar_width(x) - w1


def hexagon_gap(x: float) -> float:
    """Twice the distance 2*log((e^{x/4}+1)/(e^{x/4}-1)) between the core chord
    and the far side of the right-angled hexagon pair bounding the pants around
    a core of length x.  Equals 2*wide_width(x) exactly (asinh(1/sinh t) =
    log coth(t/2))."""
    _check_positive(x)
    return 2.0 * math.log1p(2.0 / math.expm1(0.25 * x))


def cusp_horocycle_bound() -> float:
    """Boundary length of the horocycle neighborhood embedded around any cusp."""
    return 4.0


@dataclass(frozen=True)
class CollarProfile:
    """Widths of the collar around a core of a given length: symmetric
    half-width w, wide side w1 > w, and the remaining narrow side 2w - w1
    clamped at zero.  degenerate is True when the clamp fired (core too long
    for the asymmetric collar to keep a positive narrow side)."""

    core_length: float
    w: float
    w1: float
    w_narrow: float
    degenerate: bool

    @classmethod
    def from_core_length(cls, x: float) -> "CollarProfile":
        w = collar_width(x)
        w1, narrow = generalized_width(x)
        return cls(x, w, w1, max(narrow, 0.0), narrow < 0.0)


GRID_POINTS = 10_000


def _grid(lo: float, hi: float, n: int) -> np.ndarray:
    # uniform grid on (0, hi] style ranges: endpoints included, zero excluded
    return np.linspace(lo, hi, n)


def width_scan(grid: int = GRID_POINTS) -> dict:
    """Grid audit of the width inequalities and the gap identity.

    Checks, each over `grid` uniform points:
      * w1 > w on (0, 20]
      * w1 < 2w on (0, 2.3]
      * hexagon_gap == 2*w1 to 1e-12
      * w and w1 strictly decreasing (negative finite differences)
    and locates the crossover core length where w1 = 2w (it lies beyond 2.3).
    """
    xs = _grid(20.0 / grid, 20.0, grid)
    w = np.arcsinh(1.0 / np.sinh(xs / 2.0))
    w1 = np.arcsinh(1.0 / np.sinh(xs / 4.0))
    gap = 2.0 * np.log1p(2.0 / np.expm1(xs / 4.0))

    xs_short = _grid(2.3 / grid, 2.3, grid)
    w_s = np.arcsinh(1.0 / np.sinh(xs_short / 2.0))
    w1_s = np.arcsinh(1.0 / np.sinh(xs_short / 4.0))

    f = lambda x: wide_width(x) - 2.0 * collar_width(x)
    lo, hi = 2.3, 10.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if f(lo) * f(mid) <= 0.0:
            hi = mid
        else:
            lo = mid

    return {
        "grid_points": grid,
        "w1_minus_w_min": float(np.min(w1 - w)),
        "w1_gt_w_on_0_20": bool(np.all(w1 > w)),
        "twow_minus_w1_min_short": float(np.min(2.0 * w_s - w1_s)),
        "w1_lt_2w_on_0_2.3": bool(np.all(w1_s < 2.0 * w_s)),
        "gap_identity_max_abs_dev": float(np.max(np.abs(gap - 2.0 * w1))),
        "w_decreasing": bool(np.all(np.diff(w) < 0.0)),
        "w1_decreasing": bool(np.all(np.diff(w1) < 0.0)),
        "w1_eq_2w_crossover": 0.5 * (lo + hi),
    }
