"""Length of a geodesic arc that winds through a collar or a cusp neighborhood.

The dictionary runs both ways (winding number <-> arc length), and each closed
form has an independent geometric oracle: an explicit Saccheri quadrilateral
built in the half-plane for collar arcs, and the point-pair distance on the
height-one horocycle for cusp arcs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .halfplane import Point, dist


@dataclass(frozen=True)
class CollarArcQuery:
    """Arc winding W times through a collar of the given core length, with
    endpoints at distance `width` from the core."""

    W: float
    core_length: float
    width: float

    def __post_init__(self):
        for v in (self.W, self.core_length, self.width):
            if not (math.isfinite(v) and v > 0.0):
                raise ValueError(f"all query fields must be finite and > 0, got {v}")


@dataclass(frozen=True)
class CuspArcQuery:
    """Arc winding W times through the embedded length-4 cusp neighborhood."""

    W: float

    def __post_init__(self):
        if not (math.isfinite(self.W) and self.W > 0.0):
            raise ValueError(f"W must be finite and > 0, got {self.W}")


def collar_arc_length(q: CollarArcQuery) -> float:
    """2*asinh(sinh(W*core/2) * cosh(width)); increasing in every argument."""
    return 2.0 * math.asinh(math.sinh(0.5 * q.W * q.core_length) * math.cosh(q.width))


def cusp_arc_length(q: CuspArcQuery) -> float:
    """2*log(2W + sqrt(4W^2 + 1)), the length of an arc of winding W whose
    endpoints sit on the length-4 boundary horocycle."""
    w2 = 2.0 * q.W
    return 2.0 * math.log(w2 + math.sqrt(w2 * w2 + 1.0))


def winding_from_length(l: float, core_length: float, width: float) -> float:
    """Exact inverse of collar_arc_length in W."""
    if l <= 0.0:
        raise ValueError(f"arc length must be > 0, got {l}")
    return 2.0 * math.asinh(math.sinh(0.5 * l) / math.cosh(width)) / core_length


def cusp_winding_from_length(l: float) -> float:
    """Exact inverse of cusp_arc_length in W."""
    if l <= 0.0:
        raise ValueError(f"arc length must be > 0, got {l}")
    return 0.5 * math.sinh(0.5 * l)


def saccheri_top_length(W: float, core_length: float, width: float) -> float:
    """Independent oracle for collar_arc_length.

    Realize the core lift as the imaginary axis, drop the two feet at heights
    1 and e^{W*core}, walk distance `width` along the perpendicular half-circles
    (exponential-map parametrization tan(phi/2) = e^{-width}), and measure the
    top side of the resulting Saccheri quadrilateral with the generic distance
    formula.
    """
    d = W * core_length
    phi = 2.0 * math.atan(math.exp(-width))
    top1 = Point(math.cos(phi), math.sin(phi))
    scale = math.exp(d)
    top2 = Point(scale * math.cos(phi), scale * math.sin(phi))
    return dist(top1, top2)


def verify_cusp_lemma_geometrically(W: float, samples: int) -> float:
    """Max deviation between cusp_arc_length and the half-plane distance of the
    endpoint pair (-2w, 1), (2w, 1), over `samples` log-spaced winding numbers
    up to W.  Both sides are exact closed forms; deviation is float noise."""
    if W <= 0.0:
        raise ValueError(f"W must be > 0, got {W}")
    ws = np.geomspace(W * 1e-3, W, samples) if samples > 1 else np.array([W])
    worst = 0.0
    for w in ws:
        oracle = dist(Point(-2.0 * w, 1.0), Point(2.0 * w, 1.0))
        worst = max(worst, abs(oracle - cusp_arc_length(CuspArcQuery(float(w)))))
    return worst
