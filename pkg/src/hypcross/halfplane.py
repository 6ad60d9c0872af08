"""Upper half-plane primitives: isometries, distance, axes, trace-length dictionary."""

from __future__ import annotations

import math
from dataclasses import dataclass

# Boundary points of the half-plane are reals, with math.inf as the point at
# infinity.  Every consumer of a boundary value handles INFINITY explicitly.
INFINITY = math.inf

DET_TOL = 1e-12
PARABOLIC_TOL = 1e-12


class NotHyperbolic(ValueError):
    """Raised when an operation needs |trace| > 2 and the input fails that."""


class SharedEndpoint(ValueError):
    """Two axes share a boundary endpoint; the configuration is not transverse."""


@dataclass(frozen=True)
class Isometry:
    """Orientation-preserving isometry of the half-plane as a unit-determinant
    2x2 real matrix [[a, b], [c, d]].  Construction renormalizes determinant
    drift larger than DET_TOL."""

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        det = self.a * self.d - self.b * self.c
        if not math.isfinite(det) or det <= 0.0:
            raise ValueError(f"matrix determinant must be positive, got {det}")
        if abs(det - 1.0) > DET_TOL:
            s = math.sqrt(det)
            object.__setattr__(self, "a", self.a / s)
            object.__setattr__(self, "b", self.b / s)
            object.__setattr__(self, "c", self.c / s)
            object.__setattr__(self, "d", self.d / s)

    @property
    def trace(self) -> float:
        return self.a + self.d

    def classify(self) -> str:
        t = abs(self.trace)
        if abs(t - 2.0) <= PARABOLIC_TOL:
            return "parabolic"
        return "elliptic" if t < 2.0 else "hyperbolic"

    def inverse(self) -> "Isometry":
        return Isometry(self.d, -self.b, -self.c, self.a)

    def __matmul__(self, other: "Isometry") -> "Isometry":
        return compose(self, other)


IDENTITY = Isometry(1.0, 0.0, 0.0, 1.0)


def compose(g: Isometry, h: Isometry) -> Isometry:
    """Matrix product g*h, renormalized to unit determinant."""
    return Isometry(
        g.a * h.a + g.b * h.c,
        g.a * h.b + g.b * h.d,
        g.c * h.a + g.d * h.c,
        g.c * h.b + g.d * h.d,
    )


@dataclass(frozen=True)
class Point:
    """Point x + iy of the open upper half-plane, y > 0 strictly."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)) or self.y <= 0.0:
            raise ValueError(f"upper half-plane requires finite x and y > 0, got ({self.x}, {self.y})")


@dataclass(frozen=True)
class Axis:
    """Unordered endpoint pair of a complete geodesic, stored canonically:
    finite endpoints ascending, INFINITY last."""

    p: float
    q: float

    def __post_init__(self):
        if self.p == self.q:
            raise ValueError("axis endpoints must be distinct")
        lo, hi = sorted((self.p, self.q))
        object.__setattr__(self, "p", lo)
        object.__setattr__(self, "q", hi)


def apply_boundary(g: Isometry, x: float) -> float:
    """Moebius action on a boundary point (INFINITY-aware)."""
    if x == INFINITY:
        return g.a / g.c if g.c != 0.0 else INFINITY
    den = g.c * x + g.d
    if den == 0.0:
        return INFINITY
    return (g.a * x + g.b) / den


def apply_point(g: Isometry, p: Point) -> Point:
    z = complex(p.x, p.y)
    w = (g.a * z + g.b) / (g.c * z + g.d)
    return Point(w.real, w.imag)


def apply_axis(g: Isometry, axis: Axis) -> Axis:
    return Axis(apply_boundary(g, axis.p), apply_boundary(g, axis.q))


def length_from_trace(t: float) -> float:
    """Trace-length dictionary: 2*acosh(|t|/2) for |t| > 2."""
    if abs(t) <= 2.0 + PARABOLIC_TOL:
        raise NotHyperbolic(f"|trace| = {abs(t)} is not > 2")
    return 2.0 * math.acosh(abs(t) / 2.0)


def translation_length(g: Isometry) -> float:
    """Length 2*acosh(|tr|/2) of the closed geodesic of a hyperbolic isometry."""
    if g.classify() != "hyperbolic":
        raise NotHyperbolic(f"|trace| = {abs(g.trace)} is not > 2")
    return length_from_trace(g.trace)


def dist(p: Point, q: Point) -> float:
    """Hyperbolic distance, cosh d = 1 + ((x1-x2)^2 + (y1-y2)^2) / (2 y1 y2),
    evaluated in the equivalent form 2*asinh(|p-q| / (2 sqrt(y1 y2))) which
    stays accurate when the points nearly coincide."""
    sep = math.hypot(p.x - q.x, p.y - q.y)
    return 2.0 * math.asinh(0.5 * sep / math.sqrt(p.y * q.y))


def axis_of(g: Isometry) -> Axis:
    """Axis of a hyperbolic isometry: the real fixed points, roots of
    c x^2 + (d - a) x - b = 0.  When c = 0 one endpoint is INFINITY."""
    if g.classify() != "hyperbolic":
        raise NotHyperbolic(f"|trace| = {abs(g.trace)} is not > 2")
    scale = max(abs(g.a), abs(g.b), abs(g.d), 1.0)
    if abs(g.c) <= 1e-14 * scale:
        return Axis(g.b / (g.d - g.a), INFINITY)
    # disc = (d-a)^2 + 4bc = tr^2 - 4 > 0; stable quadratic roots
    disc = g.trace * g.trace - 4.0
    bq = g.d - g.a
    sq = math.sqrt(disc)
    t = -0.5 * (bq + math.copysign(sq, bq)) if bq != 0.0 else 0.5 * sq
    r1 = t / g.c
    r2 = -g.b / t if t != 0.0 else 0.0
    return Axis(r1, r2)


def _theta(x: float) -> float:
    """Circle chart of the boundary: finite x -> atan(x), INFINITY -> pi/2."""
    return math.pi / 2.0 if x == INFINITY else math.atan(x)


def _same_endpoint(u: float, v: float) -> bool:
    if u == INFINITY or v == INFINITY:
        return u == v
    return abs(u - v) <= 1e-12 * max(1.0, abs(u), abs(v))


def axes_cross(alpha: Axis, beta: Axis) -> bool:
    """True iff the endpoint pairs interleave on the boundary circle, i.e. the
    two geodesics cross transversely at one interior point."""
    for u in (alpha.p, alpha.q):
        for v in (beta.p, beta.q):
            if _same_endpoint(u, v):
                raise SharedEndpoint(f"axes share endpoint {u}")
    lo, hi = sorted((_theta(alpha.p), _theta(alpha.q)))
    inside = sum(1 for v in (beta.p, beta.q) if lo < _theta(v) < hi)
    return inside == 1
