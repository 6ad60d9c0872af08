"""Half-plane primitives: act by matrices, measure lengths, find axes.

Every closed geodesic on a hyperbolic surface is the image of the axis of a
matrix; its length only depends on the trace.  This walk-through builds the
two parabolic generators of the three-cusp sphere and reads lengths off the
words they generate.
"""

import math

from hypcross.halfplane import (
    Isometry,
    Point,
    axes_cross,
    axis_of,
    compose,
    dist,
    translation_length,
)

a = Isometry(1, 2, 0, 1)   # translation by 2, fixes infinity
b = Isometry(1, 0, 2, 1)   # parabolic fixing 0

print("generator classes:", a.classify(), "/", b.classify())

ab = compose(a, b)
print("\nword ab has matrix", (ab.a, ab.b, ab.c, ab.d), "and trace", ab.trace)
print("geodesic length 2*acosh(tr/2) =", translation_length(ab))
print("which is 4*log(1+sqrt 2)     =", 4 * math.log(1 + math.sqrt(2)))

axis = axis_of(ab)
print("\naxis endpoints:", (axis.p, axis.q), "= 1 -/+ sqrt 2")

# conjugating moves the axis but never the length
u = compose(ab, a)
conj = compose(compose(u, ab), u.inverse())
print("conjugate length:", translation_length(conj))
print("conjugate axis crosses the original?", axes_cross(axis_of(conj), axis))

# distances: vertical segments are logarithms of height ratios
print("\ndist(i, e*i) =", dist(Point(0, 1), Point(0, math.e)))
print("dist((-2,1),(2,1)) =", dist(Point(-2, 1), Point(2, 1)), "= acosh(9) =", math.acosh(9))
