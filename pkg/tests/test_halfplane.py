import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypcross.halfplane import (
    IDENTITY,
    INFINITY,
    Axis,
    Isometry,
    NotHyperbolic,
    Point,
    SharedEndpoint,
    apply_axis,
    apply_boundary,
    axes_cross,
    axis_of,
    compose,
    dist,
    length_from_trace,
    translation_length,
)

A_GEN = Isometry(1, 2, 0, 1)
B_GEN = Isometry(1, 0, 2, 1)


def test_compose_identity():
    g = Isometry(5, 2, 2, 1)
    assert compose(IDENTITY, g) == g
    assert compose(g, IDENTITY) == g


def test_compose_hand_product():
    g = compose(A_GEN, B_GEN)
    assert (g.a, g.b, g.c, g.d) == (5, 2, 2, 1)


def test_compose_inverse_is_identity():
    g = Isometry(5, 2, 2, 1)
    h = compose(g, g.inverse())
    assert max(abs(h.a - 1), abs(h.b), abs(h.c), abs(h.d - 1)) < 1e-12


def test_determinant_renormalization():
    g = Isometry(2 * 5.0, 2 * 2.0, 2 * 2.0, 2 * 1.0)  # det 4
    assert abs(g.a * g.d - g.b * g.c - 1.0) < 1e-12
    assert abs(g.a - 5.0) < 1e-12


def test_nonpositive_determinant_rejected():
    with pytest.raises(ValueError):
        Isometry(1, 0, 0, -1)


def test_classification():
    assert A_GEN.classify() == "parabolic"
    assert Isometry(5, 2, 2, 1).classify() == "hyperbolic"
    assert Isometry(math.cos(0.3), -math.sin(0.3), math.sin(0.3), math.cos(0.3)).classify() == "elliptic"


def test_translation_length_values():
    assert abs(translation_length(Isometry(5, 2, 2, 1)) - 4 * math.log(1 + math.sqrt(2))) < 1e-12
    assert abs(translation_length(Isometry(9, 4, 2, 1)) - 2 * math.log(5 + 2 * math.sqrt(6))) < 1e-12
    assert abs(length_from_trace(6.0) - 2 * math.acosh(3.0)) < 1e-15


def test_translation_length_rejects_parabolic():
    with pytest.raises(NotHyperbolic):
        translation_length(A_GEN)
    with pytest.raises(NotHyperbolic):
        length_from_trace(2.0)


def test_point_validation():
    with pytest.raises(ValueError):
        Point(0.0, 0.0)
    with pytest.raises(ValueError):
        Point(1.0, -2.0)


def test_dist_vertical():
    assert abs(dist(Point(0, 1), Point(0, math.e)) - 1.0) < 1e-12


def test_dist_horocycle_chord():
    # cosh d = 1 + 16/2 = 9
    assert abs(dist(Point(-2, 1), Point(2, 1)) - math.acosh(9.0)) < 1e-12
    assert abs(math.acosh(9.0) - 2 * math.log(2 + math.sqrt(5))) < 1e-12


def test_dist_coincident():
    p = Point(0.37, 2.2)
    assert dist(p, p) == 0.0


points = st.builds(
    Point,
    st.floats(min_value=-5, max_value=5, allow_nan=False),
    st.floats(min_value=0.05, max_value=5, allow_nan=False),
)


@settings(max_examples=200, deadline=None)
@given(points, points, points)
def test_dist_triangle_inequality(p, q, r):
    assert dist(p, r) <= dist(p, q) + dist(q, r) + 1e-12


@settings(max_examples=200, deadline=None)
@given(points, points)
def test_dist_symmetric_nonnegative(p, q):
    assert dist(p, q) >= 0.0
    assert abs(dist(p, q) - dist(q, p)) < 1e-12


def test_axis_diagonal():
    ax = axis_of(Isometry(math.e, 0, 0, 1 / math.e))
    assert ax == Axis(0.0, INFINITY)


def test_axis_quadratic_roots():
    ax = axis_of(Isometry(5, 2, 2, 1))
    assert abs(ax.p - (1 - math.sqrt(2))) < 1e-12
    assert abs(ax.q - (1 + math.sqrt(2))) < 1e-12
    ax = axis_of(Isometry(9, 4, 2, 1))
    assert abs(ax.p - (2 - math.sqrt(6))) < 1e-12
    assert abs(ax.q - (2 + math.sqrt(6))) < 1e-12


def test_axis_requires_hyperbolic():
    with pytest.raises(NotHyperbolic):
        axis_of(A_GEN)


def test_axes_cross_separation():
    assert axes_cross(Axis(0, INFINITY), Axis(-1, 1)) is True
    assert axes_cross(Axis(0, INFINITY), Axis(1, 2)) is False


def test_axes_cross_shared_endpoint():
    with pytest.raises(SharedEndpoint):
        axes_cross(Axis(0, INFINITY), Axis(0, 1))


def test_axes_cross_conjugate_branch():
    # the branch of the figure-eight conjugated by a*b*a^-1 crosses its axis
    g = compose(A_GEN, B_GEN)
    u = compose(compose(A_GEN, B_GEN), A_GEN.inverse())
    h = compose(compose(u, g), u.inverse())
    assert axes_cross(axis_of(h), axis_of(g)) is True


words = st.lists(st.sampled_from([A_GEN, A_GEN.inverse(), B_GEN, B_GEN.inverse()]), min_size=1, max_size=6)


def _word_mat(letters):
    out = IDENTITY
    for m in letters:
        out = compose(out, m)
    return out


@settings(max_examples=100, deadline=None)
@given(words)
def test_conjugation_invariance(letters):
    g = Isometry(9, 4, 2, 1)
    h = _word_mat(letters)
    conj = compose(compose(h, g), h.inverse())
    assert abs(translation_length(conj) - translation_length(g)) < 1e-10


@settings(max_examples=100, deadline=None)
@given(words)
def test_axis_equivariance(letters):
    g = Isometry(9, 4, 2, 1)
    h = _word_mat(letters)
    conj = compose(compose(h, g), h.inverse())
    moved = apply_axis(h, axis_of(g))
    got = axis_of(conj)
    if got.q == INFINITY or moved.q == INFINITY:
        assert got.q == moved.q
        assert abs(got.p - moved.p) < 1e-9
    else:
        assert abs(got.p - moved.p) < 1e-9
        assert abs(got.q - moved.q) < 1e-9


@pytest.mark.parametrize("n", range(1, 11))
def test_power_scaling(n):
    g = Isometry(5, 2, 2, 1)
    gn = IDENTITY
    for _ in range(n):
        gn = compose(gn, g)
    assert abs(translation_length(gn) - n * translation_length(g)) < 1e-9


def test_apply_boundary_infinity_handling():
    assert apply_boundary(A_GEN, INFINITY) == INFINITY
    assert apply_boundary(B_GEN, INFINITY) == 0.5
    assert apply_boundary(B_GEN, -0.5) == INFINITY
