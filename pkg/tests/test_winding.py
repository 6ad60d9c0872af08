import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypcross.winding import (
    CollarArcQuery,
    CuspArcQuery,
    collar_arc_length,
    cusp_arc_length,
    cusp_winding_from_length,
    saccheri_top_length,
    verify_cusp_lemma_geometrically,
    winding_from_length,
)


def test_collar_arc_hugs_core_at_zero_width():
    # cosh 0 = 1: the arc length approaches W * core
    q = CollarArcQuery(3.0, 0.7, 1e-9)
    assert abs(collar_arc_length(q) - 3.0 * 0.7) < 1e-8


def test_collar_arc_double_angle_value():
    # sinh(2t) = 2 sinh t cosh t = 2 sqrt 2 at sinh t = 1; cosh(asinh 1) = sqrt 2
    q = CollarArcQuery(2.0, 2 * math.asinh(1.0), math.asinh(1.0))
    assert abs(collar_arc_length(q) - 2 * math.asinh(4.0)) < 1e-12


def test_collar_arc_monotone():
    base = collar_arc_length(CollarArcQuery(1.0, 1.0, 1.0))
    assert collar_arc_length(CollarArcQuery(1.2, 1.0, 1.0)) > base
    assert collar_arc_length(CollarArcQuery(1.0, 1.2, 1.0)) > base
    assert collar_arc_length(CollarArcQuery(1.0, 1.0, 1.2)) > base


def test_collar_arc_strictly_increasing_on_grids():
    grid = np.linspace(0.05, 4.0, 40)
    for axis in range(3):
        args = np.full((len(grid), 3), 0.8)
        args[:, axis] = grid
        vals = [collar_arc_length(CollarArcQuery(*row)) for row in args]
        assert all(b > a for a, b in zip(vals, vals[1:]))


def test_cusp_arc_values():
    assert abs(cusp_arc_length(CuspArcQuery(1.0)) - math.acosh(9.0)) < 1e-12
    assert abs(cusp_arc_length(CuspArcQuery(1.0)) - 2 * math.log(2 + math.sqrt(5))) < 1e-12
    assert abs(cusp_arc_length(CuspArcQuery(0.5)) - 2 * math.log(1 + math.sqrt(2))) < 1e-12


def test_cusp_arc_vanishes():
    assert cusp_arc_length(CuspArcQuery(1e-12)) < 1e-10


def test_cusp_arc_asinh_identity():
    for W in (0.1, 0.7, 1.0, 3.0, 12.0):
        assert abs(cusp_arc_length(CuspArcQuery(W)) - 2 * math.asinh(2 * W)) < 1e-12


def test_collar_roundtrip():
    W, core, width = 1.7, 1.0, 0.5
    length = collar_arc_length(CollarArcQuery(W, core, width))
    assert abs(winding_from_length(length, core, width) - W) < 1e-10


def test_winding_never_negative():
    assert winding_from_length(1e-9, 1.0, 2.0) > 0.0


def test_cusp_roundtrip():
    length = cusp_arc_length(CuspArcQuery(3.0))
    assert abs(cusp_winding_from_length(length) - 3.0) < 1e-10


@settings(max_examples=150, deadline=None)
@given(
    st.floats(min_value=0.05, max_value=4.0),
    st.floats(min_value=0.05, max_value=4.0),
    st.floats(min_value=0.05, max_value=3.0),
)
def test_saccheri_quadrilateral_oracle(W, core, width):
    got = collar_arc_length(CollarArcQuery(W, core, width))
    oracle = saccheri_top_length(W, core, width)
    assert abs(got - oracle) < 1e-9


@pytest.mark.parametrize("W", [0.1, 0.5, 1.0, 2.0, 5.0, 10.0])
def test_cusp_distance_oracle(W):
    assert verify_cusp_lemma_geometrically(W, 1) < 1e-12


def test_cusp_oracle_grid_and_small_regime():
    assert verify_cusp_lemma_geometrically(10.0, 6) < 1e-12
    assert verify_cusp_lemma_geometrically(1e-8, 1) < 1e-12


def test_query_validation():
    with pytest.raises(ValueError):
        CollarArcQuery(0.0, 1.0, 1.0)
    with pytest.raises(ValueError):
        CollarArcQuery(1.0, -1.0, 1.0)
    with pytest.raises(ValueError):
        CuspArcQuery(0.0)
    with pytest.raises(ValueError):
        winding_from_length(0.0, 1.0, 1.0)
