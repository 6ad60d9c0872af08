import math

import numpy as np
import pytest

from hypcross.collar import (
    CollarProfile,
    NonPositiveLength,
    collar_width,
    cusp_horocycle_bound,
    generalized_width,
    hexagon_gap,
    wide_width,
    width_scan,
)


def test_width_at_unit_sinh_core():
    # sinh(x/2) = 1 at x = 2*asinh(1), so the width is asinh(1) = log(1+sqrt 2)
    x = 2 * math.asinh(1.0)
    assert abs(collar_width(x) - math.asinh(1.0)) < 1e-12
    assert abs(collar_width(x) - math.log(1 + math.sqrt(2))) < 1e-12


def test_width_diverges_at_short_cores():
    assert collar_width(1e-6) > 14.0


def test_width_direct_value():
    assert abs(collar_width(2.3) - math.asinh(1.0 / math.sinh(1.15))) < 1e-15


def test_generalized_width_values():
    x = 2 * math.asinh(1.0)
    w1, narrow = generalized_width(x)
    assert abs(w1 - math.asinh(1.0 / math.sinh(x / 4))) < 1e-15
    assert abs(w1 - 1.5285709194809982) < 1e-12
    assert w1 > collar_width(x)
    assert narrow > 0.0


def test_generalized_width_at_threshold():
    w1, narrow = generalized_width(2.3)
    assert w1 > 0.0 and narrow > 0.0
    # the stated short-core regime ends past log(5+2 sqrt 6) < 2.3
    assert math.log(5 + 2 * math.sqrt(6)) < 2.3


def test_generalized_width_degenerates_for_long_cores():
    w1, narrow = generalized_width(10.0)
    assert narrow < 0.0
    profile = CollarProfile.from_core_length(10.0)
    assert profile.w_narrow == 0.0
    assert profile.degenerate


def test_profile_short_core():
    p = CollarProfile.from_core_length(1.0)
    assert p.w1 > p.w > p.w_narrow > 0.0
    assert not p.degenerate
    assert abs(p.w_narrow - (2 * p.w - p.w1)) < 1e-15


def test_hexagon_gap_closed_form():
    x = 4 * math.log(3.0)
    assert abs(hexagon_gap(x) - 2 * math.log(2.0)) < 1e-12


def test_hexagon_gap_identity():
    for x in (0.5, 1.06, 2.3):
        assert abs(hexagon_gap(x) - 2 * wide_width(x)) < 1e-12


def test_hexagon_gap_vanishes_at_infinity():
    assert 0.0 < hexagon_gap(80.0) < 1e-8
    assert hexagon_gap(40.0) > hexagon_gap(80.0)


def test_domain_errors():
    for fn in (collar_width, wide_width, hexagon_gap, generalized_width):
        with pytest.raises(NonPositiveLength):
            fn(0.0)
        with pytest.raises(NonPositiveLength):
            fn(-1.0)


def test_cusp_horocycle_bound():
    assert cusp_horocycle_bound() == 4.0
    assert cusp_horocycle_bound() == 4.0  # deterministic and pure


def test_width_scan():
    scan = width_scan()
    assert scan["w1_gt_w_on_0_20"]
    assert scan["w1_lt_2w_on_0_2.3"]
    assert scan["gap_identity_max_abs_dev"] < 1e-12
    assert scan["w_decreasing"] and scan["w1_decreasing"]
    # the crossover where the wide side eats the whole collar sits past 2.3
    x = scan["w1_eq_2w_crossover"]
    assert x > 2.3
    assert abs(x - 2.4375114537440243) < 1e-9
    assert wide_width(x - 1e-6) < 2 * collar_width(x - 1e-6)
    assert wide_width(x + 1e-6) > 2 * collar_width(x + 1e-6)


def test_widths_strictly_decreasing_dense():
    xs = np.linspace(20.0 / 10_000, 20.0, 10_000)
    w = np.arcsinh(1.0 / np.sinh(xs / 2.0))
    w1 = np.arcsinh(1.0 / np.sinh(xs / 4.0))
    assert np.all(np.diff(w) < 0.0)
    assert np.all(np.diff(w1) < 0.0)
    assert np.all(w1 > w)
