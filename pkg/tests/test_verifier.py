import math

import numpy as np
import pytest

from hypcross.collar import wide_width
from hypcross.verifier import (
    CASE_SPLIT,
    BracketFailure,
    DomainError,
    constants,
    corkscrew_length,
    find_bound_minimum,
    half_collar_arc,
    length_bound,
    length_bound_deriv,
    run_verify_suite,
    sharp_bound_k1,
    sharp_bound_k2,
    verify_case1_chain,
    verify_concavity_chain,
)
from hypcross.winding import CollarArcQuery, collar_arc_length


def test_constants_table():
    tab = constants()
    assert abs(tab.bound_two_crossings - 2 * math.acosh(5.0)) < 1e-12
    assert abs(tab.bound_two_crossings - 4.584863339122355) < 1e-12
    assert abs(tab.bound_one_crossing - 2 * math.acosh(3.0)) < 1e-12
    assert tab.gap < CASE_SPLIT
    assert abs(tab.gap - 1.0593689910441837) < 1e-12
    assert corkscrew_length(1) == pytest.approx(sharp_bound_k1(), abs=1e-12)
    assert corkscrew_length(2) == pytest.approx(sharp_bound_k2(), abs=1e-12)


def test_threshold_strictly_separates():
    gap = sharp_bound_k2() - sharp_bound_k1()
    asinh_step = 2 * math.asinh(4.0) - 2 * math.asinh(2.0)
    assert gap < CASE_SPLIT < asinh_step


def test_bound_value_at_three():
    assert abs(length_bound(3.0) - (math.log(3.0) + 2 * math.log(3 + math.sqrt(10)))) < 1e-12
    assert abs(length_bound(3.0) - 4.735505207132244) < 1e-12


def test_bound_diverges_at_ends():
    assert length_bound(2.0 + 1e-12) > 25.0
    assert length_bound(1e9) > 40.0


def test_bound_domain_errors():
    with pytest.raises(DomainError):
        length_bound(2.0)
    with pytest.raises(DomainError):
        length_bound_deriv(1.5)


def test_deriv_signs_at_bracket():
    assert length_bound_deriv(3.0) < 0.0
    assert length_bound_deriv(25.0 / 8.0) > 0.0


@pytest.mark.parametrize("T", [2.5, 3.0, 4.0, 10.0])
def test_deriv_matches_finite_difference(T):
    h = 1e-5
    fd = (length_bound(T + h) - length_bound(T - h)) / (2 * h)
    assert abs(length_bound_deriv(T) - fd) < 1e-6


def test_bound_minimum_bracket():
    br = find_bound_minimum()
    assert 3.0 < br.root < 25.0 / 8.0
    assert br.residual <= 1e-10
    assert br.lo < br.root < br.hi
    # frozen by this bisection
    assert abs(br.root - 3.0523003446139407) < 1e-9
    assert abs(length_bound(br.root) - 4.73463054756788) < 1e-9


def test_bound_minimum_dominates_constants():
    h0 = length_bound(find_bound_minimum().root)
    assert h0 > math.log(25.0 / 9.0) + 2 * math.log(3 + math.sqrt(10))
    assert h0 > 4.658544165996115 - 1e-9
    assert h0 > sharp_bound_k2()


def test_bound_minimum_deterministic():
    assert find_bound_minimum() == find_bound_minimum()


def test_half_collar_arc_consistent_with_winding_module():
    for t in (0.2, 0.53, 0.881373587019543):
        lhs = 2 * half_collar_arc(1.0, t)
        rhs = collar_arc_length(CollarArcQuery(1.0, 2 * t, wide_width(2 * t)))
        assert abs(lhs - rhs) < 1e-12


def test_half_collar_arc_regression():
    t = math.asinh(1.0)
    assert abs(half_collar_arc(1.0, t) - 1.6148909161730953) < 1e-12
    assert abs(half_collar_arc(2.0, t) - 2.619560576453013) < 1e-12


def test_u_substitution_identity():
    ts = np.geomspace(1e-3, 2.0, 300)
    u = 2 * np.cosh(ts / 2) ** 2
    lhs = 2 * half_collar_arc(2.0, ts) - 2 * half_collar_arc(1.0, ts)
    rhs = 2 * np.arcsinh(u * (2 * u - 2)) - 2 * np.arcsinh(u)
    assert float(np.max(np.abs(lhs - rhs))) < 1e-9


def test_concavity_spot_check():
    t = 0.3
    second = half_collar_arc(1.9, t) + half_collar_arc(2.1, t) - 2 * half_collar_arc(2.0, t)
    assert second < 0.0


def test_concavity_chain_report():
    rep = verify_concavity_chain(t_grid=1000)
    assert rep.passed
    ids = {c.id for c in rep.checks}
    assert "arc-concave-in-winding" in ids
    assert "infimum-above-threshold" in ids
    inf_margin = next(c for c in rep.checks if c.id == "infimum-above-threshold").margin
    assert abs((2 * math.asinh(4.0) - 2 * math.asinh(2.0)) - CASE_SPLIT - inf_margin) < 1e-12


def test_concavity_chain_requires_dense_grid():
    with pytest.raises(ValueError):
        verify_concavity_chain(t_grid=10)


def test_case1_chain_report():
    rep = verify_case1_chain(t_grid=2000)
    assert rep.passed
    assert any("width" in note for note in rep.notes)


def test_case1_substitution_value():
    # T at unit core half-length
    T = (math.e + 1.0) ** 2 / (2.0 * math.e)
    assert abs(T - 2.5430806348152437) < 1e-12
    lhs = 2 * math.log((math.e + 1) / (math.e - 1))
    rhs = math.log(T / (T - 2))
    assert abs(lhs - rhs) < 1e-12


def test_reports_deterministic():
    a = verify_concavity_chain(t_grid=500).as_dict()
    b = verify_concavity_chain(t_grid=500).as_dict()
    assert a == b


def test_full_suite_passes():
    rep = run_verify_suite(pants_samples=40, collar_samples=25)
    assert rep.passed
