import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hamsphere.exact_counts import (
    GAMMA,
    INCONCLUSIVE,
    PASS,
    CompositionCase,
    SweepConfig,
    banana_convolution_check,
    banana_convolution_lhs,
    binomial_estimate_constant,
    composition_bound_check,
    composition_bound_holds,
    composition_cases,
    critical_probability,
    inequality_sweeps,
    labeled_sphere_count,
    normalized_quad_count,
    one_minus_eps_constant,
    polygon_triangulation_count,
    quad_asymptotic_ratio,
    quad_ratio_check,
    sphere_count_ratios,
    tail_sum,
    tail_sum_check,
    threshold_probability,
    triangle_disc_count,
)


def test_small_polygon_counts():
    assert polygon_triangulation_count(0, 3) == 1
    assert polygon_triangulation_count(0, 4) == 2
    assert polygon_triangulation_count(1, 4) == 5
    assert polygon_triangulation_count(2, 3) == 6
    assert polygon_triangulation_count(1, 3) == 1
    # Catalan numbers at k = 0
    for m in range(3, 15):
        assert polygon_triangulation_count(0, m) == math.comb(2 * (m - 2), m - 2) // (m - 1)


def test_invalid_boundary():
    with pytest.raises(ValueError):
        polygon_triangulation_count(0, 2)
    with pytest.raises(ValueError):
        polygon_triangulation_count(-1, 3)


def test_triangle_specialisation_agrees_to_k_100():
    for k in range(101):
        assert triangle_disc_count(k) == polygon_triangulation_count(k, 3)


def test_labeled_sphere_counts_frozen():
    # values confirmed by brute-force enumeration for n = 4..8
    assert [labeled_sphere_count(n) for n in range(4, 9)] == [1, 10, 195, 5712, 223440]
    with pytest.raises(ValueError):
        labeled_sphere_count(3)


def test_normalized_quad_values():
    assert normalized_quad_count(0) == 2
    assert normalized_quad_count(1) == 5
    assert normalized_quad_count(2) == Fraction(polygon_triangulation_count(2, 4), 2)


def test_critical_probability_and_window():
    assert critical_probability(12) == pytest.approx(math.sqrt(math.e / (256 / 27 * 12)))
    lo, hi = threshold_probability(12, 0.5)
    assert lo == pytest.approx(0.5 * critical_probability(12))
    assert hi == pytest.approx(1.5 * critical_probability(12))
    with pytest.raises(ValueError):
        threshold_probability(12, 1.5)


def test_sphere_count_ratios_settle():
    ratios = [float(r) for _, _, r in sphere_count_ratios(range(5, 60))]
    steps = [b / a for a, b in zip(ratios, ratios[1:])]
    assert all(0.5 < s < 2 for s in steps)
    assert abs(steps[-1] - 1) < 0.05


def test_banana_convolution_small_k_by_hand():
    lhs = banana_convolution_lhs(3, 2)
    t = [normalized_quad_count(k) for k in range(4)]
    assert lhs[0] == t[0] ** 2
    assert lhs[2] == 2 * t[0] * t[2] + t[1] ** 2
    assert banana_convolution_check(60, 2).status == PASS
    assert banana_convolution_check(30, 3).status == PASS


def test_quad_ratio_selected_k():
    for k in (10, 50, 200):
        x = quad_asymptotic_ratio(k)
        assert 1 < float(x.a) and float(x.b) < 1.05
    assert quad_ratio_check(10, 40).status == PASS


def test_quad_ratio_below_ten_can_fail_the_band():
    # the band is only claimed from k = 10 on; at k = 1 the ratio is far from it
    x = quad_asymptotic_ratio(1)
    assert not (1 < float(x.a) and float(x.b) < 1.05)


def test_tail_sum_partial_and_full():
    partial = 5 / GAMMA + 20 / GAMMA**2 + 100 / GAMMA**3
    # first three normalized counts are 5, 20, 100
    assert [normalized_quad_count(a) for a in (1, 2, 3)] == [5, 20, 100]
    assert tail_sum(3) == partial
    assert float(partial) == pytest.approx(0.8671367, rel=1e-6)
    assert tail_sum(20) < Fraction(5, 4)
    assert tail_sum_check().status == PASS


@given(st.integers(1, 19))
def test_tail_sum_increasing(a):
    assert tail_sum(a + 1) > tail_sum(a)


def test_composition_single_summand_is_identity():
    for case in composition_cases(1, (3, 6), 5):
        for k in (0, 1, 7, 50):
            assert composition_bound_holds(case, k, float("nan")) == PASS


def test_composition_w2_example():
    case = CompositionCase((3, 3), (Fraction(4), Fraction(3)))
    check, failures, count = composition_bound_check(2, (3, 3), 4, 50, 0)
    assert case in set(composition_cases(2, (3, 3), 4))
    assert not [f for f in failures if f[0] == case]


def test_composition_hypothesis_filters():
    cases = list(composition_cases(2, (3, 4), 5))
    for c in cases:
        assert list(c.ls) == sorted(c.ls, reverse=True)
        if c.ls[0] != int(c.ls[0]):
            assert c.ls[0] >= Fraction(7, 2)
    # tied l >= 4: first m maximal; tied l < 4: first m minimal
    assert CompositionCase((3, 4), (Fraction(4), Fraction(4))) not in cases
    assert CompositionCase((4, 3), (Fraction(3), Fraction(3))) not in cases


def test_composition_bound_fails_only_at_k0():
    check, failures, count = composition_bound_check(3, (3, 6), 5, 50, 0)
    assert failures and all(k == 0 for _, k, _ in failures)
    assert all(c.a == 0 for c, _, _ in failures)
    assert composition_bound_check(3, (3, 6), 5, 50, 1)[0].status == PASS


def test_binomial_constant_delta_one_at_most_two():
    assert binomial_estimate_constant(1.0, 200) <= 2
    assert binomial_estimate_constant(0.5, 200) <= binomial_estimate_constant(0.1, 200)


def test_one_minus_eps_constant_finite():
    c = one_minus_eps_constant(0.5, grid=60)
    assert math.isfinite(c) and c > 0


def test_inequality_sweeps_report_small_grid():
    cfg = SweepConfig(grid=60, deltas=(1.0,), epsilons=(0.5,), w_max=2, m_range=(3, 4),
                      l_max=4, k_max=20, k_min=1)
    rep = inequality_sweeps(cfg)
    assert rep.composition_check.status == PASS
    assert rep.lines()


def test_interval_precision_cap_gives_inconclusive_not_pass():
    from hamsphere.exact_counts import _interval_verdict
    status, _ = _interval_verdict(lambda prec: mpmath.iv.mpf([0.5, 1.5]), 1, 2)
    assert status == INCONCLUSIVE


@pytest.mark.parametrize("delta", [0.1, 0.5, 1.0])
def test_binomial_constant_plateaus_below_supremum(delta):
    # sup over r/m of C(r+m, m)^(1/m) (1+delta)^(-r/m) tends to 1 + 1/delta
    half, full = binomial_estimate_constant(delta, 250), binomial_estimate_constant(delta, 500)
    assert half <= full <= 1 + 1 / delta
    assert full > 0.9 * (1 + 1 / delta)


def test_normalizer_ratios_small_n():
    ratios = [float(r) for _, _, r in sphere_count_ratios(range(4, 9))]
    assert all(r > 0 for r in ratios)
    steps = [a / b for a, b in zip(ratios, ratios[1:])]
    # the first step (n=4 to 5) is about 2.17; from n=5 on successive ratios stay within 2
    assert steps[0] == pytest.approx(2.171, abs=1e-3)
    assert all(1 < s < 2 for s in steps[1:])
