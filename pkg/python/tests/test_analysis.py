"""
Tests for feature extraction
"""

import math

import numpy as np
import pytest

from peakcell import (
    Convexity,
    FeatureReport,
    InstabilityMeasure,
    InvalidArgumentError,
    SyntheticKind,
    SyntheticSpec,
    analyze,
    classify_convexity,
    depth_profile,
    detect_instability,
    detect_stationary,
    estimate_periods,
    generate,
    is_fixed_point,
    iterate,
)
from peakcell.analysis import autocorrelation

from .oracles import brute_autocorrelation, column_depths, naive_iterate

WEEKLY = [5, 9, 9, 9, 9, 9, 4]


def sine(n, period):
    return [math.sin(2 * math.pi * t / period) for t in range(n)]


def burst_series():
    return generate(SyntheticSpec(SyntheticKind.BURST, 240))


def test_depth_profile_all_white():
    """Test an all-white diagram has zero depth everywhere"""
    diagram = iterate([1, 2, 3, 4, 5], 3)
    assert depth_profile(diagram).tolist() == [0, 0, 0, 0, 0]


def test_depth_profile_checkerboard():
    """Test column counts of the checkerboard example"""
    diagram = iterate([0, 2, 0.5, 2, 0.5, 2, 0], 2)
    assert diagram.masks.astype(int).tolist() == [[0, 1, 0, 1, 0, 1, 0], [0, 0, 1, 0, 1, 0, 0]]
    assert depth_profile(diagram).tolist() == [0, 1, 1, 1, 1, 1, 0]


def test_depth_profile_parabola():
    """Test every interior column of the parabola is black in all rows"""
    diagram = iterate([-((t - 5) ** 2) for t in range(11)], 3)
    assert depth_profile(diagram).tolist() == [0] + [3] * 9 + [0]


def test_depth_profile_requires_steps():
    """Test K = 0 is rejected"""
    with pytest.raises(InvalidArgumentError):
        depth_profile(iterate([1, 2, 3], 0))


def test_depth_profile_matches_oracle():
    """Test depth profile against the oracle masks"""
    values = np.random.default_rng(11).uniform(-10, 10, size=300).tolist()
    _, masks = naive_iterate(values, 40)
    profile = depth_profile(iterate(values, 40))
    assert profile.tolist() == column_depths(masks)
    assert profile.depths[0] == profile.depths[-1] == 0
    assert profile.depths.max() <= 40


def test_autocorrelation_matches_brute_force():
    """Test the vectorised autocorrelation against a scalar loop"""
    profile = np.random.default_rng(2).integers(0, 30, size=120)
    acf = autocorrelation(profile, 60)
    for lag in range(61):
        assert acf[lag] == pytest.approx(brute_autocorrelation(profile.tolist(), lag), abs=1e-12)


def test_periods_constant_series():
    """Test a constant series has no periods"""
    assert estimate_periods(iterate([1.0] * 40, 10)) == []


def test_periods_short_series_rejected():
    """Test N < 8 is rejected"""
    with pytest.raises(InvalidArgumentError):
        estimate_periods(iterate([0, 1, 0, 1, 0, 1, 0], 3))


def test_periods_sine():
    """Test the period of a pure sinusoid"""
    diagram = iterate(generate(SyntheticSpec(SyntheticKind.SIN, 500)), 128)
    estimates = estimate_periods(diagram, 5)
    assert estimates
    assert 48 <= estimates[0].period <= 52

    profile = depth_profile(diagram).tolist()
    top = estimates[0]
    assert top.strength == pytest.approx(brute_autocorrelation(profile, top.period), abs=1e-9)


def test_periods_sine_integer_periods():
    """Test sinusoids of several integer periods"""
    for period in (12, 20, 33):
        n = period * 10
        diagram = iterate(sine(n, period), period + 10)
        estimates = estimate_periods(diagram, 3)
        assert estimates
        assert period - 2 <= estimates[0].period <= period + 2


def test_periods_two_harmonics():
    """Test sin(x) + cos(3x) surfaces at least two distinct components"""
    diagram = iterate(generate(SyntheticSpec(SyntheticKind.SIN_PLUS_COS3X, 600)), 128)
    estimates = estimate_periods(diagram, 5)
    periods = [e.period for e in estimates]
    assert len(set(periods)) >= 2
    assert any(48 <= p <= 52 or 15 <= p <= 18 for p in periods)


def test_periods_weekly():
    """Test the weekly pattern yields period 7"""
    diagram = iterate(WEEKLY * 20, 64)
    estimates = estimate_periods(diagram, 5)
    assert estimates[0].period == 7
    assert estimates[0].strength >= 0.5
    # multiples of the week are suppressed as harmonics
    assert all(e.period % 7 not in (0, 1, 6) for e in estimates[1:])


def test_periods_sorted_and_bounded():
    """Test estimates are sorted by strength and within [2, N/2]"""
    values = np.random.default_rng(4).uniform(-1, 1, size=400)
    diagram = iterate(values, 50)
    estimates = estimate_periods(diagram, 10)
    strengths = [e.strength for e in estimates]
    assert strengths == sorted(strengths, reverse=True)
    for e in estimates:
        assert 2 <= e.period <= 200
        assert 0.2 <= e.strength <= 1.0
    assert len(estimates) <= 10


def test_periods_affine_invariant():
    """Test estimates do not change under a positive affine map"""
    values = np.resize(np.array(WEEKLY, dtype=float), 140)
    original = estimate_periods(iterate(values, 64))
    transformed = estimate_periods(iterate(4.0 * values - 12.0, 64))
    assert original == transformed


def test_instability_linear():
    """Test a linear series has no instability"""
    assert detect_instability(iterate(list(range(100)), 32)) == []


def test_instability_burst():
    """Test a noise burst inside a linear series gives exactly one interval"""
    diagram = iterate(burst_series(), 32)
    intervals = detect_instability(diagram)
    assert len(intervals) == 1
    interval = intervals[0]
    assert 100 - 16 <= interval.start <= 100 + 16
    assert 139 - 16 <= interval.end <= 139 + 16
    assert 0.5 <= interval.score <= 1.0


def test_instability_sine_measures():
    """Test solid bands count as black but not as alternation"""
    diagram = iterate(generate(SyntheticSpec(SyntheticKind.SIN, 500)), 128)
    black = detect_instability(diagram)
    assert black
    assert max(i.score for i in black) == 1.0
    assert detect_instability(diagram, measure=InstabilityMeasure.ALTERNATION) == []


def test_instability_flattened_sawtooth():
    """Test a sawtooth section that flattens after one step is not unstable"""
    values = [t + (t % 2 if 100 <= t < 140 else 0) for t in range(240)]
    diagram = iterate(values, 32)
    expected = [1 if 100 <= t < 140 and t % 2 else 0 for t in range(240)]
    assert depth_profile(diagram).tolist() == expected
    assert not diagram.masks[1:].any()
    assert detect_instability(diagram) == []
    assert detect_instability(diagram, measure="alternation") == []


def test_instability_alternation_burst():
    """Test the alternation measure still finds the burst"""
    diagram = iterate(burst_series(), 32)
    intervals = detect_instability(diagram, measure="alternation")
    assert len(intervals) == 1
    assert intervals[0].start <= 100 and intervals[0].end >= 139


def test_instability_intervals_disjoint():
    """Test intervals are disjoint, sorted and inside the series"""
    values = np.random.default_rng(12).uniform(-5, 5, size=500)
    values[200:300] = np.linspace(0, 1, 100)
    diagram = iterate(values, 64)
    intervals = detect_instability(diagram, window=8, threshold=0.3)
    for first, second in zip(intervals, intervals[1:]):
        assert first.end + 1 < second.start
    for interval in intervals:
        assert 0 <= interval.start <= interval.end <= 499


def test_instability_argument_errors():
    """Test window and threshold validation"""
    diagram = iterate(list(range(10)), 3)
    with pytest.raises(InvalidArgumentError):
        detect_instability(diagram, window=11)
    with pytest.raises(InvalidArgumentError):
        detect_instability(diagram, window=4, threshold=0.0)
    with pytest.raises(InvalidArgumentError):
        detect_instability(diagram, window=4, measure="spectral")
    with pytest.raises(InvalidArgumentError):
        detect_instability(iterate(list(range(10)), 0), window=4)


def test_stationary_regions():
    """Test never-changing stretches are reported"""
    jagged = burst_series().values[100:140] - 50
    values = np.concatenate((np.arange(50.0), jagged, np.arange(50.0)))
    diagram = iterate(values, 32)
    stationary = detect_stationary(diagram, min_length=10)
    assert stationary
    assert stationary[0].start == 0
    for first, second in zip(stationary, stationary[1:]):
        assert first.end < second.start
    assert detect_stationary(iterate(list(range(30)), 5), min_length=30)[0].end == 29


def test_convexity_fixed_point():
    """Test a convex series is a fixed point"""
    diagram = iterate([0, 1, 4, 9, 16], 4)
    assert classify_convexity(diagram) is Convexity.FIXED_POINT
    assert not diagram.masks.any()


def test_convexity_concave():
    """Test a parabola has a strictly concave interior"""
    diagram = iterate([-((t - 5) ** 2) for t in range(11)], 1)
    assert classify_convexity(diagram) is Convexity.STRICTLY_CONCAVE_INTERIOR
    wide = iterate([-((t - 50) ** 2) for t in range(101)], 40)
    assert classify_convexity(wide) is Convexity.STRICTLY_CONCAVE_INTERIOR


def test_convexity_mixed():
    """Test a row with both colours is mixed"""
    assert classify_convexity(iterate([0, 1, 0, 1, 0], 1)) is Convexity.MIXED


def test_convexity_requires_steps():
    """Test K = 0 is rejected"""
    with pytest.raises(InvalidArgumentError):
        classify_convexity(iterate([0, 1, 0], 0))


def test_convexity_agrees_with_fixed_point():
    """Test FIXED_POINT matches is_fixed_point on the source"""
    rng = np.random.default_rng(21)
    cases = [rng.uniform(-3, 3, size=20) for _ in range(20)]
    cases += [np.arange(20.0) ** 2, np.full(20, 2.0), np.abs(np.arange(-10.0, 10.0))]
    for values in cases:
        diagram = iterate(values, 5)
        fixed = classify_convexity(diagram) is Convexity.FIXED_POINT
        assert fixed == is_fixed_point(values)


def test_analyze_report():
    """Test analyze aggregates every detector"""
    diagram = iterate(WEEKLY * 20, 64)
    report = analyze(diagram)
    assert isinstance(report, FeatureReport)
    assert report.n == 140
    assert report.steps == 64
    assert report.periods[0].period == 7
    assert report.convexity is Convexity.MIXED
    data = report.to_dict()
    assert list(data) == ["n", "steps", "periods", "instabilities", "convexity", "stationary"]
    assert data["convexity"] == "MIXED"


def test_analyze_short_series():
    """Test analyze still reports on very short series"""
    report = analyze(iterate([0, 1, 0], 2))
    assert report.periods == []
    assert report.convexity is Convexity.STRICTLY_CONCAVE_INTERIOR
