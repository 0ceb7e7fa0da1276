import cmath
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import phases
from modborn.core import DegenerateAmplitudes, ProbabilityRule
from modborn.rules import check_axioms, eval_f0, random_amplitude_pairs

mags = st.floats(min_value=1e-3, max_value=1e3, allow_nan=False)
finite_powers = st.floats(min_value=0.0, max_value=1e4, allow_nan=False)


def test_born_value():
    assert math.isclose(eval_f0(ProbabilityRule.born(), 0.6, 0.8), 0.36, abs_tol=1e-15)


def test_power_four_hand_value():
    # (9/16) / (9/16 + 1/16)
    v = eval_f0(ProbabilityRule(4), math.sqrt(3) / 2, 0.5)
    assert math.isclose(v, 0.9, abs_tol=1e-15)


@pytest.mark.parametrize("n", [0.0, 0.5, 2.0, 7.3, 1e4, math.inf])
def test_tie_is_half(n):
    assert eval_f0(ProbabilityRule(n), 0.3, 0.3j) == 0.5


def test_limit_rule():
    rule = ProbabilityRule.limit()
    assert eval_f0(rule, 0.8, 0.6) == 1.0
    assert eval_f0(rule, 0.6, -0.8) == 0.0


def test_degenerate():
    with pytest.raises(DegenerateAmplitudes):
        eval_f0(ProbabilityRule(3), 0.0, 0j)


def test_large_power_no_overflow():
    v = eval_f0(ProbabilityRule(1e4), 1e-5, 2e-5)
    assert v == 0.0
    assert eval_f0(ProbabilityRule(1e4), 2e-5, 1e-5) == 1.0


@given(mags, mags, phases, phases, finite_powers)
def test_complement(m0, m1, p0, p1, n):
    rule = ProbabilityRule(n)
    a0, a1 = cmath.rect(m0, p0), cmath.rect(m1, p1)
    assert abs(eval_f0(rule, a0, a1) + eval_f0(rule, a1, a0) - 1.0) <= 1e-15


@given(mags, mags)
def test_white_noise(m0, m1):
    assert eval_f0(ProbabilityRule(0.0), m0, m1) == 0.5


def test_monotone_in_power(rng):
    grid = [0.5, 1, 2, 4, 8, 16]
    for _ in range(100):
        lo, hi = sorted(rng.uniform(0.01, 1.0, size=2))
        if lo == hi:
            continue
        vals = [eval_f0(ProbabilityRule(n), hi, lo) for n in grid]
        assert all(b >= a for a, b in zip(vals, vals[1:]))


def test_continuous_in_power():
    base = eval_f0(ProbabilityRule(3.0), 0.7, 0.4)
    near = eval_f0(ProbabilityRule(3.0 + 1e-9), 0.7, 0.4)
    assert abs(base - near) < 1e-8


@pytest.mark.parametrize("n", [0.0, 1.0, 2.0, 4.0, 10.0, math.inf])
def test_axioms_hold(rng, n):
    report = check_axioms(ProbabilityRule(n), random_amplitude_pairs(rng, 1000), tol=1e-12)
    assert report.passed
    assert max(
        report.normalization_residual,
        report.relabeling_residual,
        report.phase_residual,
        report.scale_residual,
    ) < 1e-12


def test_axioms_catch_broken_rule(rng):
    def broken(p, q):
        return abs(p) ** 3 / (abs(p) ** 2 + abs(q) ** 2)

    report = check_axioms(ProbabilityRule(2), random_amplitude_pairs(rng, 200), f0=broken)
    assert not report.normalization
    assert not report.passed
    # degree-one homogeneous, so rescaling shows up too
    assert not report.scale


def test_axioms_catch_phase_dependence(rng):
    def phase_sensitive(p, q):
        w = abs(p) ** 2 / (abs(p) ** 2 + abs(q) ** 2)
        return w

    def f1(p, q):
        return 1.0 - phase_sensitive(p, q) + 0.1 * math.sin(cmath.phase(p))

    report = check_axioms(ProbabilityRule(2), random_amplitude_pairs(rng, 200),
                          f0=phase_sensitive, f1=f1)
    assert not report.normalization
    assert report.phase
