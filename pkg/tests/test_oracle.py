"""Closed-form reference curve, transform identity, and random membership."""

import cmath
import math

import numpy as np
import pytest

from schurvar import (
    AdmissibleSampler,
    HalfPlane,
    Janowski,
    gronwall_curve,
    gronwall_curve_point,
    h_transform,
    membership_trial,
    q_point,
    sample_admissible,
    schur_parameters,
    theta_grid,
)

HP = HalfPlane()


def test_curve_reduces_to_log_at_zero_slope():
    z0 = 0.6
    for theta in theta_grid(16):
        got = gronwall_curve_point(z0, 0.0, theta)
        want = -cmath.log(1 - cmath.exp(1j * theta) * z0 * z0)
        assert abs(got - want) <= 1e-12


def test_curve_frozen_value():
    got = gronwall_curve_point(0.6, 0.3, 0.0)
    assert abs(got - 0.8621754109643867) <= 1e-14
    assert abs(got.imag) <= 1e-15


def test_curve_matches_region_engine_pointwise():
    for theta in theta_grid(8):
        got = gronwall_curve_point(0.6, 0.7, theta)
        want = q_point(HP, (0j, 0.7), -1, 0.6, cmath.exp(1j * theta))
        assert abs(got - want) <= 1e-12


def test_curve_batch_matches_pointwise():
    thetas, points = gronwall_curve(0.5, 0.4, samples=32)
    assert thetas == theta_grid(32)
    for theta, p in zip(thetas, points):
        assert p == gronwall_curve_point(0.5, 0.4, theta)


def test_curve_conjugate_symmetry():
    for theta in (0.3, 1.1, 2.9):
        a = gronwall_curve_point(0.5, 0.6, theta)
        b = gronwall_curve_point(0.5, 0.6, -theta)
        assert abs(b - a.conjugate()) <= 1e-14


def test_curve_slope_validation():
    with pytest.raises(ValueError):
        gronwall_curve_point(0.5, 1.0, 0.0)
    with pytest.raises(ValueError):
        gronwall_curve_point(0.5, -0.1, 0.0)


def test_h_transform_identity_against_engine():
    rng = np.random.default_rng(12)
    for dom in (HP, Janowski(0.5, -0.5)):
        for j in (0, 1, 2):
            for n in (1, 2, 3):
                z0 = rng.uniform(0.2, 0.8) * cmath.exp(1j * rng.uniform(-np.pi, np.pi))
                eps = cmath.exp(1j * rng.uniform(-np.pi, np.pi))
                q = q_point(dom, (0j,) * n, j, z0, eps)
                lhs = (j + 1) * q / z0 ** (j + 1)
                rhs = h_transform(dom, j, n, eps * z0**n)
                assert abs(lhs - rhs) <= 1e-10


def test_h_transform_closed_form():
    z = 0.3 + 0.2j
    got = h_transform(HP, 0, 1, z)
    want = -2 - 2 * cmath.log(1 - z) / z
    assert abs(got - want) <= 1e-11


def test_h_transform_vanishes_at_origin():
    assert abs(h_transform(HP, 0, 1, 1e-6)) < 1e-4


def test_h_transform_validation():
    with pytest.raises(ValueError):
        h_transform(HP, -1, 1, 0.5)
    with pytest.raises(ValueError):
        h_transform(HP, 0, 0, 0.5)
    with pytest.raises(ValueError):
        h_transform(HP, 0, 1, 0.0)
    with pytest.raises(ValueError):
        h_transform(HP, 0, 1, 1.5)


def test_sampler_is_deterministic():
    s = AdmissibleSampler(gamma=(0.2, -0.3 + 0.1j), blaschke_degree=2, seed=41)
    f = sample_admissible(s, HP)
    g = sample_admissible(s, HP)
    pts = [0.3, -0.2 + 0.4j, 0.55j]
    assert [f(z) for z in pts] == [g(z) for z in pts]
    other = sample_admissible(
        AdmissibleSampler(gamma=(0.2, -0.3 + 0.1j), blaschke_degree=2, seed=42), HP
    )
    assert any(f(z) != other(z) for z in pts)


def test_sampler_respects_target_range():
    s = AdmissibleSampler(gamma=(0.1j,), blaschke_degree=3, seed=7)
    f = sample_admissible(s, HP)
    rng = np.random.default_rng(8)
    for _ in range(100):
        z = 0.95 * rng.uniform(0, 1) * cmath.exp(1j * rng.uniform(-np.pi, np.pi))
        assert f(z).real > 0


def test_sampler_prefix_is_forced():
    # Invert the half-plane map, expand by circle sampling, and check
    # that the sample's first parameters equal the requested prefix.
    gamma = (0.2, -0.3 + 0.1j)
    f = sample_admissible(
        AdmissibleSampler(gamma=gamma, blaschke_degree=2, seed=13), HP
    )
    r, m = 0.3, 512
    vals = [f(r * cmath.exp(2j * math.pi * i / m)) for i in range(m)]
    w = [(v - 1) / (v + 1) for v in vals]
    coeffs = np.fft.fft(np.array(w)) / m
    data = tuple(coeffs[p] / r**p for p in range(4))
    sp = schur_parameters(data)
    assert abs(sp.gamma[0] - gamma[0]) <= 1e-9
    assert abs(sp.gamma[1] - gamma[1]) <= 1e-9


def test_sampler_validation():
    with pytest.raises(ValueError):
        AdmissibleSampler(gamma=(1.2,), blaschke_degree=1, seed=0)
    with pytest.raises(ValueError):
        AdmissibleSampler(gamma=(0.5,), blaschke_degree=-1, seed=0)


def test_membership_trial_all_inside():
    rep = membership_trial(HP, (0j, 0.3), -1, 0.5, trials=200, seed=2)
    assert rep.inside == rep.total == 200
    assert rep.max_signed_distance < 0
    assert rep.failures == ()


def test_membership_trial_deterministic():
    a = membership_trial(HP, (0j, 0.3), -1, 0.5, trials=50, seed=9)
    b = membership_trial(HP, (0j, 0.3), -1, 0.5, trials=50, seed=9)
    assert a == b


def test_membership_degenerate_leaf_sits_on_trace():
    # Degree-zero leaves give unimodular multipliers: the sampled value
    # lands on the traced curve itself, outside the inscribed polygon by
    # at most the chord sag of a 256-gon.
    rep = membership_trial(
        HP, (0j, 0.3), -1, 0.5, trials=100, seed=2, degrees=(0,), inflation=1e-2
    )
    assert rep.inside == rep.total
    assert -1e-9 <= rep.max_signed_distance <= 1e-3


def test_membership_failures_are_reported():
    rep = membership_trial(
        HP, (0j, 0.3), -1, 0.5, trials=40, seed=2, degrees=(0,), inflation=1e-9
    )
    assert rep.inside < rep.total
    assert len(rep.failures) == rep.total - rep.inside
    for trial, point, dist in rep.failures:
        assert 0 <= trial < 40
        assert dist > 1e-9
        assert isinstance(point, complex)
