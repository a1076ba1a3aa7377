import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from slopegen.algebra import ONE, SplitQuaternion, multiply, normalize, quadratic_form
from slopegen.audit import random_unit_timelike
from slopegen.cases import SlopeCase
from slopegen.errors import AxisCausalityMismatch, AxisNotUnit, NotTimelike
from slopegen.minkowski import MinkowskiVec3, metric
from slopegen.rotation import (
    ETA, LorentzMatrix3, axis_plane_spectral_radius, case_rotor, closed_form_matrix,
    full_angle_quaternion, published_matrix, rotation_matrix, sandwich, sandwich_quaternion,
)

from .conftest import unit_timelike, vecs

V = MinkowskiVec3
BASIS = (V(1, 0, 0), V(0, 1, 0), V(0, 0, 1))


def spacelike_axis(rng):
    while True:
        w = V.from_seq(rng.uniform(-2, 2, 3))
        q = metric(w, w)
        if q > 0.1:
            return w / math.sqrt(q)


def timelike_axis(rng):
    while True:
        w = V.from_seq(rng.uniform(-2, 2, 3))
        q = metric(w, w)
        if q < -0.1:
            return w / math.sqrt(-q)


def axis_for(case, rng):
    return timelike_axis(rng) if case.spherical else spacelike_axis(rng)


def test_identity():
    v = V(0.3, -1.2, 2.0)
    assert sandwich(ONE, v) == v
    assert rotation_matrix(ONE) == LorentzMatrix3.identity()


def test_spherical_doubling():
    q = normalize(SplitQuaternion(math.cos(0.35), math.sin(0.35), 0, 0))
    got = sandwich(q, V(0, 1, 0))
    assert list(got) == pytest.approx([0, math.cos(0.7), math.sin(0.7)], abs=1e-15)


def test_r11_entry():
    q = SplitQuaternion(math.cosh(0.5), 0, math.sinh(0.5), 0)
    assert rotation_matrix(q)[0, 0] == pytest.approx(math.cosh(1.0), rel=1e-15)
    assert published_matrix(q)[0, 0] == pytest.approx(math.cosh(1.0), rel=1e-15)


def test_not_timelike():
    with pytest.raises(NotTimelike):
        sandwich(SplitQuaternion(0, 0, 1, 0), V(1, 0, 0))
    with pytest.raises(NotTimelike):
        rotation_matrix(SplitQuaternion(1, 0, 1, 0))


def test_matrix_matches_sandwich(rng):
    for _ in range(50):
        q = random_unit_timelike(rng)
        m = rotation_matrix(q)
        for _ in range(10):
            v = V.from_seq(rng.uniform(-3, 3, 3))
            got, want = m.apply(v), sandwich(q, v)
            assert max(abs(a - b) for a, b in zip(got, want)) <= 1e-12 * (1 + want.euclidean_norm())
        sq = sandwich_quaternion(q, V(0.2, 0.7, -1.1))
        assert abs(sq.w) <= 1e-12


def test_published_rp_matches_sandwich(rng):
    for _ in range(50):
        q = random_unit_timelike(rng)
        assert np.allclose(published_matrix(q).array(), rotation_matrix(q).array(), rtol=0, atol=1e-12)


@settings(max_examples=100)
@given(unit_timelike(), unit_timelike())
def test_homomorphism(p, q):
    lhs = rotation_matrix(multiply(p, q)).array()
    rhs = (rotation_matrix(p) @ rotation_matrix(q)).array()
    scale = 1 + np.abs(rhs).max()
    assert np.abs(lhs - rhs).max() <= 1e-10 * scale


@given(unit_timelike())
def test_metric_preserved(q):
    m = rotation_matrix(q)
    a = m.array()
    scale = 1 + np.abs(a).max() ** 2
    assert np.abs(a.T @ ETA @ a - ETA).max() <= 1e-10 * scale
    assert abs(m.det() - 1.0) <= 1e-10 * scale


@given(unit_timelike(), vecs)
def test_sandwich_preserves_metric(q, v):
    w = sandwich(q, v)
    scale = (1 + q.euclidean_sq()) ** 2 * (1 + v.euclidean_sq())
    assert abs(metric(w, w) - metric(v, v)) <= 1e-11 * scale


def test_case_rotor_examples():
    for case in SlopeCase:
        axis = V(1, 0, 0) if case.spherical else V(0, 0, 1)
        assert case_rotor(case, 0.0, axis).q == ONE
    r = case_rotor(SlopeCase.TIMELIKE_CONE, 2.0, V(0, 0, 1))
    assert list(r.q) == pytest.approx([math.cosh(1), 0, 0, -math.sinh(1)], rel=1e-15)
    assert quadratic_form(r.q) == pytest.approx(1.0, abs=1e-15)
    r = case_rotor(SlopeCase.SPACELIKE_CONE_SPHERICAL, math.pi / 2, V(1, 0, 0))
    c = math.cos(math.pi / 4)
    assert list(r.q) == pytest.approx([c, -c, 0, 0], rel=1e-15)
    assert r.angle == pytest.approx(math.pi / 4)


def test_case_rotor_errors():
    with pytest.raises(AxisCausalityMismatch):
        case_rotor(SlopeCase.TIMELIKE_CONE, 1.0, V(1, 0, 0))
    with pytest.raises(AxisCausalityMismatch):
        case_rotor(SlopeCase.SPACELIKE_CONE_SPHERICAL, 1.0, V(0, 1, 0))
    with pytest.raises(AxisNotUnit):
        case_rotor(SlopeCase.SPACELIKE_CONE_HYPERBOLIC, 1.0, V(0, 2, 0))


def test_closed_form_identity_at_zero():
    for case in SlopeCase:
        axis = V(1, 0, 0) if case.spherical else V(0, 1, 0)
        assert np.allclose(closed_form_matrix(case, 0.0, axis).array(), np.eye(3), atol=1e-15)


def test_closed_form_example_entries():
    # f'(0) = (0, 0, 1), xi = 1
    m = closed_form_matrix(SlopeCase.TIMELIKE_CONE, 1.0, V(0, 0, 1))
    assert m[0, 0] == pytest.approx(math.cosh(1), rel=1e-15)
    assert m[0, 1] == pytest.approx(-math.sinh(1), rel=1e-15)


@pytest.mark.parametrize("case", list(SlopeCase))
def test_closed_form_agrees_with_sandwich(case, rng):
    for _ in range(50):
        axis = axis_for(case, rng)
        xi = float(rng.uniform(-2, 2))
        truth = rotation_matrix(case_rotor(case, xi, axis).q)
        got = closed_form_matrix(case, xi, axis)
        assert np.abs(got.array() - truth.array()).max() <= 1e-10 * (1 + np.abs(truth.array()).max())


@pytest.mark.parametrize("case", list(SlopeCase))
def test_axis_fixed(case, rng):
    for _ in range(30):
        axis = axis_for(case, rng)
        xi = float(rng.uniform(-3, 3))
        got = sandwich(case_rotor(case, xi, axis).q, axis)
        assert max(abs(a - b) for a, b in zip(got, axis)) <= 1e-10 * (1 + axis.euclidean_norm()) * math.cosh(xi) ** 2


@pytest.mark.parametrize("case", list(SlopeCase))
def test_double_cover(case, rng):
    # half-angle rotor and full-angle quaternion both act as the rotation by xi
    for _ in range(20):
        axis = axis_for(case, rng)
        xi = float(rng.uniform(-2, 2))
        half = rotation_matrix(case_rotor(case, xi, axis).q).array()
        assert np.allclose(half, closed_form_matrix(case, xi, axis).array(), atol=1e-10)
        full = rotation_matrix(case_rotor(case, 2 * xi, axis).q).array()
        by_full = rotation_matrix(full_angle_quaternion(case, xi, axis)).array()
        assert np.allclose(full, by_full, atol=1e-9)


def test_spacelike_axis_trace_grows(rng):
    for _ in range(10):
        axis = spacelike_axis(rng)
        xis = np.linspace(0, 3, 31)
        tr = [np.trace(rotation_matrix(case_rotor(SlopeCase.TIMELIKE_CONE, x, axis).q).array()) for x in xis]
        assert np.all(np.diff(tr) > 0)
        tr_neg = [np.trace(rotation_matrix(case_rotor(SlopeCase.TIMELIKE_CONE, -x, axis).q).array()) for x in xis]
        assert np.allclose(tr, tr_neg, rtol=1e-12)


def test_timelike_axis_bounded(rng):
    for _ in range(20):
        axis = timelike_axis(rng)
        xi = float(rng.uniform(-6, 6))
        m = rotation_matrix(case_rotor(SlopeCase.SPACELIKE_CONE_SPHERICAL, xi, axis).q)
        assert axis_plane_spectral_radius(m, axis) == pytest.approx(1.0, abs=1e-10)


def test_matrix_serialization():
    q = SplitQuaternion(math.cosh(0.3), 0.1, 0.2, 0.05)
    m = rotation_matrix(normalize(q))
    assert LorentzMatrix3.from_seq(m.to_list()) == m
    assert len(m.format_text().splitlines()) == 3
