"""Cartan invariant, cross-ratio, and bending invariant."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from su21.errors import ComplexLineDegeneracy, DegenerateTriple
from su21.hermitian import BoundaryPoint
from su21.invariants import (
    bending,
    cartan,
    cross_ratio,
    is_complex_linear,
    wrap_angle,
)
from su21.sampling import random_boundary_point, random_su21


def quad(rng):
    return tuple(random_boundary_point(rng) for _ in range(4))


@given(st.floats(-50.0, 50.0), st.integers(-3, 3))
@settings(max_examples=80)
def test_wrap_angle_period_and_range(x, k):
    w = wrap_angle(x)
    assert -np.pi < w <= np.pi + 1e-15
    assert wrap_angle(x + 2.0 * np.pi * k) == pytest.approx(w, abs=1e-9)


def test_cartan_range(rng):
    for _ in range(100):
        p1, p2, p3, _ = quad(rng)
        a = cartan(p1, p2, p3)
        assert -np.pi / 2 <= a <= np.pi / 2


def test_cartan_lift_scaling_invariance(rng):
    p1, p2, p3, _ = quad(rng)
    a = cartan(p1, p2, p3)
    b = cartan(p1.scaled(2.0 - 1.0j), p2.scaled(0.1j), p3.scaled(-3.0))
    assert b == pytest.approx(a, abs=1e-12)


def test_cartan_isometry_invariance(rng):
    p1, p2, p3, _ = quad(rng)
    g = random_su21(rng)
    a = cartan(p1, p2, p3)
    b = cartan(g.apply(p1), g.apply(p2), g.apply(p3))
    assert b == pytest.approx(a, abs=1e-10)


def test_cartan_alternates_under_swap(rng):
    for _ in range(20):
        p1, p2, p3, _ = quad(rng)
        assert cartan(p2, p1, p3) == pytest.approx(-cartan(p1, p2, p3), abs=1e-11)
        assert cartan(p1, p3, p2) == pytest.approx(-cartan(p1, p2, p3), abs=1e-11)


def test_cartan_cocycle(rng):
    for _ in range(30):
        p1, p2, p3, p4 = quad(rng)
        s = (
            cartan(p2, p3, p4)
            - cartan(p1, p3, p4)
            + cartan(p1, p2, p4)
            - cartan(p1, p2, p3)
        )
        assert abs(wrap_angle(s)) < 1e-10


def test_cartan_rejects_repeated_point(rng):
    p1, p2, _, _ = quad(rng)
    with pytest.raises(DegenerateTriple):
        cartan(p1, p2, p2.scaled(1.5j))


def test_complex_linear_triple_detected():
    p = BoundaryPoint(np.array([1.0, 0.0, 0.0], dtype=complex))
    q = BoundaryPoint(np.array([0.0, 0.0, 1.0], dtype=complex))
    r = BoundaryPoint(np.array([1.0, 0.0, 1.0j], dtype=complex))
    assert abs(cartan(p, q, r)) == pytest.approx(np.pi / 2, abs=1e-12)
    assert is_complex_linear(p, q, r)


def test_generic_triple_not_complex_linear(rng):
    p1, p2, p3, _ = quad(rng)
    assert not is_complex_linear(p1, p2, p3)


def test_cross_ratio_scaling_and_isometry_invariance(rng):
    p1, p2, p3, p4 = quad(rng)
    x = cross_ratio(p1, p2, p3, p4)
    y = cross_ratio(
        p1.scaled(3.0j), p2.scaled(-0.2), p3.scaled(1 + 1j), p4.scaled(5.0)
    )
    assert y == pytest.approx(x, rel=1e-12)
    g = random_su21(rng)
    z = cross_ratio(*(g.apply(p) for p in (p1, p2, p3, p4)))
    assert z == pytest.approx(x, rel=1e-9)


def test_bending_scaling_and_isometry_invariance(rng):
    p1, p2, p3, p4 = quad(rng)
    bb = bending(p1, p2, p3, p4)
    cc = bending(
        p1.scaled(1.0 - 2.0j), p2.scaled(0.4), p3.scaled(2.0j), p4.scaled(-1.0)
    )
    assert cc == pytest.approx(bb, rel=1e-12)
    g = random_su21(rng)
    dd = bending(*(g.apply(p) for p in (p1, p2, p3, p4)))
    assert dd == pytest.approx(bb, rel=1e-9)


def test_bending_rejects_point_on_the_line(rng):
    p = BoundaryPoint(np.array([1.0, 0.0, 0.0], dtype=complex))
    q = BoundaryPoint(np.array([0.0, 0.0, 1.0], dtype=complex))
    on_line = BoundaryPoint(np.array([1.0, 0.0, 1.0j], dtype=complex))
    z = random_boundary_point(rng)
    with pytest.raises(ComplexLineDegeneracy):
        bending(p, q, on_line, z)
