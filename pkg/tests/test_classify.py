"""Trace-discriminant classification: the f polynomial, the deltoid curve,
neutral-parameter recovery, and the tag decision table."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from su21.classify import (
    CUBE_ROOT_SNAP,
    IsometryClass,
    IsometryTag,
    classify,
    deltoid_point,
    deltoid_samples,
    neutral_alpha,
    trace_poly_f,
)
from su21.errors import IllConditioned, NoRoot
from su21.hermitian import Isometry
from su21.invariants import wrap_angle
from su21.sampling import (
    random_complex_reflection,
    random_loxodromic,
    random_regular_elliptic,
    random_screw_parabolic,
    random_su21,
    random_unipotent_2step,
    random_unipotent_3step,
)

OMEGA = complex(np.cos(2.0 * np.pi / 3.0), np.sin(2.0 * np.pi / 3.0))


# ---------------------------------------------------------------- f polynomial


@given(st.floats(min_value=-50.0, max_value=50.0))
def test_f_real_axis_factors(t):
    # on the real axis f(t) = (t - 3)^3 (t + 1)
    expected = (t - 3.0) ** 3 * (t + 1.0)
    assert trace_poly_f(complex(t, 0.0)) == pytest.approx(expected, rel=1e-12, abs=1e-9)


def test_f_frozen_values():
    assert trace_poly_f(0j) == pytest.approx(-27.0)
    assert trace_poly_f(3.0 + 0j) == pytest.approx(0.0, abs=1e-12)
    assert trace_poly_f(8.0 + 0j) == pytest.approx(1125.0)
    assert trace_poly_f(3.0 * OMEGA) == pytest.approx(0.0, abs=1e-12)


def test_f_array_input():
    z = np.array([0j, 3.0 + 0j, 8.0 + 0j])
    out = trace_poly_f(z)
    assert out.shape == (3,)
    np.testing.assert_allclose(out, [-27.0, 0.0, 1125.0], atol=1e-12)


# -------------------------------------------------------------------- deltoid


@given(st.floats(min_value=-np.pi, max_value=np.pi))
def test_deltoid_on_zero_set(alpha):
    assert abs(trace_poly_f(deltoid_point(alpha))) < 1e-10


def test_deltoid_cusps():
    assert deltoid_point(0.0) == pytest.approx(3.0 + 0j)
    assert deltoid_point(2.0 * np.pi / 3.0) == pytest.approx(3.0 * OMEGA, abs=1e-15)
    assert deltoid_point(-2.0 * np.pi / 3.0) == pytest.approx(3.0 * np.conj(OMEGA), abs=1e-15)


def test_deltoid_samples_shape():
    alpha, z = deltoid_samples(7)
    assert alpha.shape == z.shape == (7,)
    np.testing.assert_allclose(z, deltoid_point(alpha))
    with pytest.raises(ValueError):
        deltoid_samples(0)


# -------------------------------------------------------------- neutral alpha


def test_neutral_alpha_inverts_parametrization():
    alphas = np.linspace(-np.pi + 1e-3, np.pi, 181)
    for a in alphas:
        rec = neutral_alpha(deltoid_point(float(a)))
        assert abs(wrap_angle(rec - a)) < 1e-9


@pytest.mark.parametrize("a", [1e-4, -1e-4, 2.0 * np.pi / 3.0 + 1e-4, 1e-6])
def test_neutral_alpha_near_cusp(a):
    # the trace->alpha map is Holder-1/2 at the cusps, so half the digits is
    # the honest expectation this close in
    rec = neutral_alpha(deltoid_point(a))
    assert abs(wrap_angle(rec - a)) < 1e-6


def test_neutral_alpha_rejects_off_curve():
    with pytest.raises(NoRoot):
        neutral_alpha(0j)
    with pytest.raises(NoRoot):
        neutral_alpha(10.0 + 0j)


# ------------------------------------------------------------------ tag table


def test_identity_and_scalar_lifts():
    res = classify(Isometry(np.eye(3, dtype=complex)))
    assert res.tag is IsometryTag.IDENTITY
    assert res.f_value == pytest.approx(0.0, abs=1e-12)
    assert res.trace == pytest.approx(3.0 + 0j)
    for w in (OMEGA, np.conj(OMEGA)):
        res_w = classify(Isometry(w * np.eye(3, dtype=complex)))
        assert res_w.tag is IsometryTag.IDENTITY


GENERATORS = [
    (random_loxodromic, IsometryTag.LOXODROMIC),
    (random_regular_elliptic, IsometryTag.REGULAR_ELLIPTIC),
    (random_unipotent_2step, IsometryTag.UNIPOTENT_2STEP),
    (random_unipotent_3step, IsometryTag.UNIPOTENT_3STEP),
    (random_screw_parabolic, IsometryTag.SCREW_PARABOLIC),
    (random_complex_reflection, IsometryTag.COMPLEX_REFLECTION),
]


@pytest.mark.parametrize("gen,tag", GENERATORS, ids=[t.value for _, t in GENERATORS])
def test_synthetic_generators_classify(rng, gen, tag):
    for _ in range(40):
        res = classify(gen(rng))
        assert res.tag is tag


@pytest.mark.parametrize("gen,tag", GENERATORS, ids=[t.value for _, t in GENERATORS])
def test_scalar_lift_invariance(rng, gen, tag):
    # classify sees PU(2,1): multiplying the lift by a cube root of unity
    # must not change the answer
    for _ in range(10):
        a = gen(rng)
        for w in (OMEGA, np.conj(OMEGA)):
            assert classify(Isometry(w * a.matrix)).tag is tag


def test_f_sign_matches_tag(rng):
    for _ in range(40):
        res = classify(random_loxodromic(rng))
        assert res.f_value > 0.0
        res = classify(random_regular_elliptic(rng))
        assert res.f_value < 0.0


def test_parabolic_and_boundary_flags():
    flags = {
        IsometryTag.LOXODROMIC: (False, False),
        IsometryTag.REGULAR_ELLIPTIC: (False, False),
        IsometryTag.SCREW_PARABOLIC: (True, True),
        IsometryTag.UNIPOTENT_2STEP: (True, True),
        IsometryTag.UNIPOTENT_3STEP: (True, True),
        IsometryTag.COMPLEX_REFLECTION: (False, True),
        IsometryTag.IDENTITY: (False, True),
    }
    for tag, (parab, bdry) in flags.items():
        res = IsometryClass(tag, 0.0, 3.0 + 0j)
        assert res.is_parabolic is parab
        assert res.is_boundary is bdry


def test_neutral_eigenvalue_reported(rng):
    for _ in range(20):
        res = classify(random_screw_parabolic(rng))
        lam = res.neutral_eigenvalue
        assert lam is not None
        assert abs(abs(lam) - 1.0) < 1e-9
        # the screw generator stays off the cusps by construction
        assert abs(lam**3 - 1.0) > 1e-3
    for _ in range(20):
        res = classify(random_unipotent_3step(rng))
        lam = res.neutral_eigenvalue
        assert lam is not None
        assert abs(lam**3 - 1.0) < 1e-12


def test_neutral_eigenvalue_accuracy():
    # reflection about a known axis: lift diag(e^{ia}, e^{-2ia}, e^{ia})
    a = 0.9
    m = np.diag([np.exp(1j * a), np.exp(-2j * a), np.exp(1j * a)])
    res = classify(Isometry(m))
    assert res.tag is IsometryTag.COMPLEX_REFLECTION
    assert abs(res.neutral_eigenvalue - np.exp(1j * a)) < 1e-8


def test_gray_band_raises_ill_conditioned():
    # a unipotent bump right at the rank threshold must refuse, not guess
    m = np.eye(3, dtype=complex)
    m[0, 2] = 1e-7j
    with pytest.raises(IllConditioned):
        classify(Isometry(m))


def test_clean_tiny_unipotent_still_resolves():
    # an order of magnitude above the band the same shape is a clean 2-step
    m = np.eye(3, dtype=complex)
    m[0, 2] = 1e-5j
    assert classify(Isometry(m)).tag is IsometryTag.UNIPOTENT_2STEP


def test_cusp_snap_uses_exact_cube_root():
    # trace within the snap window of 3w forces the unipotent branch with
    # lambda = w exactly
    m = np.eye(3, dtype=complex)
    m[0, 2] = 2.0j
    res = classify(Isometry(OMEGA * m))
    assert res.tag is IsometryTag.UNIPOTENT_2STEP
    assert res.neutral_eigenvalue == OMEGA
    assert abs(res.trace - 3.0 * OMEGA) < CUBE_ROOT_SNAP


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_random_words_get_some_label(seed):
    # generic products are overwhelmingly loxodromic or regular elliptic;
    # whatever comes back must carry a consistent f sign
    rng = np.random.default_rng(seed)
    res = classify(random_su21(rng))
    if res.tag is IsometryTag.LOXODROMIC:
        assert res.f_value > 0.0
    elif res.tag is IsometryTag.REGULAR_ELLIPTIC:
        assert res.f_value < 0.0
    else:
        assert abs(res.f_value) <= 1e-8
