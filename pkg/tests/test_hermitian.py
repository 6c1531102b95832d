"""Form arithmetic, boundary points, and group-element plumbing."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from su21.errors import (
    DegeneratePair,
    FormViolation,
    NotFixed,
    OnIdealEndpoint,
)
from su21.hermitian import (
    H,
    BoundaryPoint,
    Isometry,
    eigenvalue_at,
    geodesic_project,
    herm,
    herm_sq,
    is_null,
    polar_vector,
    principal_cube_root,
    proj_distance,
    su21_normalize,
)
from su21.sampling import (
    random_boundary_point,
    random_loxodromic,
    random_su21,
)

finite = st.floats(-5.0, 5.0, allow_nan=False, allow_infinity=False)


def c3(rng):
    return rng.normal(size=3) + 1j * rng.normal(size=3)


def test_form_matrix_is_hermitian_involution():
    assert np.array_equal(H, H.conj().T)
    assert np.array_equal(H @ H, np.eye(3))


def test_herm_matches_component_formula(rng):
    for _ in range(50):
        v, w = c3(rng), c3(rng)
        direct = (
            v[0] * np.conj(w[2]) + v[1] * np.conj(w[1]) + v[2] * np.conj(w[0])
        )
        assert herm(v, w) == pytest.approx(direct, abs=1e-14)


def test_herm_conjugate_symmetry(rng):
    for _ in range(50):
        v, w = c3(rng), c3(rng)
        assert herm(v, w) == pytest.approx(np.conj(herm(w, v)), abs=1e-14)


def test_herm_sq_is_real_signature(rng):
    # e2 is positive, (1,0,0) and (0,0,1) are null, their difference mixes
    assert herm_sq([0.0, 1.0, 0.0]) == pytest.approx(1.0)
    assert herm_sq([1.0, 0.0, 0.0]) == 0.0
    assert herm_sq([1.0, 0.0, -1.0]) == pytest.approx(-2.0)
    for _ in range(20):
        v = c3(rng)
        assert herm_sq(v) == pytest.approx(herm(v, v).real, abs=1e-13)
        assert abs(herm(v, v).imag) < 1e-13


def test_is_null_on_standard_lifts():
    assert is_null([1.0, 0.0, 0.0])
    assert is_null([0.0, 0.0, 1.0])
    assert not is_null([0.0, 1.0, 0.0])


def test_boundary_point_rejects_non_null():
    with pytest.raises(FormViolation):
        BoundaryPoint(np.array([0.0, 1.0, 0.0]))
    with pytest.raises(ValueError):
        BoundaryPoint(np.zeros(3))


def test_boundary_point_accepts_generated_nulls(rng):
    for _ in range(100):
        p = random_boundary_point(rng)
        assert abs(herm_sq(p.lift)) < 1e-12


def test_boundary_point_lift_is_frozen(rng):
    p = random_boundary_point(rng)
    with pytest.raises(ValueError):
        p.lift[0] = 0.0


def test_same_point_scaling_invariance(rng):
    p = random_boundary_point(rng)
    q = p.scaled(0.7 - 2.1j)
    assert p.same_point(q)
    assert not p.same_point(random_boundary_point(rng))


def test_proj_distance_parallel_and_orthogonal(rng):
    v = c3(rng)
    assert proj_distance(v, v * (2.0 - 1.0j)) < 1e-12
    assert proj_distance([1, 0, 0], [0, 1, 0]) == pytest.approx(1.0)


def test_proj_distance_resolves_tiny_angles(rng):
    # sqrt(1 - cos^2) would floor near 1e-8; the residual route must not
    u = c3(rng)
    u = u / np.linalg.norm(u)
    w = c3(rng)
    w = w - u * np.vdot(u, w)
    w /= np.linalg.norm(w)
    for eps in (1e-3, 1e-6, 1e-10, 1e-12):
        d = proj_distance(u, u + eps * w)
        assert d == pytest.approx(eps, rel=1e-3)


def test_isometry_inverse_is_exact(rng):
    for _ in range(20):
        m = random_su21(rng)
        ident = (m @ m.inverse()).matrix
        assert np.max(np.abs(ident - np.eye(3))) < 1e-12


def test_isometry_form_residual(rng):
    m = random_su21(rng)
    assert m.form_residual() < 1e-13
    bad = Isometry(2.0 * np.eye(3, dtype=complex))
    assert bad.form_residual() == pytest.approx(3.0)


def test_isometry_apply_preserves_nullity(rng):
    m = random_su21(rng)
    p = random_boundary_point(rng)
    q = m.apply(p)
    assert abs(herm_sq(q.lift)) < 1e-9 * float(np.vdot(q.lift, q.lift).real)


@given(re=finite, im=finite)
@settings(max_examples=60)
def test_principal_cube_root_branch(re, im):
    z = complex(re, im)
    if z == 0:
        with pytest.raises(ValueError):
            principal_cube_root(z)
        return
    w = principal_cube_root(z)
    assert w**3 == pytest.approx(z, rel=1e-12, abs=1e-12)
    # one-ulp slack: the angle is re-measured from rounded components
    assert -np.pi / 3 - 1e-12 < np.angle(w) <= np.pi / 3 + 1e-12


def test_su21_normalize_unit_determinant(rng):
    m = random_su21(rng).matrix * np.exp(0.4j)
    iso = su21_normalize(m)
    assert iso.det == pytest.approx(1.0, abs=1e-12)


def test_su21_normalize_rejects_form_breakers():
    with pytest.raises(FormViolation):
        su21_normalize(2.0 * np.eye(3))
    with pytest.raises(FormViolation):
        su21_normalize(np.diag([1.0, 2.0, 1.0]))


def test_eigenvalue_at_diagonal_fixed_points():
    r, b = 1.7, 0.3
    d = np.diag([r * np.exp(1j * b), np.exp(-2j * b), np.exp(1j * b) / r])
    m = su21_normalize(d)
    lam = eigenvalue_at(m, BoundaryPoint(np.array([1.0, 0.0, 0.0])))
    assert lam == pytest.approx(r * np.exp(1j * b), abs=1e-12)
    lam = eigenvalue_at(m, BoundaryPoint(np.array([0.0, 0.0, 1.0])))
    assert lam == pytest.approx(np.exp(1j * b) / r, abs=1e-12)


def test_eigenvalue_at_rejects_unfixed_point(rng):
    m = random_loxodromic(rng)
    with pytest.raises(NotFixed):
        eigenvalue_at(m, random_boundary_point(rng))


def test_polar_vector_is_orthogonal_positive(rng):
    for _ in range(20):
        p, q = random_boundary_point(rng), random_boundary_point(rng)
        c = polar_vector(p, q)
        nc = np.linalg.norm(c)
        assert abs(herm(c, p.lift)) < 1e-10 * nc * np.linalg.norm(p.lift)
        assert abs(herm(c, q.lift)) < 1e-10 * nc * np.linalg.norm(q.lift)
        assert herm_sq(c) > 0.0


def test_polar_vector_rejects_coincident_points(rng):
    p = random_boundary_point(rng)
    with pytest.raises(DegeneratePair):
        polar_vector(p, p.scaled(1.0 + 2.0j))


def test_geodesic_project_fixes_geodesic_points(rng):
    p1, p2 = random_boundary_point(rng), random_boundary_point(rng)
    h12 = herm(p1.lift, p2.lift)
    a = p1.lift * (-1.0 / h12)
    b = p2.lift
    for t in (0.5, 1.0, 2.7):
        g = t * a + b / t
        proj = geodesic_project(g, p1, p2)
        assert proj_distance(proj, g) < 1e-10


def test_geodesic_project_scale_invariant(rng):
    p1, p2 = random_boundary_point(rng), random_boundary_point(rng)
    z = random_boundary_point(rng)
    w1 = geodesic_project(z, p1, p2)
    w2 = geodesic_project(z.scaled(3.0 - 1.0j), p1, p2)
    assert proj_distance(w1, w2) < 1e-10


def test_geodesic_project_rejects_endpoint(rng):
    p1, p2 = random_boundary_point(rng), random_boundary_point(rng)
    with pytest.raises(OnIdealEndpoint):
        geodesic_project(p1, p1, p2)


def test_geodesic_project_rejects_degenerate_pair(rng):
    p1 = random_boundary_point(rng)
    with pytest.raises(DegeneratePair):
        geodesic_project(random_boundary_point(rng), p1, p1.scaled(2.0))
