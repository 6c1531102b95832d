"""Random generators for tests: group elements, boundary points, tetrahedra.

Everything is assembled from pieces that preserve the form exactly in
floating point (diagonal scalings with reciprocal corner entries, the
order-3 symmetry matrices, elementary unipotent blocks), so a generated
matrix sits in the group to machine precision no matter how many factors
went in.  All generators take a numpy Generator; none keep global state.
"""

from __future__ import annotations

import numpy as np

from .errors import RangeError
from .hermitian import BoundaryPoint, Isometry, su21_normalize
from .symmetry33 import SymGroupParams, j1_matrix, j2_matrix
from .tetrahedra import TetraParams

QUARTER_PI = np.pi / 4.0
HALF_PI = np.pi / 2.0
# keep random neutral angles clear of the deltoid cusps at 0, +-2pi/3
CUSP_MARGIN = 0.05


def random_unit(rng: np.random.Generator) -> complex:
    """A uniform point of the unit circle."""
    b = rng.uniform(0.0, 2.0 * np.pi)
    return complex(np.cos(b), np.sin(b))


def _diagonal_loxodromic(rng: np.random.Generator, r: float) -> np.ndarray:
    b = rng.uniform(0.0, 2.0 * np.pi)
    u = r * np.exp(1j * b)
    return np.diag([u, np.exp(-2j * b), np.exp(1j * b) / r]).astype(complex)


def random_su21(rng: np.random.Generator, n_factors: int = 4) -> Isometry:
    """A generic group element: alternating symmetry and diagonal factors."""
    if n_factors < 1:
        raise RangeError("need at least one factor")
    m = np.eye(3, dtype=complex)
    for k in range(n_factors):
        if k % 2 == 0:
            th, ph = rng.uniform(-QUARTER_PI + 0.05, QUARTER_PI - 0.05, 2)
            ps = rng.uniform(0.0, HALF_PI)
            p = SymGroupParams(float(th), float(ph), float(ps))
            j = j1_matrix(p) if rng.random() < 0.5 else j2_matrix(p)
            m = m @ j.matrix
        else:
            m = m @ _diagonal_loxodromic(rng, rng.uniform(1.1, 1.8))
    return su21_normalize(m)


def random_boundary_point(rng: np.random.Generator) -> BoundaryPoint:
    """A generic null lift: solve the first slot against the last two."""
    v1 = complex(rng.normal(), rng.normal())
    v2 = complex(rng.normal(), rng.normal())
    while abs(v2) < 0.3:
        v2 = complex(rng.normal(), rng.normal())
    s = rng.normal()
    v0 = (-abs(v1) ** 2 / 2.0 + 1j * s) / np.conj(v2)
    return BoundaryPoint(np.array([v0, v1, v2], dtype=complex))


def random_loxodromic(rng: np.random.Generator) -> Isometry:
    """Conjugate of an exact diagonal with eigenvalue modulus in [1.2, 3]."""
    d = _diagonal_loxodromic(rng, rng.uniform(1.2, 3.0))
    c = random_su21(rng)
    return c @ su21_normalize(d) @ c.inverse()


_TO_MIXED_BASIS = np.array(
    [
        [1.0 / np.sqrt(2.0), 0.0, 1.0 / np.sqrt(2.0)],
        [0.0, 1.0, 0.0],
        [1.0 / np.sqrt(2.0), 0.0, -1.0 / np.sqrt(2.0)],
    ],
    dtype=complex,
)


def random_regular_elliptic(rng: np.random.Generator) -> Isometry:
    """Three distinct unit eigenvalues, none forming a repeated pair.

    A unitary diagonal preserves the diagonalised form, and the basis
    change back to the ambient form is orthogonal and involutive, so the
    assembled matrix is exactly in the group.
    """
    while True:
        a, b = rng.uniform(0.3, 2.0 * np.pi - 0.3, 2)
        c = -(a + b)
        gaps = (
            abs(np.exp(1j * a) - np.exp(1j * b)),
            abs(np.exp(1j * a) - np.exp(1j * c)),
            abs(np.exp(1j * b) - np.exp(1j * c)),
        )
        if min(gaps) > 0.1:
            break
    d = np.diag([np.exp(1j * a), np.exp(1j * b), np.exp(1j * c)])
    m = su21_normalize(_TO_MIXED_BASIS @ d @ _TO_MIXED_BASIS)
    g = random_su21(rng)
    return g @ m @ g.inverse()


def _cube_root(rng: np.random.Generator) -> complex:
    k = int(rng.integers(0, 3))
    return complex(np.cos(2.0 * np.pi * k / 3.0), np.sin(2.0 * np.pi * k / 3.0))


def _neutral_angle(rng: np.random.Generator) -> float:
    """Unit angle at least CUSP_MARGIN away from 0 and +-2pi/3."""
    while True:
        a = rng.uniform(-np.pi, np.pi)
        gap = min(
            abs(a), abs(a - 2.0 * np.pi / 3.0), abs(a + 2.0 * np.pi / 3.0)
        )
        if gap >= CUSP_MARGIN:
            return float(a)


def random_unipotent_2step(rng: np.random.Generator) -> Isometry:
    """Conjugated vertical translation, optionally times a unit cube root."""
    t = rng.uniform(0.5, 3.0) * (1.0 if rng.random() < 0.5 else -1.0)
    m = np.eye(3, dtype=complex)
    m[0, 2] = 1j * t
    g = random_su21(rng)
    return g @ su21_normalize(_cube_root(rng) * m) @ g.inverse()


def random_unipotent_3step(rng: np.random.Generator) -> Isometry:
    """Conjugated Heisenberg translation with nonzero horizontal part."""
    z = complex(rng.normal(), rng.normal())
    while abs(z) < 0.3:
        z = complex(rng.normal(), rng.normal())
    s = rng.normal()
    m = np.array(
        [
            [1.0, -np.conj(z), (-abs(z) ** 2 + 1j * s) / 2.0],
            [0.0, 1.0, z],
            [0.0, 0.0, 1.0],
        ],
        dtype=complex,
    )
    g = random_su21(rng)
    return g @ su21_normalize(_cube_root(rng) * m) @ g.inverse()


def _neutral_diagonal(alpha: float) -> np.ndarray:
    return np.diag(
        [np.exp(1j * alpha), np.exp(-2j * alpha), np.exp(1j * alpha)]
    ).astype(complex)


def random_screw_parabolic(rng: np.random.Generator) -> Isometry:
    """Neutral rotation times a vertical translation, conjugated."""
    alpha = _neutral_angle(rng)
    t = rng.uniform(0.5, 3.0) * (1.0 if rng.random() < 0.5 else -1.0)
    m = _neutral_diagonal(alpha)
    m[0, 2] = 1j * t * np.exp(1j * alpha)
    g = random_su21(rng)
    return g @ su21_normalize(m) @ g.inverse()


def random_complex_reflection(rng: np.random.Generator) -> Isometry:
    """Conjugated neutral diagonal: a two-dimensional fixed eigenspace."""
    alpha = _neutral_angle(rng)
    g = random_su21(rng)
    return g @ su21_normalize(_neutral_diagonal(alpha)) @ g.inverse()


def random_tetra_params(
    rng: np.random.Generator,
    balanced: bool = True,
    margin: float = 0.05,
) -> TetraParams:
    """Angle parameters with clearance from every degeneracy boundary."""
    th = rng.uniform(-QUARTER_PI + margin, QUARTER_PI - margin)
    ph = rng.uniform(-QUARTER_PI + margin, QUARTER_PI - margin)
    ps = rng.uniform(margin, HALF_PI - margin)
    if balanced:
        r = 1.0
    else:
        r = (
            rng.uniform(1.15, 2.5)
            if rng.random() < 0.5
            else rng.uniform(0.4, 0.87)
        )
    return TetraParams(float(th), float(ph), float(ps), float(r))


def random_sym_params(
    rng: np.random.Generator, margin: float = 0.03
) -> SymGroupParams:
    """Symmetric-pair angles with theta, phi clear of +-pi/4; full psi range."""
    th = rng.uniform(-QUARTER_PI + margin, QUARTER_PI - margin)
    ph = rng.uniform(-QUARTER_PI + margin, QUARTER_PI - margin)
    ps = rng.uniform(0.0, HALF_PI)
    return SymGroupParams(float(th), float(ph), float(ps))
