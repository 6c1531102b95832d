"""Hermitian form of signature (2,1) and the isometries preserving it.

Vectors are numpy arrays of shape (3,) over the complex numbers.  The ambient
form is fixed once and for all as

    H = [[0, 0, 1],
         [0, 1, 0],
         [1, 0, 0]]

so that ``herm(v, w) = w* H v`` is linear in ``v`` and conjugate-linear in
``w``.  Null vectors project to ideal boundary points of the complex
hyperbolic plane; negative vectors project to interior points.  Matrices
``M`` with ``M* H M = H`` and ``det M = 1`` represent holomorphic isometries.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DegeneratePair,
    FormViolation,
    NotFixed,
    OnIdealEndpoint,
)

TAU_NULL = 1e-9
TAU_FIX = 1e-9
TAU_FORM = 1e-12
TAU_DET = 1e-12

H = np.array(
    [
        [0.0, 0.0, 1.0],
        [0.0, 1.0, 0.0],
        [1.0, 0.0, 0.0],
    ],
    dtype=complex,
)
H.setflags(write=False)


def _as_vec(v) -> np.ndarray:
    a = np.asarray(v, dtype=complex)
    if a.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {a.shape}")
    return a


def _as_mat(m) -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {a.shape}")
    return a


def herm(v, w) -> complex:
    """Hermitian product ``w* H v``; conjugate-linear in the second slot."""
    v = _as_vec(v)
    w = _as_vec(w)
    return complex(
        v[0] * np.conj(w[2]) + v[1] * np.conj(w[1]) + v[2] * np.conj(w[0])
    )


def herm_sq(v) -> float:
    """Real value of ``herm(v, v)`` (the form is Hermitian)."""
    v = _as_vec(v)
    return float(2.0 * (v[0] * np.conj(v[2])).real + (v[1] * np.conj(v[1])).real)


def is_null(v, tol: float = TAU_NULL) -> bool:
    """True when ``herm(v, v)`` vanishes relative to the Euclidean size of v."""
    v = _as_vec(v)
    scale = float(np.vdot(v, v).real)
    if scale == 0.0:
        return False
    return abs(herm_sq(v)) <= tol * scale


def proj_distance(u, v) -> float:
    """Sine of the angle between the complex lines spanned by u and v.

    Zero iff u and v agree projectively; scale- and phase-invariant.
    Computed as the norm of v minus its projection onto u, which stays
    accurate for nearly parallel inputs where 1 - cos^2 would cancel.
    """
    u = _as_vec(u)
    v = _as_vec(v)
    nu = float(np.linalg.norm(u))
    nv = float(np.linalg.norm(v))
    if nu == 0.0 or nv == 0.0:
        raise ValueError("projective distance of a zero vector")
    un = u / nu
    w = v - un * np.vdot(un, v)
    w -= un * np.vdot(un, w)  # second pass for orthogonality near parallel
    return float(min(1.0, np.linalg.norm(w) / nv))


@dataclass(frozen=True, eq=False)
class BoundaryPoint:
    """Ideal boundary point stored through a null lift."""

    lift: np.ndarray

    def __post_init__(self):
        v = _as_vec(self.lift).copy()
        scale = float(np.vdot(v, v).real)
        if scale == 0.0:
            raise ValueError("zero vector is not a lift")
        if abs(herm_sq(v)) > TAU_NULL * scale:
            raise FormViolation(
                f"lift is not null: <v,v> = {herm_sq(v):.3e} at scale {scale:.3e}"
            )
        v.setflags(write=False)
        object.__setattr__(self, "lift", v)

    def scaled(self, c: complex) -> "BoundaryPoint":
        if c == 0:
            raise ValueError("zero rescaling")
        return BoundaryPoint(self.lift * c)

    def same_point(self, other: "BoundaryPoint", tol: float = 1e-9) -> bool:
        return proj_distance(self.lift, other.lift) <= tol


@dataclass(frozen=True, eq=False)
class Isometry:
    """Holomorphic isometry through a matrix in SU(2,1).

    Construction does not revalidate; use :func:`su21_normalize` to bring a
    raw form-preserving matrix into the type honestly.
    """

    matrix: np.ndarray

    def __post_init__(self):
        m = _as_mat(self.matrix).copy()
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def trace(self) -> complex:
        return complex(np.trace(self.matrix))

    @property
    def det(self) -> complex:
        return complex(np.linalg.det(self.matrix))

    def form_residual(self) -> float:
        """Max-norm of ``M* H M - H``."""
        m = self.matrix
        return float(np.max(np.abs(m.conj().T @ H @ m - H)))

    def inverse(self) -> "Isometry":
        # For exact form preservation, M^-1 = H M* H; this keeps products in
        # the group to machine precision where numpy.linalg.inv would not.
        return Isometry(H @ self.matrix.conj().T @ H)

    def __matmul__(self, other: "Isometry") -> "Isometry":
        return Isometry(self.matrix @ other.matrix)

    def apply(self, p: BoundaryPoint) -> BoundaryPoint:
        return BoundaryPoint(self.matrix @ p.lift)

    def apply_lift(self, v) -> np.ndarray:
        return self.matrix @ _as_vec(v)


def principal_cube_root(z: complex) -> complex:
    """Cube root with argument in (-pi/3, pi/3]."""
    z = complex(z)
    if z == 0:
        raise ValueError("cube root of zero")
    if z.imag == 0.0:
        z = complex(z.real, 0.0)  # fold -0.0 so negative reals use arg +pi
    r = abs(z) ** (1.0 / 3.0)
    a = np.angle(z) / 3.0
    return complex(r * np.cos(a), r * np.sin(a))


def su21_normalize(m, tol_form: float = TAU_FORM) -> Isometry:
    """Scale a form-preserving matrix to determinant one.

    Raises FormViolation when ``M* H M`` deviates from ``H`` by more than
    ``tol_form`` relative to the squared matrix scale.
    """
    m = _as_mat(m)
    scale = max(1.0, float(np.max(np.abs(m))) ** 2)
    dev = float(np.max(np.abs(m.conj().T @ H @ m - H)))
    if dev > tol_form * scale:
        raise FormViolation(
            f"form deviation {dev:.3e} exceeds {tol_form:.1e} * {scale:.3e}"
        )
    d = complex(np.linalg.det(m))
    if d == 0:
        raise FormViolation("singular matrix")
    return Isometry(m / principal_cube_root(d))


def eigenvalue_at(a: Isometry, p: BoundaryPoint, tol_fix: float = TAU_FIX) -> complex:
    """Eigenvalue of ``a`` at the claimed fixed point ``p``.

    Reads the ratio at the largest lift component and verifies the residual
    ``|A v - lam v|`` relative to ``|A| |v|``; raises NotFixed otherwise.
    """
    v = p.lift
    av = a.matrix @ v
    i = int(np.argmax(np.abs(v)))
    lam = complex(av[i] / v[i])
    res = float(np.linalg.norm(av - lam * v))
    scale = float(np.linalg.norm(a.matrix)) * float(np.linalg.norm(v))
    if res > tol_fix * scale:
        raise NotFixed(f"residual {res:.3e} at scale {scale:.3e}")
    return lam


def polar_vector(p: BoundaryPoint, q: BoundaryPoint) -> np.ndarray:
    """Polar vector of the complex line through two distinct boundary points.

    The returned lift c satisfies herm(c, p) = herm(c, q) = 0 and is a
    positive vector; it is the Hermitian cross-product H conj(p x q).
    """
    u = p.lift
    v = q.lift
    c = H @ np.conj(np.cross(u, v))
    nc = float(np.linalg.norm(c))
    if nc <= 1e-12 * float(np.linalg.norm(u)) * float(np.linalg.norm(v)):
        raise DegeneratePair("points coincide; no unique complex line")
    return c


def geodesic_project(
    z,
    p1: BoundaryPoint,
    p2: BoundaryPoint,
    tol_null: float = TAU_NULL,
) -> np.ndarray:
    """Orthogonal projection of a boundary point onto the geodesic (p1 p2).

    ``z`` may be a BoundaryPoint or a bare lift vector.  Returns a lift of
    the projected interior point, computed with lifts rescaled so that
    herm(p1, p2) = -1.  The result does not depend on the incoming lift of
    z.  Raises OnIdealEndpoint when z coincides with an endpoint (the
    projection degenerates there) and DegeneratePair when p1, p2 do not
    span a geodesic.
    """
    zv = _as_vec(getattr(z, "lift", z))
    h12 = herm(p1.lift, p2.lift)
    if abs(h12) <= 1e-12 * float(np.linalg.norm(p1.lift)) * float(
        np.linalg.norm(p2.lift)
    ):
        raise DegeneratePair("herm(p1, p2) vanishes; endpoints coincide")
    a = p1.lift * (-1.0 / h12)  # now herm(a, p2) = -1
    b = p2.lift

    za = herm(zv, a)
    zb = herm(zv, b)
    scale = float(np.linalg.norm(zv))
    if abs(za) <= tol_null * scale * float(np.linalg.norm(a)) or abs(
        zb
    ) <= tol_null * scale * float(np.linalg.norm(b)):
        raise OnIdealEndpoint("z lies on an ideal endpoint of the geodesic")
    return np.sqrt(abs(zb) / abs(za)) * a + np.sqrt(abs(za) / abs(zb)) * b
