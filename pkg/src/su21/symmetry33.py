"""Groups generated by two regular elliptic maps of order three.

The pair (J1, J2) acts on the normal-form tetrahedron by cycling its
vertices: J1 sends p2 -> p1 -> p3 -> p2 and J2 sends p1 -> p2 -> p4 -> p1.
Both cube to scalars, so they define order-3 symmetries of the configuration,
and the products A = J1 J2, B = J2 J1 realise the neutral-eigenvalue
representation with lambda_A = lambda_B = e^{-2i(theta+phi)/3}.

Traces of the short words depend on (theta, phi, psi) only through

    x = 4 sqrt(cos 2theta cos 2phi) cos 2psi
    y = 4 sqrt(cos 2theta cos 2phi) sin 2psi
    z = 4 cos(theta - phi)

with image 0 <= z <= 4, x^2 + y^2 <= z^2, y >= 0:

    tr(J1 J2^-1)   = e^{i(theta-phi)/3} (z - x)
    tr[J1, J2]     = 3 + ((x-z)(3x-z) + y^2 + 2i(x-z)y) / 4
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import Infeasible, RangeError
from .hermitian import BoundaryPoint, Isometry, su21_normalize
from .tetrahedra import TetraParams, standard_lifts

QUARTER_PI = np.pi / 4.0
HALF_PI = np.pi / 2.0


@dataclass(frozen=True)
class SymGroupParams:
    """Angles (theta, phi, psi) of a normal-form tetrahedron with r = 1."""

    theta: float
    phi: float
    psi: float

    def __post_init__(self) -> None:
        TetraParams(self.theta, self.phi, self.psi, 1.0)


@dataclass(frozen=True)
class XYZCoords:
    """Trace coordinates of a symmetric pair; plain container, no checks."""

    x: float
    y: float
    z: float

    def feasible(self, tol: float = 1e-9) -> bool:
        bound = self.x**2 + self.y**2 <= self.z**2 + tol * max(1.0, self.z**2)
        return (
            -tol <= self.z <= 4.0 + tol
            and self.y >= -tol
            and bound
        )


def _angles(params: SymGroupParams):
    th, ph, ps = params.theta, params.phi, params.psi
    c1 = np.sqrt(max(0.0, 2.0 * np.cos(2.0 * th)))
    c2 = np.sqrt(max(0.0, 2.0 * np.cos(2.0 * ph)))
    return th, ph, ps, c1, c2


def j1_matrix(params: SymGroupParams) -> Isometry:
    """Order-3 elliptic cycling p2 -> p1 -> p3 -> p2; det = 1, trace = 0."""
    th, _, ps, c1, _ = _angles(params)
    e = np.exp
    m = np.array(
        [
            [e(4j * th / 3.0), c1 * e(1j * (th / 3.0 + ps)), -e(-2j * th / 3.0)],
            [-c1 * e(1j * (th / 3.0 - ps)), -e(4j * th / 3.0), 0.0],
            [-e(-2j * th / 3.0), 0.0, 0.0],
        ],
        dtype=complex,
    )
    return su21_normalize(m)


def j2_matrix(params: SymGroupParams) -> Isometry:
    """Order-3 elliptic cycling p1 -> p2 -> p4 -> p1; det = 1, trace = 0."""
    _, ph, ps, _, c2 = _angles(params)
    e = np.exp
    m = np.array(
        [
            [0.0, 0.0, -e(-2j * ph / 3.0)],
            [0.0, -e(4j * ph / 3.0), c2 * e(1j * (ph / 3.0 + ps))],
            [-e(-2j * ph / 3.0), -c2 * e(1j * (ph / 3.0 - ps)), e(4j * ph / 3.0)],
        ],
        dtype=complex,
    )
    return su21_normalize(m)


@dataclass(frozen=True, eq=False)
class SymGroup:
    """A symmetric pair with its tetrahedron vertices and products."""

    params: SymGroupParams
    j1: Isometry
    j2: Isometry
    a: Isometry
    b: Isometry
    p_a: BoundaryPoint
    p_b: BoundaryPoint
    p_ab: BoundaryPoint
    p_ba: BoundaryPoint

    @property
    def lambda_neutral(self) -> complex:
        """Shared eigenvalue of A at p_a and B at p_b."""
        th, ph = self.params.theta, self.params.phi
        return complex(np.exp(-2j * (th + ph) / 3.0))


def build_sym_group(params: SymGroupParams) -> SymGroup:
    """Assemble J1, J2, A = J1 J2, B = J2 J1 and the vertex points."""
    j1 = j1_matrix(params)
    j2 = j2_matrix(params)
    tetra = standard_lifts(TetraParams(params.theta, params.phi, params.psi, 1.0))
    return SymGroup(
        params=params,
        j1=j1,
        j2=j2,
        a=j1 @ j2,
        b=j2 @ j1,
        p_a=tetra.p1,
        p_b=tetra.p2,
        p_ab=tetra.p3,
        p_ba=tetra.p4,
    )


def to_xyz(params: SymGroupParams) -> XYZCoords:
    """Trace coordinates (x, y, z) of the symmetric pair at these angles."""
    th, ph, ps = params.theta, params.phi, params.psi
    s = 4.0 * np.sqrt(max(0.0, np.cos(2.0 * th) * np.cos(2.0 * ph)))
    return XYZCoords(
        x=float(s * np.cos(2.0 * ps)),
        y=float(s * np.sin(2.0 * ps)),
        z=float(4.0 * np.cos(th - ph)),
    )


def from_xyz(coords: XYZCoords, tol: float = 1e-9) -> list[SymGroupParams]:
    """All parameter triples mapping to the given coordinates.

    Inverts to_xyz by enumerating the sign choices of the half-angle system;
    candidates are kept when in range and round-tripping within tol.  Raises
    Infeasible when the coordinates violate the image constraints outright.
    """
    x, y, z = coords.x, coords.y, coords.z
    if y < 0.0 and y >= -tol:
        y = 0.0
    if z < 0.0 or z > 4.0 * (1.0 + tol) or y < 0.0:
        raise Infeasible(f"(x, y, z) = ({x}, {y}, {z}) outside the image")
    zc = min(1.0, z / 4.0)
    d = float(np.arccos(zc))  # d = theta - phi up to sign
    cos2s = (x**2 + y**2) / 8.0 - np.cos(2.0 * d)
    if cos2s > 1.0 + 1e-12:
        raise Infeasible(f"cos(2(theta+phi)) = {cos2s} exceeds 1")
    s = float(np.arccos(np.clip(cos2s, -1.0, 1.0))) / 2.0  # s = theta + phi >= 0
    two_psi = float(np.arctan2(y, x))  # in [0, pi] since y >= 0
    psi = two_psi / 2.0

    found: list[SymGroupParams] = []
    for s_sign in (1.0, -1.0):
        for d_sign in (1.0, -1.0):
            th = (s_sign * s + d_sign * d) / 2.0
            ph = (s_sign * s - d_sign * d) / 2.0
            for cand_th, cand_ph in ((th, ph), (ph, th)):
                if abs(cand_th) > QUARTER_PI + 1e-12:
                    continue
                if abs(cand_ph) > QUARTER_PI + 1e-12:
                    continue
                cand_th = float(np.clip(cand_th, -QUARTER_PI, QUARTER_PI))
                cand_ph = float(np.clip(cand_ph, -QUARTER_PI, QUARTER_PI))
                try:
                    cand = SymGroupParams(cand_th, cand_ph, psi)
                except RangeError:
                    continue
                back = to_xyz(cand)
                err = np.hypot(np.hypot(back.x - x, back.y - y), back.z - z)
                if err <= tol * max(1.0, abs(x), abs(y), abs(z)):
                    if not any(
                        abs(cand.theta - f.theta) <= 1e-12
                        and abs(cand.phi - f.phi) <= 1e-12
                        for f in found
                    ):
                        found.append(cand)
    if not found:
        raise Infeasible(
            f"(x, y, z) = ({x}, {y}, {z}) admits no parameters within tol {tol:.1e}"
        )
    return found


def trace_j1j2inv(params: SymGroupParams) -> complex:
    """tr(J1 J2^-1) = e^{i(theta-phi)/3} (z - x), in closed form."""
    th, ph = params.theta, params.phi
    c = to_xyz(params)
    return complex(np.exp(1j * (th - ph) / 3.0) * (c.z - c.x))


def f_j1j2inv(params: SymGroupParams) -> float:
    """Discriminant f of tr(J1 J2^-1): (x-z)^2 (x^2 - z^2 + 18) - 27."""
    c = to_xyz(params)
    u = c.x - c.z
    return float(u * u * (c.x * c.x - c.z * c.z + 18.0) - 27.0)


def trace_commutator(params: SymGroupParams) -> complex:
    """tr[J1, J2] = 3 + ((x-z)(3x-z) + y^2 + 2i(x-z)y) / 4."""
    c = to_xyz(params)
    u = c.x - c.z
    re = 3.0 + (u * (3.0 * c.x - c.z) + c.y * c.y) / 4.0
    im = u * c.y / 2.0
    return complex(re, im)


def jacobian(params: SymGroupParams) -> float:
    """Jacobian det of (theta, phi, psi) -> (x, y, z): 128 sin(2theta+2phi) sin(theta-phi)."""
    th, ph = params.theta, params.phi
    return float(128.0 * np.sin(2.0 * (th + ph)) * np.sin(th - ph))


def _grid_arrays(theta: np.ndarray, phi: np.ndarray, psi: float):
    """Vectorised (x, z) and trace discriminants over angle arrays."""
    s = 4.0 * np.sqrt(np.maximum(0.0, np.cos(2.0 * theta) * np.cos(2.0 * phi)))
    x = s * np.cos(2.0 * psi)
    y = s * np.sin(2.0 * psi)
    z = 4.0 * np.cos(theta - phi)
    return x, y, z


def f_j1j2inv_grid(theta: np.ndarray, phi: np.ndarray, psi: float) -> np.ndarray:
    x, _, z = _grid_arrays(theta, phi, psi)
    u = x - z
    return u * u * (x * x - z * z + 18.0) - 27.0


def f_commutator_grid(theta: np.ndarray, phi: np.ndarray, psi: float) -> np.ndarray:
    """f applied to tr[J1, J2] over angle arrays."""
    x, y, z = _grid_arrays(theta, phi, psi)
    u = x - z
    t = 3.0 + (u * (3.0 * x - z) + y * y) / 4.0 + 0.5j * u * y
    return _f_complex(t)


def _f_complex(t: np.ndarray) -> np.ndarray:
    a = np.abs(t)
    return a**4 - 8.0 * np.real(t**3) + 18.0 * a**2 - 27.0
