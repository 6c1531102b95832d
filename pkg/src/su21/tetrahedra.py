"""Ideal tetrahedra on the boundary and their normal form.

An ordered quadruple of boundary points (p1, p2, p3, p4) is *balanced* when
p3 and p4 project to the same point of the geodesic with ideal endpoints
p1, p2; equivalently, when the cross-ratio X(p1,p2,p3,p4) has unit modulus.
Every suitably non-degenerate quadruple is isometric to the normal form

    p1 = (1, 0, 0)
    p2 = (0, 0, 1)
    p3 = (-e^{2 i theta},      sqrt(2 cos 2 theta) e^{ i(theta - psi)},  1)
    p4 = (-r^2 e^{-2 i phi}, r sqrt(2 cos 2 phi)   e^{-i(phi - psi)},    1)

with theta, phi in [-pi/4, pi/4], psi in [0, pi/2] and r > 0; r = 1 is the
balanced case.  The parameters are recovered from invariants alone:
2 theta and 2 phi are angular invariants of the two vertex triples, 4 psi is
the argument of the bending invariant, and r^2 is |X|.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ComplexLineDegeneracy, DegenerateTetrahedron, RangeError
from .hermitian import BoundaryPoint, geodesic_project, proj_distance
from .invariants import bending, cartan, cross_ratio

TAU_BAL = 1e-8
TAU_PROJ = 1e-7
# margin on |cartan| - pi/2 below which a vertex triple counts as lying on a
# complex line and parameter extraction refuses to proceed
LINE_MARGIN = 1e-6

QUARTER_PI = np.pi / 4.0
HALF_PI = np.pi / 2.0


@dataclass(frozen=True)
class TetraParams:
    """Normal-form parameters (theta, phi, psi, r)."""

    theta: float
    phi: float
    psi: float
    r: float = 1.0

    def __post_init__(self):
        eps = 1e-12
        if not (-QUARTER_PI - eps <= self.theta <= QUARTER_PI + eps):
            raise RangeError(f"theta = {self.theta} outside [-pi/4, pi/4]")
        if not (-QUARTER_PI - eps <= self.phi <= QUARTER_PI + eps):
            raise RangeError(f"phi = {self.phi} outside [-pi/4, pi/4]")
        # closed at pi/2: the ideal-triangle and second modular families sit
        # exactly on the endpoint; canonical extracted values stay in [0, pi/2)
        if not (-eps <= self.psi <= HALF_PI + eps):
            raise RangeError(f"psi = {self.psi} outside [0, pi/2]")
        if not (self.r > 0.0):
            raise RangeError(f"r = {self.r} must be positive")


@dataclass(frozen=True, eq=False)
class IdealTetrahedron:
    p1: BoundaryPoint
    p2: BoundaryPoint
    p3: BoundaryPoint
    p4: BoundaryPoint

    @property
    def points(self):
        return (self.p1, self.p2, self.p3, self.p4)

    def is_degenerate(self, tol: float = 1e-9) -> bool:
        pts = self.points
        for i in range(4):
            for j in range(i + 1, 4):
                if proj_distance(pts[i].lift, pts[j].lift) <= tol:
                    return True
        return False


def standard_lifts(params: TetraParams) -> IdealTetrahedron:
    """Normal-form lifts for the given parameters.

    Substituting theta = -phi, psi = 0, r = 1 collapses p3 onto p4; the
    constructor does not reject that (downstream consumers do).
    """
    th, ph, ps, r = params.theta, params.phi, params.psi, params.r
    c1 = np.sqrt(max(0.0, 2.0 * np.cos(2.0 * th)))
    c2 = np.sqrt(max(0.0, 2.0 * np.cos(2.0 * ph)))
    p1 = BoundaryPoint(np.array([1.0, 0.0, 0.0], dtype=complex))
    p2 = BoundaryPoint(np.array([0.0, 0.0, 1.0], dtype=complex))
    p3 = BoundaryPoint(
        np.array(
            [-np.exp(2j * th), c1 * np.exp(1j * (th - ps)), 1.0], dtype=complex
        )
    )
    p4 = BoundaryPoint(
        np.array(
            [
                -(r**2) * np.exp(-2j * ph),
                r * c2 * np.exp(-1j * (ph - ps)),
                1.0,
            ],
            dtype=complex,
        )
    )
    return IdealTetrahedron(p1, p2, p3, p4)


@dataclass(frozen=True)
class BalancedReport:
    """Result of the two independent balance tests."""

    by_cross_ratio: bool
    by_projection: bool
    cross_ratio_residual: float  # | |X| - 1 |
    projection_residual: float  # projective distance of the two projections

    @property
    def balanced(self) -> bool:
        return self.by_cross_ratio

    @property
    def agree(self) -> bool:
        return self.by_cross_ratio == self.by_projection


def is_balanced(
    t: IdealTetrahedron,
    tol_bal: float = TAU_BAL,
    tol_proj: float = TAU_PROJ,
) -> BalancedReport:
    """Run both balance criteria: |X| = 1 and equal geodesic projections.

    The two routes are computed independently on purpose; they must agree on
    any input that is not razor-edge, and the report keeps both residuals.
    """
    x = cross_ratio(t.p1, t.p2, t.p3, t.p4)
    cr_res = abs(abs(x) - 1.0)
    pr3 = geodesic_project(t.p3, t.p1, t.p2)
    pr4 = geodesic_project(t.p4, t.p1, t.p2)
    pr_res = proj_distance(pr3, pr4)
    return BalancedReport(
        by_cross_ratio=cr_res <= tol_bal,
        by_projection=pr_res <= tol_proj,
        cross_ratio_residual=cr_res,
        projection_residual=pr_res,
    )


def extract_params(t: IdealTetrahedron, line_margin: float = LINE_MARGIN) -> TetraParams:
    """Recover normal-form parameters from invariants.

    2 theta = cartan(p2, p1, p3), 2 phi = cartan(p1, p2, p4),
    4 psi = arg(bending) in [0, 2 pi), r = |X|^(1/2).  Raises
    DegenerateTetrahedron for coincident vertices and ComplexLineDegeneracy
    when either vertex triple hugs a complex line (psi is undefined there).
    """
    if t.is_degenerate():
        raise DegenerateTetrahedron("coincident vertices")
    a3 = cartan(t.p2, t.p1, t.p3)
    a4 = cartan(t.p1, t.p2, t.p4)
    if abs(a3) >= HALF_PI - line_margin or abs(a4) >= HALF_PI - line_margin:
        raise ComplexLineDegeneracy(
            "a vertex triple lies on a complex line; psi undefined"
        )
    theta = 0.5 * a3
    phi = 0.5 * a4
    x = cross_ratio(t.p1, t.p2, t.p3, t.p4)
    r = float(np.sqrt(abs(x)))
    b = bending(t.p1, t.p2, t.p3, t.p4)
    arg_b = float(np.angle(b))
    if arg_b < 0.0:
        arg_b += 2.0 * np.pi
    psi = arg_b / 4.0
    if psi >= HALF_PI:  # numerical wrap of arg at 2 pi
        psi -= HALF_PI
    return TetraParams(theta, phi, psi, r)


def transform(t: IdealTetrahedron, g) -> IdealTetrahedron:
    """Image tetrahedron under an isometry."""
    return IdealTetrahedron(*(g.apply(p) for p in t.points))
