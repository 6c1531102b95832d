"""Isometries pinned by a fixed boundary point, an eigenvalue, and one orbit.

Given distinct boundary points p, q, r and a unit complex lambda, there is
exactly one isometry fixing p with eigenvalue lambda at p and sending q to r.
When (p, q, r) spans C^3 its matrix in the basis (p, q, r) is

    [ lam   0    lam <r,q>/<p,q> + lam_bar^2 <r,p><q,r> / (<p,r><q,p>) ]
    [  0    0   -lam_bar^2 <r,p>/<q,p>                                 ]
    [  0   lam <q,p>/<r,p>   lam + lam_bar^2                           ]

and the map is elliptic (a complex reflection) precisely when
lambda^3 = -e^{2 i cartan(p,q,r)}; otherwise it is parabolic.  When the
triple sits on one complex line with polar vector n, the matrix in the basis
(p, n, q) is diagonal-plus-corner

    [ lam   0          lam <r,q><q,p> / (<r,p><p,q>) ]
    [  0    1/lam^2    0                             ]
    [  0    0          lam                           ]

and the map is always parabolic.  Pairs of such maps assemble representations
of the free group of rank two from a balanced ideal tetrahedron: A fixes p1
and sends p4 to p3, B fixes p2 and sends p3 to p4, so that A B fixes p3 and
B A fixes p4 with eigenvalue lambda_A lambda_B / X(p1,p2,p3,p4).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateTriple, NotBalanced, RangeError, SingularBasis
from .hermitian import (
    BoundaryPoint,
    Isometry,
    eigenvalue_at,
    herm,
    polar_vector,
    proj_distance,
    su21_normalize,
)
from .invariants import cartan, cross_ratio
from .tetrahedra import IdealTetrahedron, TetraParams, is_balanced, standard_lifts

TAU_BAL = 1e-8
BASIS_SV_RATIO = 1e-10
LINE_MARGIN = 1e-9


def _unit(lam: complex) -> complex:
    lam = complex(lam)
    m = abs(lam)
    if abs(m - 1.0) > 1e-9:
        raise RangeError(f"|lambda| = {m} is not 1 within 1e-9")
    return lam / m


def neutral_map(
    p: BoundaryPoint,
    q: BoundaryPoint,
    r: BoundaryPoint,
    lam: complex,
) -> Isometry:
    """The isometry fixing p with unit eigenvalue lam at p, sending q to r.

    Chooses the spanning-basis or complex-line construction by the angular
    invariant of the triple.  Raises DegenerateTriple for coincident points
    and SingularBasis when the basis matrix is numerically unusable.
    """
    lam = _unit(lam)
    for u, v in ((p, q), (p, r), (q, r)):
        if proj_distance(u.lift, v.lift) <= 1e-10:
            raise DegenerateTriple("neutral_map needs three distinct points")

    h_rq = herm(r.lift, q.lift)
    h_pq = herm(p.lift, q.lift)
    h_rp = herm(r.lift, p.lift)
    h_qr = herm(q.lift, r.lift)
    h_pr = herm(p.lift, r.lift)
    h_qp = herm(q.lift, p.lift)
    lam_bar2 = np.conj(lam) ** 2

    if abs(cartan(p, q, r)) >= np.pi / 2.0 - LINE_MARGIN:
        # triple on one complex line: basis (p, n, q) with n the polar vector
        n = polar_vector(p, q)
        basis = np.column_stack([p.lift, n, q.lift])
        _check_basis(basis)
        m13 = lam * h_rq * h_qp / (h_rp * h_pq)
        inner = np.array(
            [
                [lam, 0.0, m13],
                [0.0, 1.0 / lam**2, 0.0],
                [0.0, 0.0, lam],
            ],
            dtype=complex,
        )
    else:
        basis = np.column_stack([p.lift, q.lift, r.lift])
        _check_basis(basis)
        m13 = lam * h_rq / h_pq + lam_bar2 * h_rp * h_qr / (h_pr * h_qp)
        inner = np.array(
            [
                [lam, 0.0, m13],
                [0.0, 0.0, -lam_bar2 * h_rp / h_qp],
                [0.0, lam * h_qp / h_rp, lam + lam_bar2],
            ],
            dtype=complex,
        )
    mat = basis @ inner @ np.linalg.inv(basis)
    # conjugation inherits det = 1 exactly but pays the basis conditioning in
    # the form residual; scale the acceptance accordingly
    sv = np.linalg.svd(basis, compute_uv=False)
    tol_form = max(1e-12, 1e-14 * float(sv[0] / sv[-1]))
    return su21_normalize(mat, tol_form=tol_form)


def _check_basis(basis: np.ndarray) -> None:
    sv = np.linalg.svd(basis, compute_uv=False)
    if sv[-1] <= BASIS_SV_RATIO * sv[0]:
        raise SingularBasis(
            f"basis singular values {sv[0]:.3e} .. {sv[-1]:.3e} below ratio "
            f"{BASIS_SV_RATIO:.1e}"
        )


def reflection_eigenvalues(p: BoundaryPoint, q: BoundaryPoint, r: BoundaryPoint):
    """The three unit eigenvalues for which neutral_map is elliptic.

    Solutions of lambda^3 = -e^{2 i cartan(p, q, r)}; for every other unit
    eigenvalue the constructed map is parabolic.
    """
    a = cartan(p, q, r)
    base = (np.pi + 2.0 * a) / 3.0
    return tuple(
        complex(np.cos(base + k * 2.0 * np.pi / 3.0), np.sin(base + k * 2.0 * np.pi / 3.0))
        for k in range(3)
    )


@dataclass(frozen=True, eq=False)
class ParabolicRep:
    """Representation data (A, B) built over a balanced ideal tetrahedron."""

    a: Isometry
    b: Isometry
    lambda_a: complex
    lambda_b: complex
    lambda_ab: complex
    tetra: IdealTetrahedron


def rep_from_tetra(
    t: IdealTetrahedron,
    lambda_a: complex,
    lambda_b: complex,
    tol_bal: float = TAU_BAL,
) -> ParabolicRep:
    """Build A and B over a balanced tetrahedron through neutral_map.

    A = neutral_map(p1, p4, p3, lambda_a), B = neutral_map(p2, p3, p4,
    lambda_b); then A B fixes p3 and B A fixes p4 with eigenvalue
    lambda_a lambda_b / X(p1, p2, p3, p4), of unit modulus exactly because
    the tetrahedron is balanced.  Raises NotBalanced otherwise.
    """
    report = is_balanced(t, tol_bal=tol_bal)
    if not report.by_cross_ratio:
        raise NotBalanced(
            f"| |X| - 1 | = {report.cross_ratio_residual:.3e} exceeds {tol_bal:.1e}"
        )
    a = neutral_map(t.p1, t.p4, t.p3, lambda_a)
    b = neutral_map(t.p2, t.p3, t.p4, lambda_b)
    lam_a = eigenvalue_at(a, t.p1)
    lam_b = eigenvalue_at(b, t.p2)
    x = cross_ratio(t.p1, t.p2, t.p3, t.p4)
    lam_ab = lam_a * lam_b / x
    return ParabolicRep(a, b, lam_a, lam_b, lam_ab, t)


def rep_closed_form(
    theta: float,
    phi: float,
    psi: float,
    lambda_a: complex,
    lambda_b: complex,
) -> ParabolicRep:
    """Triangular matrices for A and B over the normal-form tetrahedron.

    A is upper and B lower triangular in the standard frame, with diagonals
    (lam, lam_bar^2, lam); agrees projectively with rep_from_tetra on the
    same inputs.
    """
    params = TetraParams(theta, phi, psi, 1.0)
    la = _unit(lambda_a)
    lb = _unit(lambda_b)
    la2 = np.conj(la) ** 2
    lb2 = np.conj(lb) ** 2
    th, ph, ps = params.theta, params.phi, params.psi
    c1 = np.sqrt(max(0.0, 2.0 * np.cos(2.0 * th)))
    c2 = np.sqrt(max(0.0, 2.0 * np.cos(2.0 * ph)))
    e = np.exp

    a = np.array(
        [
            [
                la,
                -la2 * c1 * e(1j * (-th + ps)) + la * c2 * e(1j * (ph - ps)),
                -la * e(2j * th)
                - la * e(2j * ph)
                + la2 * c1 * c2 * e(1j * (-th - ph + 2.0 * ps)),
            ],
            [0.0, la2, la * c1 * e(1j * (th - ps)) - la2 * c2 * e(1j * (-ph + ps))],
            [0.0, 0.0, la],
        ],
        dtype=complex,
    )
    b = np.array(
        [
            [lb, 0.0, 0.0],
            [lb2 * c1 * e(1j * (-th - ps)) - lb * c2 * e(1j * (ph + ps)), lb2, 0.0],
            [
                -lb * e(2j * th)
                - lb * e(2j * ph)
                + lb2 * c1 * c2 * e(1j * (-th - ph - 2.0 * ps)),
                -lb * c1 * e(1j * (th + ps)) + lb2 * c2 * e(1j * (-ph - ps)),
                lb,
            ],
        ],
        dtype=complex,
    )
    tetra = standard_lifts(params)
    x = np.exp(-2j * (th + ph))
    return ParabolicRep(
        su21_normalize(a),
        su21_normalize(b),
        la,
        lb,
        la * lb / x,
        tetra,
    )
