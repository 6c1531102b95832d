"""One-parameter families of symmetric pairs with extra involutive symmetry.

Four corners of the (theta, phi, psi) box carry an anti-holomorphic or
holomorphic symmetry exchanging J1 and J2, and one more family bends along
psi only:

    finite          theta = -phi, psi = 0      J2 = J1^-1
    ideal_triangle  theta = -phi, psi = pi/2   J2 = I0 J1^-1 I0
    modular_one     theta = phi,  psi = 0      J2 = I0 J1 I0
    modular_two     theta = phi,  psi = pi/2   J2 = I0 J1 I0
    bending         theta = phi = 0            no exchange symmetry

with I0 the involution listed per family below.  Along each family the
product W = J1 J2^-1 has a one-variable trace:

    finite          0                              always regular elliptic
    ideal_triangle  8 cos(2 theta) e^{2 i theta/3}
    modular_one     4 - 4 cos(2 theta)
    modular_two     4 + 4 cos(2 theta)             always loxodromic
    bending         8 sin^2(psi)

so the loxodromic/elliptic transition happens where the trace discriminant
of the closed form crosses zero: cos(2 theta) = sqrt(3/128) for the ideal
triangle family and cos(2 theta) = 1/4 (equivalently sin psi = sqrt(3/8))
for the modular-one and bending families.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .classify import IsometryClass, classify, trace_poly_f
from .errors import IllConditioned, NoRoot, RangeError
from .hermitian import Isometry, su21_normalize
from .symmetry33 import SymGroup, SymGroupParams, build_sym_group

QUARTER_PI = np.pi / 4.0
HALF_PI = np.pi / 2.0


class FamilyKind(enum.Enum):
    FINITE = "finite"
    IDEAL_TRIANGLE = "ideal_triangle"
    MODULAR_ONE = "modular_one"
    MODULAR_TWO = "modular_two"
    BENDING = "bending"


_THETA_FAMILIES = (
    FamilyKind.FINITE,
    FamilyKind.IDEAL_TRIANGLE,
    FamilyKind.MODULAR_ONE,
    FamilyKind.MODULAR_TWO,
)


def param_range(kind: FamilyKind) -> tuple[float, float]:
    """Closed parameter interval of a family.

    theta in [0, pi/4] for the angle families (the discriminant is even in
    theta), psi in [0, pi/2] for the bending family.
    """
    if kind in _THETA_FAMILIES:
        return 0.0, QUARTER_PI
    return 0.0, HALF_PI


def family_params(kind: FamilyKind, param: float) -> SymGroupParams:
    """Angles (theta, phi, psi) of the family member at the given parameter."""
    lo, hi = param_range(kind)
    if not lo <= param <= hi:
        raise RangeError(f"{kind.value} parameter {param} outside [{lo}, {hi}]")
    if kind is FamilyKind.FINITE:
        return SymGroupParams(param, -param, 0.0)
    if kind is FamilyKind.IDEAL_TRIANGLE:
        return SymGroupParams(param, -param, HALF_PI)
    if kind is FamilyKind.MODULAR_ONE:
        return SymGroupParams(param, param, 0.0)
    if kind is FamilyKind.MODULAR_TWO:
        return SymGroupParams(param, param, HALF_PI)
    return SymGroupParams(0.0, 0.0, param)


def family_involution(kind: FamilyKind) -> Isometry | None:
    """The involution conjugating J1 into J2 (or its inverse); None for
    families without one."""
    if kind is FamilyKind.IDEAL_TRIANGLE:
        m = np.diag([-1.0, 1.0, -1.0]).astype(complex)
    elif kind is FamilyKind.MODULAR_ONE:
        m = np.array([[0, 0, 1], [0, -1, 0], [1, 0, 0]], dtype=complex)
    elif kind is FamilyKind.MODULAR_TWO:
        m = np.array([[0, 0, -1], [0, -1, 0], [-1, 0, 0]], dtype=complex)
    else:
        return None
    return su21_normalize(m)


def family_trace(kind: FamilyKind, param: float) -> complex:
    """Closed-form trace of W = J1 J2^-1 along the family."""
    lo, hi = param_range(kind)
    if not lo <= param <= hi:
        raise RangeError(f"{kind.value} parameter {param} outside [{lo}, {hi}]")
    if kind is FamilyKind.FINITE:
        return 0.0 + 0.0j
    if kind is FamilyKind.IDEAL_TRIANGLE:
        return complex(8.0 * np.cos(2.0 * param) * np.exp(2j * param / 3.0))
    if kind is FamilyKind.MODULAR_ONE:
        return complex(4.0 - 4.0 * np.cos(2.0 * param))
    if kind is FamilyKind.MODULAR_TWO:
        return complex(4.0 + 4.0 * np.cos(2.0 * param))
    return complex(8.0 * np.sin(param) ** 2)


def family_f(kind: FamilyKind, param: float) -> float:
    """Trace discriminant along the family; one closed real expression each."""
    lo, hi = param_range(kind)
    if not lo <= param <= hi:
        raise RangeError(f"{kind.value} parameter {param} outside [{lo}, {hi}]")
    if kind is FamilyKind.FINITE:
        return -27.0
    if kind is FamilyKind.IDEAL_TRIANGLE:
        c = np.cos(2.0 * param)
        return float(1152.0 * c * c - 27.0)
    if kind is FamilyKind.MODULAR_ONE:
        t = 4.0 - 4.0 * np.cos(2.0 * param)
        return float((t - 3.0) ** 3 * (t + 1.0))
    if kind is FamilyKind.MODULAR_TWO:
        t = 4.0 + 4.0 * np.cos(2.0 * param)
        return float((t - 3.0) ** 3 * (t + 1.0))
    t = 8.0 * np.sin(param) ** 2
    return float((t - 3.0) ** 3 * (t + 1.0))


def family_threshold(kind: FamilyKind, tol: float = 1e-14) -> float | None:
    """Parameter where the family crosses between elliptic and loxodromic.

    Located by bisection on the closed-form discriminant over the family
    range; None for the two families whose discriminant never changes sign.
    The crossings agree with cos(2 theta) = sqrt(3/128) (ideal triangle)
    and cos(2 theta) = 1/4, sin(psi) = sqrt(3/8) (modular one, bending).
    """
    lo, hi = param_range(kind)
    f_lo = family_f(kind, lo)
    f_hi = family_f(kind, hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if f_lo * f_hi > 0.0:
        return None
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        f_mid = family_f(kind, mid)
        if f_mid == 0.0:
            return mid
        if f_mid * f_lo > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@dataclass(frozen=True, eq=False)
class FamilyReport:
    """A family member with its symmetry residuals and classification.

    ``involution_residual`` is the Frobenius distance of J2 from the
    conjugate of J1 (or J1^-1) under the family involution, and for the
    finite family the distance of J2 from J1^-1; NaN for the bending family.
    ``generator_f`` is |f(tr(J1 I0))|, meaningful for the modular-one family
    where J1 I0 is parabolic; NaN elsewhere.  ``w_class`` is None when the
    classification was refused as ill conditioned (expected right at a
    threshold).
    """

    kind: FamilyKind
    param: float
    group: SymGroup
    w: Isometry
    trace_closed: complex
    f_closed: float
    w_class: IsometryClass | None
    involution_residual: float
    generator_f: float

    @property
    def f_matrix(self) -> float:
        return trace_poly_f(self.w.trace)


def family_member(kind: FamilyKind, param: float) -> FamilyReport:
    """Assemble the family member and validate its defining symmetry.

    J1 and J2 come from the generic constructors; the family relation is
    then checked as a residual rather than built in, so a defect in either
    route shows up instead of cancelling.
    """
    params = family_params(kind, param)
    group = build_sym_group(params)
    w = group.j1 @ group.j2.inverse()
    j1 = group.j1.matrix
    j2 = group.j2.matrix

    inv = family_involution(kind)
    if kind is FamilyKind.FINITE:
        residual = float(np.linalg.norm(j2 - group.j1.inverse().matrix))
    elif kind is FamilyKind.IDEAL_TRIANGLE:
        i0 = inv.matrix
        residual = float(
            np.linalg.norm(j2 - i0 @ group.j1.inverse().matrix @ i0)
        )
    elif kind in (FamilyKind.MODULAR_ONE, FamilyKind.MODULAR_TWO):
        i0 = inv.matrix
        residual = float(np.linalg.norm(j2 - i0 @ j1 @ i0))
    else:
        residual = float("nan")

    if kind is FamilyKind.MODULAR_ONE:
        gen = group.j1 @ inv
        generator_f = abs(trace_poly_f(gen.trace))
    else:
        generator_f = float("nan")

    try:
        w_class = classify(w)
    except (IllConditioned, NoRoot):
        w_class = None
    return FamilyReport(
        kind=kind,
        param=float(param),
        group=group,
        w=w,
        trace_closed=family_trace(kind, param),
        f_closed=family_f(kind, param),
        w_class=w_class,
        involution_residual=residual,
        generator_f=generator_f,
    )


@dataclass(frozen=True)
class FamilyRow:
    """One sweep sample for the family dataset.

    The angles echo family_params(kind, param) so a row can be rebuilt, or
    plotted in the parameter box, without consulting the family tables.
    """

    kind: str
    param: float
    f_value: float
    w_class: str
    threshold: float | None
    theta: float
    phi: float
    psi: float


def family_sweep(kind: FamilyKind, samples: int = 64) -> list[FamilyRow]:
    """Uniform parameter sweep with per-sample classification of W.

    Members whose classification is refused (right at a transition the
    boundary cases are genuinely marginal) are reported as "IllConditioned"
    rather than dropped.
    """
    if samples < 2:
        raise RangeError("need at least two samples")
    lo, hi = param_range(kind)
    thr = family_threshold(kind)
    rows = []
    for param in np.linspace(lo, hi, samples):
        rep = family_member(kind, float(param))
        name = rep.w_class.tag.value if rep.w_class is not None else "IllConditioned"
        angles = family_params(kind, float(param))
        rows.append(
            FamilyRow(
                kind=kind.value,
                param=float(param),
                f_value=rep.f_closed,
                w_class=name,
                threshold=thr,
                theta=angles.theta,
                phi=angles.phi,
                psi=angles.psi,
            )
        )
    return rows
