"""Projective invariants of boundary configurations.

Three numbers drive everything downstream: the angular invariant of a triple
(real, in [-pi/2, pi/2], hitting the endpoints exactly on complex lines), the
cross-ratio of an ordered quadruple (complex, invariant under rescaling of
every lift), and the bending invariant of a quadruple (a product of two
cross-ratios against the polar vector of the first pair).
"""

from __future__ import annotations

import numpy as np

from .errors import ComplexLineDegeneracy, DegenerateConfiguration, DegenerateTriple
from .hermitian import BoundaryPoint, herm, polar_vector

TAU_ANG = 1e-9


def wrap_angle(x: float) -> float:
    """Wrap to the interval (-pi, pi]."""
    y = float(np.remainder(x + np.pi, 2.0 * np.pi))
    if y <= 0.0:
        y += 2.0 * np.pi
    return y - np.pi


def _pair_products(points, pairs):
    out = []
    scale = 1.0
    for i, j in pairs:
        h = herm(points[i].lift, points[j].lift)
        ni = float(np.linalg.norm(points[i].lift))
        nj = float(np.linalg.norm(points[j].lift))
        out.append(h)
        scale = min(scale, abs(h) / (ni * nj))
    return out, scale


def cartan(p1: BoundaryPoint, p2: BoundaryPoint, p3: BoundaryPoint) -> float:
    """Angular invariant arg(-<p3,p1><p1,p2><p2,p3>) of an ordered triple.

    Lift-independent; lies in [-pi/2, pi/2] and equals +-pi/2 exactly when
    the triple sits on one complex line.
    """
    (h31, h12, h23), scale = _pair_products(
        (p1, p2, p3), ((2, 0), (0, 1), (1, 2))
    )
    if scale <= TAU_ANG:
        raise DegenerateTriple("coincident points in the triple")
    return float(np.angle(-h31 * h12 * h23))


def is_complex_linear(
    p1: BoundaryPoint,
    p2: BoundaryPoint,
    p3: BoundaryPoint,
    margin: float = TAU_ANG,
) -> bool:
    """True when the triple is within ``margin`` of a single complex line."""
    return abs(cartan(p1, p2, p3)) >= np.pi / 2.0 - margin


def cross_ratio(
    p1: BoundaryPoint,
    p2: BoundaryPoint,
    p3: BoundaryPoint,
    p4: BoundaryPoint,
) -> complex:
    """Cross-ratio <p3,p1><p4,p2> / (<p3,p2><p4,p1>) of an ordered quadruple."""
    h31 = herm(p3.lift, p1.lift)
    h42 = herm(p4.lift, p2.lift)
    h32 = herm(p3.lift, p2.lift)
    h41 = herm(p4.lift, p1.lift)
    denom = h32 * h41
    norms = [float(np.linalg.norm(p.lift)) for p in (p1, p2, p3, p4)]
    if abs(denom) <= 1e-14 * (norms[2] * norms[1]) * (norms[3] * norms[0]):
        raise DegenerateConfiguration("cross-ratio denominator vanishes")
    return complex(h31 * h42 / denom)


def bending(
    p1: BoundaryPoint,
    p2: BoundaryPoint,
    p3: BoundaryPoint,
    p4: BoundaryPoint,
) -> complex:
    """Bending invariant of the quadruple across the complex line of (p1, p2).

    The product X(p4,p3,p1,c) * X(p4,p3,p2,c), with c the polar vector of the
    line through p1 and p2.  The polar vector is a positive vector, so the two
    factors are expanded in Hermitian products directly.  Undefined when p3 or
    p4 lies on that line (the polar pairing vanishes); raises
    ComplexLineDegeneracy there.
    """
    c = polar_vector(p1, p2)
    h3c = herm(p3.lift, c)  # pairing of p3 against the polar vector
    h4c = herm(p4.lift, c)
    nc = float(np.linalg.norm(c))
    if abs(h3c) <= 1e-12 * nc * float(np.linalg.norm(p3.lift)) or abs(
        h4c
    ) <= 1e-12 * nc * float(np.linalg.norm(p4.lift)):
        raise ComplexLineDegeneracy("p3 or p4 lies on the complex line of (p1,p2)")
    h14 = herm(p1.lift, p4.lift)
    h13 = herm(p1.lift, p3.lift)
    h24 = herm(p2.lift, p4.lift)
    h23 = herm(p2.lift, p3.lift)
    hc3 = herm(c, p3.lift)
    hc4 = herm(c, p4.lift)
    if abs(h13) == 0.0 or abs(h23) == 0.0:
        raise DegenerateConfiguration("bending denominator vanishes")
    # X(p4,p3,p1,c) = <p1,p4><c,p3> / (<p1,p3><c,p4>), likewise with p2
    return complex((h14 * hc3 / (h13 * hc4)) * (h24 * hc3 / (h23 * hc4)))
