"""Conjugacy-type classification of isometries from the lifted trace.

The real polynomial

    f(z) = |z|^4 - 8 Re(z^3) + 18 |z|^2 - 27

on the trace z of a unit-determinant lift separates the types: f > 0 means
loxodromic, f < 0 regular elliptic, and f = 0 puts the trace on the deltoid
curve {2 e^{ia} + e^{-2ia}}, where the lift has eigenvalues
{e^{ia}, e^{ia}, e^{-2ia}} and the map is either a parabolic or a complex
reflection.  The boundary subtypes are separated by the singular-value rank
of A - lambda*I at the neutral eigenvalue lambda = e^{ia}:

    rank 0 -> identity (up to a cube-root-of-unity scalar)
    rank 1 -> 2-step unipotent when lambda^3 = 1, else complex reflection
    rank 2 -> 3-step unipotent when lambda^3 = 1, else screw parabolic

(A 3x3 nilpotent N with N^2 = 0 has rank 1, so a 2-step unipotent shares the
rank of a reflection; the two are told apart by lambda^3.)  On the deltoid
lambda^3 = 1 happens exactly at the three cusps, where all three eigenvalues
coincide and the trace equals 3 lambda; so the unipotent cases are recognised
from |trace - 3w| directly, which is exact, where a curve fit would lose half
the digits to the cusp singularity.  Away from the cusps the neutral
eigenvalue comes from a damped Newton fit of the trace to the deltoid,
refined by the mean of the two nearest eigenvalues of the lift (the mean of a
perturbed double eigenvalue is first-order stable even for a Jordan block,
while the individual eigenvalues are not).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import IllConditioned, NoRoot
from .hermitian import Isometry

TAU_F = 1e-8
TAU_RANK = 1e-7
# |trace - 3w| below which the rank test uses the exact cube root of unity w;
# the trace->alpha map is Holder-1/2 at the deltoid cusps, so a fitted alpha
# cannot be trusted below this scale, while a true unipotent hits 3w to
# machine precision.
CUBE_ROOT_SNAP = 1e-6

_CUBE_ROOTS = (
    complex(1.0, 0.0),
    complex(np.cos(2.0 * np.pi / 3.0), np.sin(2.0 * np.pi / 3.0)),
    complex(np.cos(2.0 * np.pi / 3.0), -np.sin(2.0 * np.pi / 3.0)),
)


class IsometryTag(enum.Enum):
    LOXODROMIC = "Loxodromic"
    REGULAR_ELLIPTIC = "RegularElliptic"
    SCREW_PARABOLIC = "ScrewParabolic"
    UNIPOTENT_2STEP = "Unipotent2Step"
    UNIPOTENT_3STEP = "Unipotent3Step"
    COMPLEX_REFLECTION = "ComplexReflection"
    IDENTITY = "Identity"


PARABOLIC_TAGS = frozenset(
    {
        IsometryTag.SCREW_PARABOLIC,
        IsometryTag.UNIPOTENT_2STEP,
        IsometryTag.UNIPOTENT_3STEP,
    }
)


@dataclass(frozen=True)
class IsometryClass:
    tag: IsometryTag
    f_value: float
    trace: complex
    neutral_eigenvalue: complex | None = None

    @property
    def is_parabolic(self) -> bool:
        return self.tag in PARABOLIC_TAGS

    @property
    def is_boundary(self) -> bool:
        return self.tag not in (IsometryTag.LOXODROMIC, IsometryTag.REGULAR_ELLIPTIC)


def trace_poly_f(z):
    """f(z) = |z|^4 - 8 Re(z^3) + 18 |z|^2 - 27; accepts scalars or arrays."""
    z = np.asarray(z, dtype=complex)
    m2 = z.real * z.real + z.imag * z.imag
    out = m2 * m2 - 8.0 * (z**3).real + 18.0 * m2 - 27.0
    return float(out) if out.ndim == 0 else out


def deltoid_point(alpha):
    """Trace 2 e^{i a} + e^{-2 i a} of a boundary-type lift; array-capable."""
    a = np.asarray(alpha, dtype=float)
    out = 2.0 * np.exp(1j * a) + np.exp(-2j * a)
    return complex(out) if out.ndim == 0 else out


def deltoid_samples(n: int):
    """n uniform parameter samples of the deltoid; returns (alpha, z) arrays."""
    if n < 1:
        raise ValueError("need at least one sample")
    alpha = np.linspace(0.0, 2.0 * np.pi, n, endpoint=False)
    return alpha, deltoid_point(alpha)


def _deltoid_derivatives(a: float):
    e1 = np.exp(1j * a)
    e2 = np.exp(-2j * a)
    d0 = 2.0 * e1 + e2
    d1 = 2j * e1 - 2j * e2
    d2 = -2.0 * e1 - 4.0 * e2
    return d0, d1, d2


def neutral_alpha(t: complex, iters: int = 12) -> float:
    """Parameter a minimizing |2 e^{ia} + e^{-2ia} - t| for a near-deltoid t.

    On the unit circle z = e^{ia} the distance is critical exactly where

        (z^3 - 1)(3 z^3 - t z^2 - conj(t) z + 3) = 0,

    and for t on the curve the minimizer is a root of the cubic factor, so
    the candidates come from a companion-matrix solve plus the three cusps.
    (Gradient descent alone is unusable here: the cusps are critical points
    of the distance for every t, and a near-cusp minimizer is separated from
    them by a quartically flat valley.)  The best candidate gets a short
    damped Newton polish for traces slightly off the curve.  Returns a in
    (-pi, pi].
    """
    t = complex(t)

    def dist2(a: float) -> float:
        g = deltoid_point(a) - t
        return g.real * g.real + g.imag * g.imag

    roots = np.roots([3.0, -t, -np.conj(t), 3.0])
    cands = [float(np.angle(z)) for z in roots]
    cands += [0.0, 2.0 * np.pi / 3.0, -2.0 * np.pi / 3.0]
    a = min(cands, key=dist2)
    fa = dist2(a)
    for _ in range(iters):
        d0, d1, d2 = _deltoid_derivatives(a)
        g = d0 - t
        grad = 2.0 * (np.conj(g) * d1).real
        hess = 2.0 * ((d1 * np.conj(d1)).real + (np.conj(g) * d2).real)
        if hess <= 0.0:
            hess = 2.0 * (d1 * np.conj(d1)).real + 1e-12
        step = grad / hess
        # damp: accept only non-increasing moves
        for _ in range(40):
            cand = a - step
            fc = dist2(cand)
            if fc <= fa:
                a, fa = cand, fc
                break
            step *= 0.5
        else:
            break
        if abs(step) < 1e-15:
            break

    # the fit must actually land on the curve for a near-deltoid trace
    if fa > 1e-6 * (1.0 + abs(t) ** 2):
        raise NoRoot(f"trace {t!r} does not fit the deltoid (residual {fa:.3e})")
    return float(np.remainder(a + np.pi, 2.0 * np.pi) - np.pi)


def _svd_rank(m: np.ndarray, thresh: float, context: str) -> int:
    sv = np.linalg.svd(m, compute_uv=False)
    gray = [s for s in sv if thresh / 10.0 < s < thresh * 10.0]
    if gray:
        raise IllConditioned(
            f"{context}: singular values {[f'{s:.3e}' for s in sv]} straddle "
            f"threshold {thresh:.3e}"
        )
    return int(np.sum(sv > thresh))


def classify(
    a: Isometry,
    tol_f: float = TAU_F,
    tol_rank: float = TAU_RANK,
) -> IsometryClass:
    """Conjugacy type of an isometry given by a unit-determinant lift.

    Scalar-lift invariant: classify(w * A) = classify(A) for w^3 = 1.
    Raises IllConditioned instead of guessing when the singular values of
    A - lambda*I sit inside a factor-10 band around the rank threshold.
    """
    t = a.trace
    fv = trace_poly_f(t)
    if fv > tol_f:
        return IsometryClass(IsometryTag.LOXODROMIC, fv, t)
    if fv < -tol_f:
        return IsometryClass(IsometryTag.REGULAR_ELLIPTIC, fv, t)

    # at a cusp all three eigenvalues agree and trace = 3 lambda exactly
    unipotent = False
    lam_used = None
    for w in _CUBE_ROOTS:
        if abs(t - 3.0 * w) < CUBE_ROOT_SNAP * (1.0 + abs(t)):
            unipotent = True
            lam_used = w
            break
    if lam_used is None:
        alpha = neutral_alpha(t)
        lam0 = complex(np.cos(alpha), np.sin(alpha))
        # refine with the mean of the two eigenvalues nearest the fit: exact
        # for a semisimple double eigenvalue, O(eps) for a Jordan pair
        eigs = np.linalg.eigvals(a.matrix)
        near = sorted(eigs, key=lambda e: abs(e - lam0))[:2]
        mean = (near[0] + near[1]) / 2.0
        if abs(mean) > 0.5 and abs(mean / abs(mean) - lam0) < 1e-3:
            lam_used = mean / abs(mean)
        else:
            lam_used = lam0

    scale = float(np.linalg.norm(a.matrix, 2))
    thresh = tol_rank * scale
    n = a.matrix - lam_used * np.eye(3)
    rank = _svd_rank(n, thresh, "A - lambda*I")

    if rank == 0:
        return IsometryClass(IsometryTag.IDENTITY, fv, t, lam_used)
    if rank == 3:
        raise IllConditioned(
            "trace sits on the deltoid within tolerance but no repeated "
            "eigenvalue is resolvable; matrix is numerically between types"
        )
    # cross-check on (A - lambda I)^2: a 2-step unipotent squares to zero
    # (rank 0), every other boundary type leaves rank 1; disagreement means
    # the numerics are not telling one story
    rank2 = _svd_rank(n @ n, tol_rank * scale * scale, "(A - lambda*I)^2")
    expect2 = 0 if (rank == 1 and unipotent) else 1
    if rank2 != expect2:
        raise IllConditioned(
            f"rank(N) = {rank} (unipotent={unipotent}) but rank(N^2) = "
            f"{rank2}; inconsistent boundary structure"
        )
    if rank == 1:
        tag = IsometryTag.UNIPOTENT_2STEP if unipotent else IsometryTag.COMPLEX_REFLECTION
    else:
        tag = IsometryTag.UNIPOTENT_3STEP if unipotent else IsometryTag.SCREW_PARABOLIC
    return IsometryClass(tag, fv, t, lam_used)
