"""Locus where J1 J2^-1 and the commutator [J1, J2] pinch together.

Write u = x - z.  The product J1 J2^-1 has boundary-type trace exactly when

    u^2 (x^2 - z^2 + 18) = 27,

which for fixed u solves to z = (27 - u^4 - 18 u^2) / (2 u^3); only the
u < 0 branch meets the parameter image (u > 0 forces z < 0).  Imposing the
same condition on the commutator on top of this constraint eliminates
everything but a single polynomial relation between X = u^2 and Y = u y:

    256 X^4 f(tr[J1, J2]) = P(X, Y),

with P of degree 8, even in Y.  P(X, 0) = (2X^2 - 2X + 27)(2X^2 - 18X + 27)^3
is nonpositive exactly for X between the roots (9 -+ 3 sqrt 3)/2 of the cubed
quadratic, and on that interval P(X, .) has a unique nonnegative root, so the
doubly-pinched locus is a closed loop in the (X, Y) plane, symmetric under
Y -> -Y.  Solving the loop back through the trace coordinates recovers the
angle parameters of groups whose two short words degenerate simultaneously.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .classify import classify, trace_poly_f
from .errors import IllConditioned, Infeasible, NoRoot, RangeError
from .symmetry33 import (
    SymGroupParams,
    XYZCoords,
    build_sym_group,
    f_commutator_grid,
    f_j1j2inv,
    f_j1j2inv_grid,
    from_xyz,
    to_xyz,
)

X_MIN = (9.0 - 3.0 * np.sqrt(3.0)) / 2.0
X_MAX = (9.0 + 3.0 * np.sqrt(3.0)) / 2.0


def poly_P(X, Y):
    """The degree-8 locus polynomial; even in Y; array-capable."""
    X = np.asarray(X, dtype=float)
    Y = np.asarray(Y, dtype=float)
    y2 = Y * Y
    c3 = 4.0 * (4.0 * X**2 - 14.0 * X + 27.0)
    c2 = 6.0 * (12.0 * X**4 - 8.0 * X**3 + 360.0 * X**2 - 756.0 * X + 729.0)
    c1 = 4.0 * (
        16.0 * X**6
        - 24.0 * X**5
        + 1404.0 * X**4
        - 4536.0 * X**3
        + 20412.0 * X**2
        - 30618.0 * X
        + 19683.0
    )
    c0 = (2.0 * X**2 - 2.0 * X + 27.0) * (2.0 * X**2 - 18.0 * X + 27.0) ** 3
    out = ((y2 + c3) * y2 + c2) * y2 * y2 + c1 * y2 + c0
    return float(out) if out.ndim == 0 else out


def p_axis(X) -> float:
    """P restricted to the X axis, in factored form."""
    X = float(X)
    return (2.0 * X**2 - 2.0 * X + 27.0) * (2.0 * X**2 - 18.0 * X + 27.0) ** 3


def constraint_z(u: float) -> float:
    """z making J1 J2^-1 boundary-type at given u = x - z."""
    u = float(u)
    if u == 0.0:
        raise ZeroDivisionError("constraint is singular at u = 0")
    return (27.0 - u**4 - 18.0 * u**2) / (2.0 * u**3)


def locus_interval_endpoints(tol: float = 1e-14) -> tuple[float, float]:
    """Endpoints of {X : P(X, 0) <= 0} located by bisection on p_axis.

    An independent route to (9 -+ 3 sqrt 3)/2; the factored axis polynomial
    changes sign across each bracket because the cubed quadratic has odd
    multiplicity there.
    """

    def bisect(lo: float, hi: float) -> float:
        flo = p_axis(lo)
        if flo * p_axis(hi) > 0.0:
            raise NoRoot(f"no sign change of P(X, 0) on [{lo}, {hi}]")
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            if mid == lo or mid == hi:
                break
            if p_axis(mid) * flo > 0.0:
                lo = mid
            else:
                hi = mid
        return 0.5 * (lo + hi)

    return bisect(1.5, 2.5), bisect(6.5, 7.5)


def find_y_root(X: float, tol_res: float = 1e-8) -> float:
    """The nonnegative root of P(X, .) for X inside the locus interval.

    Bisection from Y = 0 (where P < 0) against a doubled upper bracket,
    refined until the floats touch.  Raises NoRoot when P(X, 0) >= 0 or the
    residual check fails.
    """
    X = float(X)
    f0 = poly_P(X, 0.0)
    if f0 >= 0.0:
        raise NoRoot(f"P({X}, 0) = {f0:.3e} is not negative; no crossing")
    lo, hi = 0.0, 0.5
    for _ in range(60):
        if poly_P(X, hi) >= 0.0:
            break
        hi *= 2.0
    else:
        raise NoRoot(f"P({X}, .) never becomes positive")
    while True:
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if poly_P(X, mid) < 0.0:
            lo = mid
        else:
            hi = mid
    y = 0.5 * (lo + hi)
    if abs(poly_P(X, y)) > tol_res * (1.0 + abs(f0)):
        raise NoRoot(f"P({X}, {y}) residual exceeds {tol_res:.1e}")
    return y


@dataclass(frozen=True)
class LocusPoint:
    """One solved point of the double-pinch locus.

    ``Y`` carries the sign convention of the defining chart (Y = u y with
    u < 0, so Y <= 0); ``res_p`` is the axis-relative polynomial residual,
    ``res_f1`` and ``res_fc`` are the trace discriminants of the two short
    words recomputed from the assembled matrices.
    """

    X: float
    Y: float
    x: float
    y: float
    z: float
    theta: float
    phi: float
    psi: float
    res_p: float
    res_f1: float
    res_fc: float
    branch: int


@dataclass(frozen=True)
class RejectedPoint:
    X: float
    reason: str


def _canonical_branch(cands: list[SymGroupParams]) -> tuple[int, SymGroupParams]:
    idx = max(range(len(cands)), key=lambda i: (cands[i].theta, cands[i].phi))
    return idx, cands[idx]


def solve_locus(
    n: int = 64,
    rt_tol: float = 1e-8,
    tol_res: float = 1e-8,
) -> tuple[list[LocusPoint], list[RejectedPoint]]:
    """Sample the locus loop at n interior X values plus both endpoints.

    At the interval endpoints the loop is tangent to the X axis, so their
    Y-root is taken as exactly zero instead of bisected.  Every solved
    point is independently validated: the coordinates must be feasible,
    the angle parameters must round-trip through to_xyz within rt_tol, and
    the three products J1 J2, J1 J2^-1, [J1, J2] assembled from the
    parameters must all classify as parabolic.  Failures are reported as
    RejectedPoint entries instead of rows.
    """
    if n < 2:
        raise RangeError("need at least two samples")
    points: list[LocusPoint] = []
    rejected: list[RejectedPoint] = []
    xs = np.linspace(X_MIN, X_MAX, n + 2)
    for k, X in enumerate(map(float, xs)):
        if k == 0 or k == len(xs) - 1:
            y_root = 0.0
        else:
            try:
                y_root = find_y_root(X, tol_res=tol_res)
            except NoRoot as exc:
                rejected.append(RejectedPoint(X, f"root: {exc}"))
                continue
        u = -np.sqrt(X)
        try:
            z = constraint_z(u)
        except ZeroDivisionError as exc:
            rejected.append(RejectedPoint(X, f"constraint: {exc}"))
            continue
        x = z + u
        y = y_root / np.sqrt(X)
        coords = XYZCoords(x, y, z)
        if not coords.feasible():
            rejected.append(RejectedPoint(X, "coords outside the image"))
            continue
        try:
            cands = from_xyz(coords, tol=rt_tol)
        except Infeasible as exc:
            rejected.append(RejectedPoint(X, f"inversion: {exc}"))
            continue
        branch, params = _canonical_branch(cands)
        back = to_xyz(params)
        rt = max(abs(back.x - x), abs(back.y - y), abs(back.z - z))
        if rt > rt_tol:
            rejected.append(RejectedPoint(X, f"round trip residual {rt:.3e}"))
            continue
        g = build_sym_group(params)
        # the commutator of the generators equals A B^-1; the commutator of
        # A and B is (J1 J2^-1)^3 and is parabolic on the whole surface, so
        # it would be a vacuous check here
        words = {
            "J1J2": g.a,
            "J1J2inv": g.j1 @ g.j2.inverse(),
            "commutator": g.j1 @ g.j2 @ g.j1.inverse() @ g.j2.inverse(),
        }
        bad = None
        for name, m in words.items():
            try:
                tag = classify(m)
            except (IllConditioned, NoRoot) as exc:
                bad = f"{name}: {type(exc).__name__}: {exc}"
                break
            if not tag.is_parabolic:
                bad = f"{name}: classified {tag.tag.value}"
                break
        if bad is not None:
            rejected.append(RejectedPoint(X, bad))
            continue
        points.append(
            LocusPoint(
                X=X,
                Y=float(u * y) + 0.0,  # +0.0 folds -0.0 at the endpoints
                x=x,
                y=y,
                z=z,
                theta=params.theta,
                phi=params.phi,
                psi=params.psi,
                res_p=abs(poly_P(X, y_root)) / (1.0 + abs(p_axis(X))),
                res_f1=abs(trace_poly_f((words["J1J2inv"]).trace)),
                res_fc=abs(trace_poly_f((words["commutator"]).trace)),
                branch=branch,
            )
        )
    return points, rejected


@dataclass(frozen=True)
class ZeroSetScan:
    """Sign-change cells of P on a rectangular grid with their components."""

    x_lo: float
    x_hi: float
    y_lo: float
    y_hi: float
    nx: int
    ny: int
    cells: np.ndarray  # bool, (nx-1, ny-1)
    labels: np.ndarray  # int, 0 = empty, 1..n_components
    n_components: int

    @property
    def n_cells(self) -> int:
        return int(self.cells.sum())

    def mirror_symmetric(self) -> bool:
        """Whether the cell set is invariant under Y -> -Y.

        Meaningful only when the Y window is symmetric about zero.
        """
        return bool(np.array_equal(self.cells, self.cells[:, ::-1]))


def scan_P_zero_set(
    nx: int = 300,
    ny: int = 300,
    x_range: tuple[float, float] = (1.5, 7.5),
    y_range: tuple[float, float] = (-0.5, 0.5),
) -> ZeroSetScan:
    """Mark grid cells whose corners straddle P = 0 and label components.

    Components are 8-connected.  The default window encloses the full loop
    (its |Y| never exceeds 0.3) with margin on every side.
    """
    if nx < 2 or ny < 2:
        raise RangeError("grid needs at least 2 points per axis")
    xs = np.linspace(x_range[0], x_range[1], nx)
    ys = np.linspace(y_range[0], y_range[1], ny)
    xx, yy = np.meshgrid(xs, ys, indexing="ij")
    sign = np.sign(poly_P(xx, yy))
    corners = np.stack(
        [sign[:-1, :-1], sign[1:, :-1], sign[:-1, 1:], sign[1:, 1:]]
    )
    cells = (corners.min(axis=0) < 0) & (corners.max(axis=0) > 0)

    labels = np.zeros(cells.shape, dtype=int)
    n_comp = 0
    stack: list[tuple[int, int]] = []
    for i in range(cells.shape[0]):
        for j in range(cells.shape[1]):
            if not cells[i, j] or labels[i, j]:
                continue
            n_comp += 1
            labels[i, j] = n_comp
            stack.append((i, j))
            while stack:
                a, b = stack.pop()
                for da in (-1, 0, 1):
                    for db in (-1, 0, 1):
                        na, nb = a + da, b + db
                        if (
                            0 <= na < cells.shape[0]
                            and 0 <= nb < cells.shape[1]
                            and cells[na, nb]
                            and not labels[na, nb]
                        ):
                            labels[na, nb] = n_comp
                            stack.append((na, nb))
    return ZeroSetScan(
        x_lo=float(x_range[0]),
        x_hi=float(x_range[1]),
        y_lo=float(y_range[0]),
        y_hi=float(y_range[1]),
        nx=nx,
        ny=ny,
        cells=cells,
        labels=labels,
        n_components=n_comp,
    )


def surface_solve_psi(theta: float, phi: float) -> float | None:
    """psi in [0, pi/2] making J1 J2^-1 boundary-type at fixed (theta, phi).

    The discriminant is monotone along psi through x = s cos(2 psi); returns
    None when it does not change sign on the interval.
    """
    lo, hi = 0.0, np.pi / 2.0
    p = SymGroupParams(theta, phi, 0.0)
    f_lo = f_j1j2inv(p)
    f_hi = f_j1j2inv(SymGroupParams(theta, phi, hi))
    if f_lo == 0.0:
        return 0.0
    if f_hi == 0.0:
        return hi
    if f_lo * f_hi > 0.0:
        return None
    while True:
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        f_mid = f_j1j2inv(SymGroupParams(theta, phi, mid))
        if f_mid == 0.0:
            return mid
        if f_mid * f_lo > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class SurfaceSample:
    theta: float
    phi: float
    psi: float
    f_j1j2inv: float
    f_comm_re_deficit: float


def surface_grid(n: int = 64) -> list[SurfaceSample]:
    """Solve the pinch surface as a graph psi(theta, phi) over an n x n grid.

    Grid nodes where the discriminant never crosses zero produce no sample.
    The commutator column carries the trace discriminant of [J1, J2] at the
    surface point, the amount by which the second word misses its own pinch.
    """
    if n < 2:
        raise RangeError("grid needs at least 2 points per axis")
    out: list[SurfaceSample] = []
    vals = np.linspace(-np.pi / 4.0, np.pi / 4.0, n)
    for th in map(float, vals):
        for ph in map(float, vals):
            psi = surface_solve_psi(th, ph)
            if psi is None:
                continue
            p = SymGroupParams(th, ph, psi)
            g = build_sym_group(p)
            comm = g.j1 @ g.j2 @ g.j1.inverse() @ g.j2.inverse()
            out.append(
                SurfaceSample(
                    theta=th,
                    phi=ph,
                    psi=float(psi),
                    f_j1j2inv=f_j1j2inv(p),
                    f_comm_re_deficit=trace_poly_f(comm.trace),
                )
            )
    return out


@dataclass(frozen=True)
class SliceSample:
    psi: float
    theta: float
    phi: float
    f_j1j2inv: float
    f_comm: float


def slice_grid(psi: float, n: int = 400) -> list[SliceSample]:
    """Both discriminants over an n x n (theta, phi) grid at fixed psi."""
    if n < 2:
        raise RangeError("grid needs at least 2 points per axis")
    if not 0.0 <= psi <= np.pi / 2.0:
        raise RangeError(f"psi = {psi} outside [0, pi/2]")
    vals = np.linspace(-np.pi / 4.0, np.pi / 4.0, n)
    tt, pp = np.meshgrid(vals, vals, indexing="ij")
    f1 = f_j1j2inv_grid(tt, pp, psi)
    fc = f_commutator_grid(tt, pp, psi)
    out: list[SliceSample] = []
    for i in range(n):
        for j in range(n):
            out.append(
                SliceSample(
                    psi=float(psi),
                    theta=float(tt[i, j]),
                    phi=float(pp[i, j]),
                    f_j1j2inv=float(f1[i, j]),
                    f_comm=float(fc[i, j]),
                )
            )
    return out


def both_zero_cells(psi: float, n: int = 400) -> int:
    """Cells of an n x n (theta, phi) grid where both discriminants flip sign."""
    if n < 2:
        raise RangeError("grid needs at least 2 points per axis")
    vals = np.linspace(-np.pi / 4.0, np.pi / 4.0, n)
    tt, pp = np.meshgrid(vals, vals, indexing="ij")
    f1 = np.sign(f_j1j2inv_grid(tt, pp, psi))
    fc = np.sign(f_commutator_grid(tt, pp, psi))

    def flips(s: np.ndarray) -> np.ndarray:
        q = np.stack([s[:-1, :-1], s[1:, :-1], s[:-1, 1:], s[1:, 1:]])
        return (q.min(axis=0) < 0) & (q.max(axis=0) > 0)

    return int(np.sum(flips(f1) & flips(fc)))
