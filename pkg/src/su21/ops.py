"""Shared handlers behind the CLI and the HTTP service.

Record handlers turn core objects into plain JSON-ready dicts (complex
numbers as [re, im] pairs, matrices as nested pair lists).  Dataset
builders produce rows in a canonical deterministic order together with a
flagged-row count; numeric failures become a status value on the row, not
an abort.
"""

from __future__ import annotations

import csv
import io
import sys
from dataclasses import dataclass

import numpy as np

from .classify import IsometryTag, classify, deltoid_point, trace_poly_f
from .config import RunConfig
from .errors import IllConditioned, NoRoot, ParseError
from .families import FamilyKind, family_sweep, family_threshold
from .hermitian import Isometry, su21_normalize
from .invariants import bending, cross_ratio
from .pinchlocus import (
    X_MAX,
    X_MIN,
    locus_interval_endpoints,
    slice_grid,
    solve_locus,
    surface_grid,
)
from .representations import rep_from_tetra
from .symmetry33 import (
    SymGroupParams,
    build_sym_group,
    from_xyz,
    jacobian,
    to_xyz,
    trace_commutator,
    trace_j1j2inv,
)
from .tetrahedra import TetraParams, extract_params, is_balanced, standard_lifts

# status threshold for rows whose defining residual should vanish exactly
ROW_RES_TOL = 1e-10


def fmt(x: float) -> str:
    """Canonical float serialization: 17 significant digits."""
    return f"{float(x):.17g}"


def cpair(z: complex) -> list[float]:
    z = complex(z)
    return [float(z.real), float(z.imag)]


def mat_pairs(m: Isometry) -> list[list[list[float]]]:
    return [[cpair(m.matrix[i, j]) for j in range(3)] for i in range(3)]


def matrix_from_pairs(data) -> Isometry:
    """Build a group element from a nested [re, im] array; validates form."""
    arr = np.asarray(data, dtype=float) if _shaped(data) else None
    if arr is None or arr.shape != (3, 3, 2):
        raise ParseError("matrix must be a 3x3 array of [re, im] pairs")
    m = arr[..., 0] + 1j * arr[..., 1]
    return su21_normalize(m, tol_form=1e-9)


def _shaped(data) -> bool:
    try:
        return np.asarray(data, dtype=float).shape == (3, 3, 2)
    except (TypeError, ValueError):
        return False


def _tag_or_reason(m: Isometry, cfg: RunConfig):
    try:
        cls = classify(m, tol_f=cfg.tol_f, tol_rank=cfg.tol_rank)
        return cls, cls.tag.value
    except (IllConditioned, NoRoot) as exc:
        return None, type(exc).__name__


# ---------------------------------------------------------------- records


def classify_record(matrix_data, cfg: RunConfig) -> dict:
    m = matrix_from_pairs(matrix_data)
    cls = classify(m, tol_f=cfg.tol_f, tol_rank=cfg.tol_rank)
    return {
        "tag": cls.tag.value,
        "f_value": cls.f_value,
        "trace": cpair(cls.trace),
        "neutral_eigenvalue": (
            None
            if cls.neutral_eigenvalue is None
            else cpair(cls.neutral_eigenvalue)
        ),
        "parabolic": cls.is_parabolic,
    }


def tetra_record(
    theta: float, phi: float, psi: float, r: float, cfg: RunConfig
) -> dict:
    params = TetraParams(theta, phi, psi, r)
    t = standard_lifts(params)
    p1, p2, p3, p4 = t.points
    rep = is_balanced(t, tol_bal=cfg.tol_bal)
    ext = extract_params(t)
    return {
        "params": {"theta": params.theta, "phi": params.phi,
                   "psi": params.psi, "r": params.r},
        "lifts": [[cpair(z) for z in p.lift] for p in t.points],
        "cross_ratio": cpair(cross_ratio(p1, p2, p3, p4)),
        "bending": cpair(bending(p1, p2, p3, p4)),
        "balanced": rep.balanced,
        "balance": {
            "by_cross_ratio": rep.by_cross_ratio,
            "by_projection": rep.by_projection,
            "cross_ratio_residual": rep.cross_ratio_residual,
            "projection_residual": rep.projection_residual,
            "agree": rep.agree,
        },
        "extracted_params": {"theta": ext.theta, "phi": ext.phi,
                             "psi": ext.psi, "r": ext.r},
    }


def neutral_lambda(theta: float, phi: float) -> complex:
    """The unit eigenvalue that makes the pair generate the symmetric group."""
    return complex(np.exp(-2j * (theta + phi) / 3.0))


def rep_record(
    theta: float,
    phi: float,
    psi: float,
    lambda_a: complex | None,
    lambda_b: complex | None,
    cfg: RunConfig,
) -> dict:
    params = TetraParams(theta, phi, psi, 1.0)
    if lambda_a is None:
        lambda_a = neutral_lambda(theta, phi)
    if lambda_b is None:
        lambda_b = neutral_lambda(theta, phi)
    t = standard_lifts(params)
    rep = rep_from_tetra(t, lambda_a, lambda_b, tol_bal=cfg.tol_bal)
    ab = rep.a @ rep.b
    _, tag_a = _tag_or_reason(rep.a, cfg)
    _, tag_b = _tag_or_reason(rep.b, cfg)
    _, tag_ab = _tag_or_reason(ab, cfg)
    return {
        "params": {"theta": params.theta, "phi": params.phi,
                   "psi": params.psi, "r": params.r},
        "lambda_a": cpair(rep.lambda_a),
        "lambda_b": cpair(rep.lambda_b),
        "lambda_ab": cpair(rep.lambda_ab),
        "a": mat_pairs(rep.a),
        "b": mat_pairs(rep.b),
        "trace_a": cpair(rep.a.trace),
        "trace_b": cpair(rep.b.trace),
        "trace_ab": cpair(ab.trace),
        "class_a": tag_a,
        "class_b": tag_b,
        "class_ab": tag_ab,
        "form_residual_a": rep.a.form_residual(),
        "form_residual_b": rep.b.form_residual(),
    }


def group33_record(theta: float, phi: float, psi: float, cfg: RunConfig) -> dict:
    params = SymGroupParams(theta, phi, psi)
    g = build_sym_group(params)
    coords = to_xyz(params)
    w = g.j1 @ g.j2.inverse()
    comm = g.j1 @ g.j2 @ g.j1.inverse() @ g.j2.inverse()
    closed = {
        "j1j2": complex(deltoid_point(-2.0 * (theta + phi) / 3.0)),
        "j1j2inv": trace_j1j2inv(params),
        "commutator": trace_commutator(params),
    }
    words = {"j1j2": g.a, "j1j2inv": w, "commutator": comm}
    traces = {}
    for name, m in words.items():
        _, tag = _tag_or_reason(m, cfg)
        traces[name] = {
            "trace": cpair(m.trace),
            "trace_closed": cpair(closed[name]),
            "residual": abs(m.trace - closed[name]),
            "class": tag,
        }
    return {
        "params": {"theta": params.theta, "phi": params.phi, "psi": params.psi},
        "j1": mat_pairs(g.j1),
        "j2": mat_pairs(g.j2),
        "a": mat_pairs(g.a),
        "b": mat_pairs(g.b),
        "lambda_neutral": cpair(g.lambda_neutral),
        "words": traces,
        "coords": {"x": coords.x, "y": coords.y, "z": coords.z},
        "jacobian": jacobian(params),
    }


# ---------------------------------------------------------------- datasets


@dataclass(frozen=True)
class Dataset:
    """Rows in canonical order; cells are float, int, str, or None."""

    name: str
    header: tuple[str, ...]
    rows: list[list]
    flagged: int


def deltoid_dataset(cfg: RunConfig) -> Dataset:
    rows = []
    flagged = 0
    for alpha in np.linspace(-np.pi, np.pi, cfg.samples, endpoint=False):
        z = deltoid_point(float(alpha))
        res = abs(trace_poly_f(z))
        ok = res <= ROW_RES_TOL
        flagged += 0 if ok else 1
        rows.append([float(alpha), z.real, z.imag,
                     "ok" if ok else f"f residual {res:.3e}"])
    return Dataset("deltoid", ("alpha", "re", "im", "status"), rows, flagged)


def surface_dataset(cfg: RunConfig) -> Dataset:
    rows = []
    flagged = 0
    for s in surface_grid(cfg.resolution):
        ok = abs(s.f_j1j2inv) <= ROW_RES_TOL
        flagged += 0 if ok else 1
        rows.append([s.theta, s.phi, s.psi, s.f_j1j2inv, s.f_comm_re_deficit,
                     "ok" if ok else f"f residual {abs(s.f_j1j2inv):.3e}"])
    return Dataset(
        "surface",
        ("theta", "phi", "psi", "f_J1J2inv", "f_comm_re_deficit", "status"),
        rows,
        flagged,
    )


def slices_dataset(cfg: RunConfig) -> Dataset:
    rows = []
    for s in slice_grid(cfg.psi_slice, cfg.resolution):
        rows.append([s.psi, s.theta, s.phi, s.f_j1j2inv, s.f_comm, "ok"])
    return Dataset(
        "slices",
        ("psi", "theta", "phi", "f_J1J2inv", "f_comm", "status"),
        rows,
        0,
    )


def superpinch_dataset(cfg: RunConfig) -> Dataset:
    points, rejected = solve_locus(cfg.samples)
    rows = []
    for p in points:
        rows.append([p.X, p.Y, p.x, p.y, p.z, p.theta, p.phi, p.psi,
                     p.res_p, p.res_f1, p.res_fc, p.branch, "ok"])
    for r in rejected:
        rows.append([r.X] + [None] * 11 + [r.reason])
    rows.sort(key=lambda row: row[0])
    return Dataset(
        "superpinch",
        ("X", "Y", "x", "y", "z", "theta", "phi", "psi",
         "resP", "resf1", "resfc", "branch", "status"),
        rows,
        len(rejected),
    )


def family_dataset(cfg: RunConfig) -> Dataset:
    rows = []
    flagged = 0
    for kind in FamilyKind:
        for s in family_sweep(kind, cfg.samples):
            ok = s.w_class != "IllConditioned"
            flagged += 0 if ok else 1
            rows.append([s.kind, s.param, s.f_value, s.w_class, s.threshold,
                         s.theta, s.phi, s.psi,
                         "ok" if ok else "IllConditioned"])
    return Dataset(
        "family",
        ("kind", "param", "f_value", "class", "threshold",
         "theta", "phi", "psi", "status"),
        rows,
        flagged,
    )


DATASETS = {
    "deltoid": deltoid_dataset,
    "surface": surface_dataset,
    "slices": slices_dataset,
    "superpinch": superpinch_dataset,
    "family": family_dataset,
}


def render_csv(ds: Dataset) -> str:
    """Serialize with 17 significant digits and LF newlines."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(ds.header)
    for row in ds.rows:
        cells = []
        for cell in row:
            if cell is None:
                cells.append("")
            elif isinstance(cell, bool) or isinstance(cell, str):
                cells.append(str(cell))
            elif isinstance(cell, int):
                cells.append(str(cell))
            else:
                cells.append(fmt(cell))
        writer.writerow(cells)
    return buf.getvalue()


def render_json_rows(ds: Dataset) -> list[dict]:
    """The same columns as JSON object fields, one object per row."""
    return [dict(zip(ds.header, row)) for row in ds.rows]


def write_text(out: str, text: str) -> None:
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


# ---------------------------------------------------------------- selftest


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _check(name, passed, detail) -> CheckResult:
    return CheckResult(name, bool(passed), detail)


def selftest_report(cfg: RunConfig) -> list[CheckResult]:
    """Fast internal battery over the main identities; seeded and offline."""
    from . import sampling
    from .families import FamilyKind as FK
    from .representations import rep_closed_form

    rng = np.random.default_rng(cfg.seed)
    out: list[CheckResult] = []

    worst = max(
        abs(trace_poly_f(deltoid_point(a)))
        for a in np.linspace(-np.pi, np.pi, 720)
    )
    out.append(_check("deltoid parametrization", worst <= 1e-10,
                      f"max |f| = {worst:.3e}"))

    gens = {
        sampling.random_loxodromic: IsometryTag.LOXODROMIC,
        sampling.random_regular_elliptic: IsometryTag.REGULAR_ELLIPTIC,
        sampling.random_unipotent_2step: IsometryTag.UNIPOTENT_2STEP,
        sampling.random_unipotent_3step: IsometryTag.UNIPOTENT_3STEP,
        sampling.random_screw_parabolic: IsometryTag.SCREW_PARABOLIC,
        sampling.random_complex_reflection: IsometryTag.COMPLEX_REFLECTION,
    }
    bad = 0
    for gen, want in gens.items():
        for _ in range(12):
            got, _name = _tag_or_reason(gen(rng), cfg)
            if got is None or got.tag is not want:
                bad += 1
    out.append(_check("classifier on synthetic classes", bad == 0,
                      f"{bad} mismatches of {12 * len(gens)}"))

    worst = 0.0
    for _ in range(10):
        p = sampling.random_sym_params(rng)
        g = build_sym_group(p)
        lam = neutral_lambda(p.theta, p.phi)
        rep = rep_closed_form(p.theta, p.phi, p.psi, lam, lam)
        for built, word in ((rep.a, g.a), (rep.b, g.b)):
            diff = min(
                float(np.max(np.abs(built.matrix - w * word.matrix)))
                for w in (1.0, np.exp(2j * np.pi / 3), np.exp(-2j * np.pi / 3))
            )
            worst = max(worst, diff)
    out.append(_check("symmetric pair equals J-products", worst <= 1e-9,
                      f"max entry diff = {worst:.3e}"))

    worst = 0.0
    for _ in range(20):
        p = sampling.random_sym_params(rng)
        g = build_sym_group(p)
        worst = max(
            worst,
            abs((g.j1 @ g.j2.inverse()).trace - trace_j1j2inv(p)),
            abs((g.j1 @ g.j2 @ g.j1.inverse() @ g.j2.inverse()).trace
                - trace_commutator(p)),
        )
    out.append(_check("closed-form traces", worst <= 1e-10,
                      f"max trace diff = {worst:.3e}"))

    lo, hi = locus_interval_endpoints()
    err = max(abs(lo - X_MIN), abs(hi - X_MAX))
    out.append(_check("locus interval endpoints", err <= 1e-10,
                      f"max endpoint err = {err:.3e}"))

    points, rejected = solve_locus(8)
    res = max((max(p.res_p, p.res_f1, p.res_fc) for p in points), default=1.0)
    out.append(_check("locus solve", not rejected and res <= 1e-10,
                      f"{len(rejected)} rejected, max residual {res:.3e}"))

    expect = {
        FK.IDEAL_TRIANGLE: 0.5 * np.arccos(np.sqrt(3.0) / (8.0 * np.sqrt(2.0))),
        FK.MODULAR_ONE: 0.5 * np.arccos(0.25),
        FK.BENDING: np.arcsin(np.sqrt(3.0 / 8.0)),
    }
    err = max(
        abs(family_threshold(kind) - want) for kind, want in expect.items()
    )
    none_ok = (family_threshold(FK.FINITE) is None
               and family_threshold(FK.MODULAR_TWO) is None)
    out.append(_check("family thresholds", err <= 1e-10 and none_ok,
                      f"max threshold err = {err:.3e}"))

    worst = 0.0
    flags_ok = True
    for balanced in (True, False):
        for _ in range(8):
            params = sampling.random_tetra_params(rng, balanced=balanced)
            t = standard_lifts(params)
            if is_balanced(t, tol_bal=cfg.tol_bal).balanced != balanced:
                flags_ok = False
            e = extract_params(t)
            worst = max(worst, abs(e.theta - params.theta),
                        abs(e.phi - params.phi), abs(e.psi - params.psi),
                        abs(e.r - params.r))
    out.append(_check("tetra extraction round trip",
                      flags_ok and worst <= 1e-9,
                      f"max param err = {worst:.3e}"))

    worst = 0.0
    for _ in range(15):
        p = sampling.random_sym_params(rng)
        cands = from_xyz(to_xyz(p))
        best = min(
            max(abs(c.theta - p.theta), abs(c.phi - p.phi), abs(c.psi - p.psi))
            for c in cands
        )
        worst = max(worst, best)
    out.append(_check("coordinate round trip", worst <= 1e-9,
                      f"max param err = {worst:.3e}"))

    worst = max(
        sampling.random_su21(rng).form_residual() for _ in range(20)
    )
    out.append(_check("generator form preservation", worst <= 1e-12,
                      f"max form residual = {worst:.3e}"))

    return out
