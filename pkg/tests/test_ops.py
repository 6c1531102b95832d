"""Shared handler layer: record shapes, dataset contracts, serialization."""

import json

import numpy as np
import pytest

from su21.config import RunConfig
from su21.errors import ParseError
from su21.ops import (
    DATASETS,
    Dataset,
    classify_record,
    cpair,
    deltoid_dataset,
    family_dataset,
    fmt,
    group33_record,
    mat_pairs,
    matrix_from_pairs,
    neutral_lambda,
    render_csv,
    render_json_rows,
    rep_record,
    selftest_report,
    slices_dataset,
    superpinch_dataset,
    surface_dataset,
    tetra_record,
    write_text,
)

CFG = RunConfig(samples=16, resolution=8)

IDENTITY_PAIRS = [
    [[1.0, 0.0], [0.0, 0.0], [0.0, 0.0]],
    [[0.0, 0.0], [1.0, 0.0], [0.0, 0.0]],
    [[0.0, 0.0], [0.0, 0.0], [1.0, 0.0]],
]


# -------------------------------------------------------------- serialization


def test_fmt_17_digits():
    assert fmt(np.pi) == "3.1415926535897931"
    assert fmt(1.0) == "1"
    assert fmt(-0.5) == "-0.5"
    assert fmt(1e-300) == "1e-300"


def test_cpair_and_mat_pairs_round_trip():
    z = 1.5 - 2.25j
    assert cpair(z) == [1.5, -2.25]
    m = matrix_from_pairs(IDENTITY_PAIRS)
    assert mat_pairs(m) == IDENTITY_PAIRS


@pytest.mark.parametrize(
    "data",
    [
        [[1, 2], [3, 4]],
        "nonsense",
        [[[1.0] * 2] * 3] * 2,
        None,
    ],
)
def test_matrix_from_pairs_rejects_bad_shape(data):
    with pytest.raises(ParseError):
        matrix_from_pairs(data)


# ------------------------------------------------------------------- records


def test_classify_record_identity():
    rec = classify_record(IDENTITY_PAIRS, CFG)
    assert rec["tag"] == "Identity"
    assert rec["f_value"] == pytest.approx(0.0, abs=1e-12)
    assert rec["trace"] == pytest.approx([3.0, 0.0])
    assert rec["parabolic"] is False
    assert rec["neutral_eigenvalue"] == pytest.approx([1.0, 0.0])


def test_tetra_record_fields():
    rec = tetra_record(0.2, 0.1, 0.3, 1.0, CFG)
    assert rec["balanced"] is True
    assert rec["balance"]["agree"] is True
    assert len(rec["lifts"]) == 4
    for key in ("theta", "phi", "psi", "r"):
        assert rec["extracted_params"][key] == pytest.approx(
            rec["params"][key], abs=1e-9
        )
    x = complex(*rec["cross_ratio"])
    assert abs(abs(x) - 1.0) < 1e-12


def test_rep_record_neutral_default():
    rec = rep_record(0.2, 0.1, 0.3, None, None, CFG)
    lam = neutral_lambda(0.2, 0.1)
    assert rec["lambda_a"] == pytest.approx(cpair(lam))
    assert rec["lambda_b"] == pytest.approx(cpair(lam))
    assert rec["class_a"] in ("ScrewParabolic", "Unipotent2Step", "Unipotent3Step")
    assert rec["form_residual_a"] < 1e-10
    assert rec["form_residual_b"] < 1e-10
    # lambda_ab = lambda_a lambda_b / X on the balanced normal form
    lam_ab = complex(*rec["lambda_ab"])
    assert abs(lam_ab - lam * lam * np.exp(2j * 0.3)) < 1e-9


def test_group33_record_words():
    rec = group33_record(0.2, 0.1, 0.3, CFG)
    words = rec["words"]
    assert set(words) == {"j1j2", "j1j2inv", "commutator"}
    for info in words.values():
        assert info["residual"] < 1e-10
    assert words["j1j2"]["class"] in (
        "ScrewParabolic",
        "Unipotent2Step",
        "Unipotent3Step",
    )
    coords = rec["coords"]
    assert coords["z"] == pytest.approx(4.0 * np.cos(0.1))
    assert rec["lambda_neutral"] == pytest.approx(cpair(np.exp(-2j * 0.3 / 3.0)))


# ------------------------------------------------------------------- datasets


def test_dataset_registry():
    assert set(DATASETS) == {"deltoid", "surface", "slices", "superpinch", "family"}


def test_deltoid_dataset_contract():
    ds = deltoid_dataset(CFG)
    assert ds.header == ("alpha", "re", "im", "status")
    assert len(ds.rows) == CFG.samples
    assert ds.flagged == 0
    alphas = [row[0] for row in ds.rows]
    assert alphas == sorted(alphas)
    assert all(row[-1] == "ok" for row in ds.rows)


def test_surface_dataset_contract():
    ds = surface_dataset(CFG)
    assert ds.header == ("theta", "phi", "psi", "f_J1J2inv", "f_comm_re_deficit", "status")
    assert ds.flagged == 0
    assert ds.rows
    # canonical order: theta then phi, both ascending
    keys = [(row[0], row[1]) for row in ds.rows]
    assert keys == sorted(keys)


def test_slices_dataset_contract():
    ds = slices_dataset(CFG)
    assert ds.header == ("psi", "theta", "phi", "f_J1J2inv", "f_comm", "status")
    assert len(ds.rows) == CFG.resolution**2
    assert ds.flagged == 0
    assert all(row[0] == CFG.psi_slice for row in ds.rows)


def test_superpinch_dataset_contract():
    ds = superpinch_dataset(CFG)
    assert ds.header == (
        "X", "Y", "x", "y", "z", "theta", "phi", "psi",
        "resP", "resf1", "resfc", "branch", "status",
    )
    assert len(ds.rows) == CFG.samples + 2
    assert ds.flagged == 0
    xs = [row[0] for row in ds.rows]
    assert xs == sorted(xs)
    assert all(row[-1] == "ok" for row in ds.rows)


def test_family_dataset_contract():
    ds = family_dataset(CFG)
    assert ds.header == ("kind", "param", "f_value", "class", "threshold",
                         "theta", "phi", "psi", "status")
    assert len(ds.rows) == 5 * CFG.samples
    kinds = [row[0] for row in ds.rows]
    # kinds appear in enum declaration order, contiguously
    seen = []
    for k in kinds:
        if not seen or seen[-1] != k:
            seen.append(k)
    assert seen == ["finite", "ideal_triangle", "modular_one", "modular_two", "bending"]
    # None thresholds serialize as empty cells later; here they are None
    finite_rows = [row for row in ds.rows if row[0] == "finite"]
    assert all(row[4] is None for row in finite_rows)


def test_datasets_deterministic_bytes():
    for name, builder in DATASETS.items():
        a = render_csv(builder(CFG))
        b = render_csv(builder(CFG))
        assert a == b, name
        assert "\r" not in a
        assert a.endswith("\n")


# ---------------------------------------------------------------- rendering


def test_render_csv_cells():
    ds = Dataset(
        "demo",
        ("a", "b", "c", "d"),
        [[1.5, None, 7, "needs, quoting"]],
        0,
    )
    text = render_csv(ds)
    lines = text.splitlines()
    assert lines[0] == "a,b,c,d"
    assert lines[1] == '1.5,,7,"needs, quoting"'


def test_render_json_rows_match_header():
    ds = deltoid_dataset(CFG)
    objs = render_json_rows(ds)
    assert len(objs) == len(ds.rows)
    assert list(objs[0]) == list(ds.header)
    json.dumps(objs)  # JSON-serializable as-is


def test_write_text_file_and_stdout(tmp_path, capsys):
    out = tmp_path / "x.csv"
    write_text(str(out), "hello\n")
    assert out.read_text() == "hello\n"
    write_text("-", "to stdout\n")
    assert capsys.readouterr().out == "to stdout\n"


# ----------------------------------------------------------------- selftest


def test_selftest_all_pass():
    checks = selftest_report(RunConfig())
    assert len(checks) == 10
    for c in checks:
        assert c.passed, f"{c.name}: {c.detail}"
