"""Command-line front end.

Every subcommand is a thin wrapper over :mod:`su21.ops`: argument parsing
and serialization live here, the math does not.  Record commands print one
JSON document; dataset commands write CSV (or JSON) with a status column
per row and exit nonzero with the count of flagged rows.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import ops
from .config import build_config
from .errors import GeometryError, ParseError

_TOL_FLAGS = ("tol_f", "tol_rank", "tol_fix", "tol_bal", "tol_null")
_CFG_FLAGS = _TOL_FLAGS + ("out", "format", "seed", "samples", "resolution",
                           "psi_slice")


def _add_config_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", metavar="FILE",
                   help="key=value config file; flags override it")
    p.add_argument("--out", metavar="PATH",
                   help="output path, '-' for stdout (default)")
    p.add_argument("--format", choices=("csv", "json"),
                   help="dataset serialization (default csv)")
    p.add_argument("--seed", type=int, help="seed for seeded sweeps")
    for name in _TOL_FLAGS:
        p.add_argument(f"--{name.replace('_', '-')}", type=float,
                       dest=name, metavar="X")


def _add_grid_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--samples", type=int, metavar="N",
                   help="sample count for curve sweeps")
    p.add_argument("--resolution", type=int, metavar="N",
                   help="grid points per axis")
    p.add_argument("--psi-slice", type=float, dest="psi_slice", metavar="PSI",
                   help="psi value for the slices dataset")


def _config(args: argparse.Namespace):
    overrides = {k: getattr(args, k, None) for k in _CFG_FLAGS}
    return build_config(getattr(args, "config", None), **overrides)


def _parse_lambda(text: str | None) -> complex | None:
    """Unit eigenvalue as 're,im' (or bare real part)."""
    if text is None:
        return None
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise ParseError(f"cannot parse eigenvalue {text!r}; expected 're,im'")


def _emit_record(record: dict, cfg) -> int:
    ops.write_text(cfg.out, json.dumps(record, indent=2) + "\n")
    return 0


def _emit_dataset(name: str, cfg) -> int:
    ds = ops.DATASETS[name](cfg)
    if cfg.format == "json":
        text = json.dumps(ops.render_json_rows(ds)) + "\n"
    else:
        text = ops.render_csv(ds)
    ops.write_text(cfg.out, text)
    return min(ds.flagged, 255)


def _cmd_classify(args) -> int:
    cfg = _config(args)
    if args.file is not None:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    elif args.matrix is not None:
        text = args.matrix
    else:
        text = sys.stdin.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"matrix is not valid JSON: {exc}") from exc
    return _emit_record(ops.classify_record(data, cfg), cfg)


def _cmd_tetra(args) -> int:
    cfg = _config(args)
    rec = ops.tetra_record(args.theta, args.phi, args.psi, args.r, cfg)
    return _emit_record(rec, cfg)


def _cmd_rep(args) -> int:
    cfg = _config(args)
    rec = ops.rep_record(
        args.theta, args.phi, args.psi,
        _parse_lambda(args.lambda_a), _parse_lambda(args.lambda_b), cfg,
    )
    return _emit_record(rec, cfg)


def _cmd_group33(args) -> int:
    cfg = _config(args)
    return _emit_record(ops.group33_record(args.theta, args.phi, args.psi, cfg), cfg)


def _cmd_dataset(args) -> int:
    return _emit_dataset(args.dataset_name, _config(args))


def _cmd_selftest(args) -> int:
    cfg = _config(args)
    results = ops.selftest_report(cfg)
    lines = [
        f"{'PASS' if c.passed else 'FAIL'}  {c.name}: {c.detail}"
        for c in results
    ]
    ops.write_text(cfg.out, "\n".join(lines) + "\n")
    return 0 if all(c.passed for c in results) else 1


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    root = argparse.ArgumentParser(
        prog="su21",
        description="Parabolic representations into SU(2,1): builders, "
                    "classifiers, and figure datasets.",
    )
    sub = root.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a 3x3 matrix")
    p.add_argument("matrix", nargs="?",
                   help="JSON 3x3 array of [re, im] pairs; stdin when omitted")
    p.add_argument("--file", help="read the matrix JSON from a file")
    _add_config_flags(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("tetra", help="ideal tetrahedron invariants and balance")
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--phi", type=float, required=True)
    p.add_argument("--psi", type=float, required=True)
    p.add_argument("--r", type=float, default=1.0)
    _add_config_flags(p)
    p.set_defaults(func=_cmd_tetra)

    p = sub.add_parser("rep", help="representation over a balanced tetrahedron")
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--phi", type=float, required=True)
    p.add_argument("--psi", type=float, required=True)
    p.add_argument("--lambda-a", dest="lambda_a", metavar="RE,IM",
                   help="unit eigenvalue of A (default: symmetric value)")
    p.add_argument("--lambda-b", dest="lambda_b", metavar="RE,IM",
                   help="unit eigenvalue of B (default: symmetric value)")
    _add_config_flags(p)
    p.set_defaults(func=_cmd_rep)

    p = sub.add_parser("group33", help="order-3 symmetric pair report")
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--phi", type=float, required=True)
    p.add_argument("--psi", type=float, required=True)
    _add_config_flags(p)
    p.set_defaults(func=_cmd_group33)

    for name, desc in (
        ("deltoid", "trace discriminant zero curve samples"),
        ("surface", "pinch surface psi(theta, phi) grid"),
        ("slices", "both discriminants on a fixed-psi grid"),
        ("superpinch", "doubly-pinched locus in (X, Y)"),
        ("family", "five one-parameter family sweeps"),
    ):
        p = sub.add_parser(name, help=desc)
        _add_grid_flags(p)
        _add_config_flags(p)
        p.set_defaults(func=_cmd_dataset, dataset_name=name)

    p = sub.add_parser("selftest", help="offline identity battery")
    _add_config_flags(p)
    p.set_defaults(func=_cmd_selftest)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    _add_config_flags(p)
    p.set_defaults(func=_cmd_serve)

    return root


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GeometryError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
