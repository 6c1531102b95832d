"""Run configuration shared by the CLI and the service.

A config is a flat set of tolerances and output knobs.  Sources merge in
a fixed order: built-in defaults, then an optional ``key=value`` file,
then explicit flags.  Later sources win.
"""

from __future__ import annotations

from dataclasses import dataclass, fields

import numpy as np

from .classify import TAU_F, TAU_RANK
from .errors import ParseError, RangeError
from .hermitian import TAU_FIX, TAU_NULL
from .tetrahedra import TAU_BAL


@dataclass(frozen=True)
class RunConfig:
    tol_f: float = TAU_F
    tol_rank: float = TAU_RANK
    tol_fix: float = TAU_FIX
    tol_bal: float = TAU_BAL
    tol_null: float = TAU_NULL
    resolution: int = 64
    samples: int = 256
    psi_slice: float = 0.02
    out: str = "-"
    format: str = "csv"
    seed: int = 0

    def __post_init__(self):
        for name in ("tol_f", "tol_rank", "tol_fix", "tol_bal", "tol_null"):
            if not getattr(self, name) > 0.0:
                raise RangeError(f"{name} must be positive")
        if self.resolution < 2:
            raise RangeError("resolution must be at least 2")
        if self.samples < 2:
            raise RangeError("samples must be at least 2")
        if not 0.0 <= self.psi_slice <= np.pi / 2.0:
            raise RangeError(f"psi_slice = {self.psi_slice} outside [0, pi/2]")
        if self.format not in ("csv", "json"):
            raise RangeError(f"format must be csv or json, got {self.format!r}")


_FIELD_TYPES = {f.name: f.type for f in fields(RunConfig)}


def _coerce(key: str, raw: str):
    kind = _FIELD_TYPES[key]
    try:
        if kind == "float":
            return float(raw)
        if kind == "int":
            return int(raw)
        return raw
    except ValueError as exc:
        raise ParseError(f"bad value for {key}: {raw!r}") from exc


def parse_config_file(path: str) -> dict:
    """Read ``key=value`` lines; '#' comments and blank lines are skipped."""
    values: dict = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise ParseError(f"cannot read config file {path}: {exc}") from exc
    for lineno, line in enumerate(lines, start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if "=" not in body:
            raise ParseError(f"{path}:{lineno}: expected key=value, got {body!r}")
        key, raw = (part.strip() for part in body.split("=", 1))
        key = key.replace("-", "_")
        if key not in _FIELD_TYPES:
            raise ParseError(f"{path}:{lineno}: unknown key {key!r}")
        values[key] = _coerce(key, raw)
    return values


def build_config(file_path: str | None = None, **overrides) -> RunConfig:
    """Merge defaults, an optional config file, and non-None overrides."""
    values = parse_config_file(file_path) if file_path else {}
    for key, val in overrides.items():
        if val is None:
            continue
        if key not in _FIELD_TYPES:
            raise ParseError(f"unknown config key {key!r}")
        values[key] = val
    return RunConfig(**values)
