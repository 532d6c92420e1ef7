"""Trajectory files: a fixed set of targets observed over discrete time.

Two on-disk layouts are supported, both with the target count t and the
per-target dimension n_x constant across every timestep:

* CSV — header ``k,x_1_1,...,x_1_nx,x_2_1,...,x_t_nx`` and one row per
  timestep.  t and n_x are declared either by a sidecar comment line
  ``# t=<int> nx=<int>`` (anywhere before the data), by explicit arguments,
  or, failing both, are inferred from the ``x_<target>_<component>`` header
  names.  Explicit arguments win over the sidecar, which wins over inference.
* JSON — ``{"t": int, "nx": int, "steps": [{"k": int, "targets": [[...]]}]}``.

Parsing is strict: malformed records name their line or record number, NaN
or infinite cells are rejected, and any drift in t or n_x is an error
(the metric is only defined for a fixed, known number of targets).
"""

from __future__ import annotations

import csv
import json
import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .core import MultiTargetState
from .errors import InconsistentShape, NonFiniteValue, ParseError

__all__ = ["Trajectory", "load_trajectory"]

_SIDECAR_RE = re.compile(r"^#\s*t\s*=\s*(\d+)\s+nx\s*=\s*(\d+)\s*$")
_COLUMN_RE = re.compile(r"^x_(\d+)_(\d+)$")


@dataclass(frozen=True)
class Trajectory:
    """Ordered (time index, multitarget state) pairs with constant shape."""

    steps: tuple[tuple[int, MultiTargetState], ...]

    def __post_init__(self):
        steps = tuple((int(k), state) for k, state in self.steps)
        if len(steps) < 1:
            raise ValueError("a trajectory needs at least one timestep")
        for (k_prev, _), (k_next, _) in zip(steps, steps[1:]):
            if k_next <= k_prev:
                raise ValueError(
                    f"time indices must be strictly increasing, got {k_prev} then {k_next}"
                )
        t, nx = steps[0][1].num_targets, steps[0][1].state_dim
        for k, state in steps:
            if state.num_targets != t or state.state_dim != nx:
                raise InconsistentShape(
                    f"timestep {k} has {state.num_targets} targets of dimension "
                    f"{state.state_dim}; expected {t} of dimension {nx}"
                )
        object.__setattr__(self, "steps", steps)

    @property
    def num_targets(self) -> int:
        return self.steps[0][1].num_targets

    @property
    def state_dim(self) -> int:
        return self.steps[0][1].state_dim

    @property
    def time_indices(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)


def _check_finite(values: np.ndarray, where: str) -> None:
    if not np.all(np.isfinite(values)):
        raise NonFiniteValue(f"NaN or infinity in {where}")


def _infer_shape_from_header(names: list[str]) -> tuple[int, int]:
    """Recover (t, n_x) from ``x_<target>_<component>`` column names."""
    pairs = []
    for name in names:
        m = _COLUMN_RE.match(name.strip())
        if m is None:
            raise ParseError(
                f"cannot infer t and nx: column {name!r} is not of the form "
                f"'x_<target>_<component>' (declare them via '# t=.. nx=..' or flags)"
            )
        pairs.append((int(m.group(1)), int(m.group(2))))
    t = max(i for i, _ in pairs)
    nx = max(j for _, j in pairs)
    expected = [(i, j) for i in range(1, t + 1) for j in range(1, nx + 1)]
    if pairs != expected:
        raise ParseError(
            f"header names do not enumerate x_1_1..x_{t}_{nx} in order"
        )
    return t, nx


def _load_csv(path: Path, t: int | None, nx: int | None) -> Trajectory:
    sidecar: tuple[int, int] | None = None
    rows: list[tuple[int, list[str]]] = []  # (1-based line number, fields)
    with open(path, newline="") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            if line.lstrip().startswith("#"):
                m = _SIDECAR_RE.match(line.strip())
                if m:
                    sidecar = (int(m.group(1)), int(m.group(2)))
                continue
            rows.append((lineno, next(csv.reader([line]))))

    if not rows:
        raise ParseError(f"{path}: no header row found")
    header_line, header = rows[0]
    data = rows[1:]
    if not header or header[0].strip() != "k":
        raise ParseError(f"{path}: line {header_line}: first header column must be 'k'")

    if t is None and sidecar is not None:
        t = sidecar[0]
    if nx is None and sidecar is not None:
        nx = sidecar[1]
    if t is None or nx is None:
        inf_t, inf_nx = _infer_shape_from_header(header[1:])
        t = inf_t if t is None else t
        nx = inf_nx if nx is None else nx
    if t < 1 or nx < 1:
        raise ParseError(f"{path}: t and nx must be >= 1, got t={t} nx={nx}")
    if len(header) != 1 + t * nx:
        raise ParseError(
            f"{path}: line {header_line}: header has {len(header)} columns, "
            f"expected 1 + t*nx = {1 + t * nx} for t={t} nx={nx}"
        )

    if not data:
        raise ParseError(f"{path}: no data rows")
    steps = []
    for lineno, fields in data:
        if len(fields) != 1 + t * nx:
            raise InconsistentShape(
                f"{path}: line {lineno}: row has {len(fields)} columns, "
                f"expected {1 + t * nx} (t={t} targets of dimension {nx})"
            )
        try:
            k = int(fields[0])
        except ValueError:
            raise ParseError(
                f"{path}: line {lineno}: time index {fields[0]!r} is not an integer"
            ) from None
        try:
            values = np.array([float(v) for v in fields[1:]])
        except ValueError:
            raise ParseError(f"{path}: line {lineno}: non-numeric state value") from None
        _check_finite(values, f"{path}: line {lineno}")
        steps.append((k, MultiTargetState.from_array(values.reshape(t, nx))))

    _check_time_order(steps, str(path))
    return Trajectory(tuple(steps))


def _load_json(path: Path, t: int | None, nx: int | None) -> Trajectory:
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: line {exc.lineno}: {exc.msg}") from None

    if not isinstance(doc, dict):
        raise ParseError(f"{path}: top level must be an object")
    for key in ("t", "nx", "steps"):
        if key not in doc:
            raise ParseError(f"{path}: missing key {key!r}")
    # Explicit arguments override the declared shape, mirroring the CSV rules.
    t = int(doc["t"]) if t is None else t
    nx = int(doc["nx"]) if nx is None else nx
    if t < 1 or nx < 1:
        raise ParseError(f"{path}: t and nx must be >= 1, got t={t} nx={nx}")
    if not isinstance(doc["steps"], list) or not doc["steps"]:
        raise ParseError(f"{path}: 'steps' must be a non-empty array")

    steps = []
    for i, step in enumerate(doc["steps"]):
        where = f"{path}: steps[{i}]"
        if not isinstance(step, dict) or "k" not in step or "targets" not in step:
            raise ParseError(f"{where}: expected an object with 'k' and 'targets'")
        try:
            k = int(step["k"])
        except (TypeError, ValueError):
            raise ParseError(f"{where}: time index {step['k']!r} is not an integer") from None
        try:
            targets = np.array(step["targets"], dtype=float)
        except (TypeError, ValueError):
            raise ParseError(f"{where}: 'targets' is not a rectangular array of reals") from None
        if targets.shape != (t, nx):
            raise InconsistentShape(
                f"{where}: targets have shape {targets.shape}, expected ({t}, {nx})"
            )
        _check_finite(targets, where)
        steps.append((k, MultiTargetState.from_array(targets)))

    _check_time_order(steps, str(path))
    return Trajectory(tuple(steps))


def _check_time_order(steps: list[tuple[int, MultiTargetState]], where: str) -> None:
    for (k_prev, _), (k_next, _) in zip(steps, steps[1:]):
        if k_next <= k_prev:
            raise ParseError(
                f"{where}: time indices must be strictly increasing, "
                f"got {k_prev} followed by {k_next}"
            )


def load_trajectory(
    path: str | Path,
    format: str,
    t: int | None = None,
    nx: int | None = None,
) -> Trajectory:
    """Read a trajectory file.

    Args:
        path: file to read.
        format: ``"csv"`` or ``"json"``.
        t: target count, overriding whatever the file declares.
        nx: per-target dimension, overriding whatever the file declares.

    Raises:
        ParseError: malformed file; the message names the line or record.
        InconsistentShape: t or n_x varies across timesteps.
        NonFiniteValue: a NaN or infinite state value.
    """
    path = Path(path)
    if format == "csv":
        return _load_csv(path, t, nx)
    if format == "json":
        return _load_json(path, t, nx)
    raise ValueError(f"unknown trajectory format {format!r}; expected 'csv' or 'json'")
