"""File formats: grid functions and martingales as JSON, tables as CSV.

Grid file: {"m": [...], "resolution": N, "values": [[re, im], ...]} with
values.length = M_N and flat index sum_j x_j M_j.  Martingale file:
{"m": [...], "levels": [...], "entries": [grid, ...]}.  CSV is UTF-8 with a
header row, comma separator, floats at 17 significant digits.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidParamsError
from .group import GroupSpec, make_group
from .hardy import StepMartingale
from .spectral import GridFunction
from .verify import VerificationRecord

FLOAT_FMT = "%.17g"


def _fmt(x) -> str:
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        return FLOAT_FMT % float(x)
    return str(x)


def grid_to_dict(f: GridFunction) -> dict:
    return {
        "m": list(f.group.m[: f.resolution]),
        "resolution": f.resolution,
        "values": [[float(v.real), float(v.imag)] for v in f.values],
    }


def grid_from_dict(obj: dict, group: GroupSpec | None = None) -> GridFunction:
    N = int(obj["resolution"])
    m = [int(r) for r in obj["m"]]
    if len(m) < N:
        raise InvalidParamsError("radix list shorter than the resolution")
    g = group if group is not None else make_group(m)
    vals = np.array([complex(re, im) for re, im in obj["values"]])
    return GridFunction(g, N, vals)


def save_grid(f: GridFunction, path: str | Path) -> None:
    Path(path).write_text(json.dumps(grid_to_dict(f)), encoding="utf-8")


def load_grid(path: str | Path, group: GroupSpec | None = None) -> GridFunction:
    return grid_from_dict(json.loads(Path(path).read_text(encoding="utf-8")), group)


def martingale_to_dict(mart: StepMartingale) -> dict:
    return {
        "m": list(mart.group.m),
        "levels": list(mart.levels),
        "entries": [grid_to_dict(e) for e in mart.entries],
    }


def martingale_from_dict(obj: dict) -> StepMartingale:
    g = make_group([int(r) for r in obj["m"]])
    entries = tuple(grid_from_dict(e, g) for e in obj["entries"])
    return StepMartingale(group=g, levels=tuple(int(n) for n in obj["levels"]), entries=entries)


def save_martingale(mart: StepMartingale, path: str | Path) -> None:
    Path(path).write_text(json.dumps(martingale_to_dict(mart)), encoding="utf-8")


def load_martingale(path: str | Path) -> StepMartingale:
    return martingale_from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


def write_csv(path: str | Path, header: Sequence[str], rows: Iterable[Sequence]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        for row in rows:
            w.writerow([_fmt(x) for x in row])


def kernel_csv_rows(f: GridFunction) -> list[list]:
    return [[i, v.real, v.imag] for i, v in enumerate(f.values)]


def records_to_json(records: Sequence[VerificationRecord]) -> str:
    return json.dumps([r.to_dict() for r in records], indent=2, default=_json_default)


def _json_default(x):
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.floating,)):
        return float(x)
    if isinstance(x, (np.bool_,)):
        return bool(x)
    raise TypeError(f"not JSON serializable: {type(x)}")


def records_csv_rows(records: Sequence[VerificationRecord]) -> tuple[list[str], list[list]]:
    header = ["suite", "claim", "params", "kind", "value", "bound", "margin", "passed", "tolerance"]
    rows = []
    for r in records:
        rows.append([
            r.suite, r.claim, json.dumps(r.params, sort_keys=True, default=_json_default),
            r.kind, r.value,
            "" if r.bound is None else r.bound,
            "" if r.margin is None else r.margin,
            "" if r.passed is None else r.passed,
            r.tolerance,
        ])
    return header, rows
