"""CSV emission with exact round-trip formatting."""

from __future__ import annotations

import csv
import os
from pathlib import Path
from typing import Sequence

from .runner import RunResult

__all__ = ["TRAJECTORY_HEADER", "format_float", "trajectory_filename", "emit_csv", "emit_summary"]

TRAJECTORY_HEADER = ("t", "k", "L", "K", "method", "k0")


def format_float(x) -> str:
    """Shortest decimal text that parses back to the same double."""
    return repr(float(x))


def trajectory_filename(model: str, method: str, k0: float) -> str:
    return f"{model}_{method}_k0={format_float(k0)}.csv"


def emit_csv(result: RunResult, destination) -> list:
    """Write one CSV per trajectory into ``destination``; returns the paths."""
    directory = Path(destination)
    directory.mkdir(parents=True, exist_ok=True)
    if not os.access(directory, os.W_OK):
        raise PermissionError(f"destination {directory} is not writable")
    model = result.scenario.model
    paths = []
    for (k0, method), traj in result.trajectories.items():
        path = directory / trajectory_filename(model, method, k0)
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(TRAJECTORY_HEADER)
            k0_text = format_float(k0)
            for t, k, L, K in zip(traj.times, traj.k, traj.L, traj.K):
                writer.writerow(
                    (format_float(t), format_float(k), format_float(L), format_float(K), method, k0_text)
                )
        paths.append(path)
    return paths


def _cell_text(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def emit_summary(rows: Sequence[dict], path) -> Path:
    """Write sweep rows; columns follow the first row's key order."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    columns = list(rows[0]) if rows else ["cell", "k0", "k_T", "rate", "deviation", "status", "message"]
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_cell_text(row.get(col)) for col in columns])
    return path
