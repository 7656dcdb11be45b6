"""Scenario execution: single runs and parameter sweeps."""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Mapping, Optional, Sequence

import numpy as np

from ..closed_form import trajectory_closed_form
from ..core import ClassicalParams, Trajectory
from ..errors import ScenarioError, SolowSwanError
from ..numerics.ode import integrate
from ..numerics.rhs import bertalanffy_problem, classical_problem
from .scenario import Scenario, scenario_from_mapping

__all__ = ["RunResult", "run", "max_relative_deviation", "parse_axis", "sweep", "SWEEP_AXES"]

SWEEP_AXES = ("alpha", "n", "s", "gamma", "r", "Linf", "k0")
MAX_CELLS = 10_000


@dataclass
class RunResult:
    """Trajectories of one scenario, keyed by ``(k0, method)`` in run order."""

    scenario: Scenario
    trajectories: dict = field(default_factory=dict)
    deviations: dict = field(default_factory=dict)

    @property
    def max_deviation(self) -> Optional[float]:
        if not self.deviations:
            return None
        return max(self.deviations.values())


def max_relative_deviation(reference: Trajectory, other: Trajectory) -> float:
    if len(reference) == 0:
        return 0.0
    return float(np.max(np.abs(other.k - reference.k) / np.abs(reference.k)))


def _annotated(exc: SolowSwanError, k0: float) -> SolowSwanError:
    annotated = type(exc)(f"k0={k0!r}: {exc}")
    annotated.__dict__.update(exc.__dict__)
    return annotated


def run(sc: Scenario) -> RunResult:
    """Produce every requested trajectory for each initial condition."""
    grid = sc.grid()
    result = RunResult(sc)
    for k0 in sc.initial_conditions:
        params = sc.params_for(k0)
        try:
            for method in sc.methods():
                if method == "closed_form":
                    traj = trajectory_closed_form(params, grid, sc.tolerances)
                else:
                    build = classical_problem if isinstance(params, ClassicalParams) else bertalanffy_problem
                    traj = integrate(build(params, sc.t_end), grid, sc.tolerances).trajectory
                result.trajectories[(k0, method)] = traj
        except SolowSwanError as exc:
            raise _annotated(exc, k0) from exc
        if sc.method == "both":
            result.deviations[k0] = max_relative_deviation(
                result.trajectories[(k0, "closed_form")], result.trajectories[(k0, "integrated")]
            )
    return result


# -- sweeps -------------------------------------------------------------------


def parse_axis(text: str) -> tuple:
    """``key=start:stop:count`` into ``(key, values)``; ``count`` points inclusive."""
    key, sep, bounds = text.partition("=")
    key = key.strip()
    if not sep:
        raise ScenarioError(f"axis must look like key=start:stop:count, got {text!r}")
    if key not in SWEEP_AXES:
        raise ScenarioError(f"{key}: not a sweepable key; choose from {SWEEP_AXES}", key)
    parts = bounds.split(":")
    try:
        if len(parts) != 3:
            raise ValueError
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise ScenarioError(f"{key}: axis must look like start:stop:count, got {bounds!r}", key)
    if count < 1:
        raise ScenarioError(f"{key}: axis count must be >= 1", key)
    values = np.linspace(start, stop, count) if count > 1 else np.array([start])
    return key, tuple(float(v) for v in values)


def _run_cell(job) -> list:
    index, base, cell = job
    doc = dict(base)
    doc.update(cell)
    rows = []
    try:
        sc = scenario_from_mapping(doc)
        result = run(sc)
    except SolowSwanError as exc:
        k0s = doc["k0"] if isinstance(doc.get("k0"), list) else [doc.get("k0")]
        for k0 in k0s:
            rows.append(_row(index, cell, k0, None, None, None, "failed", str(exc)))
        return rows
    T = sc.t_end
    for k0 in sc.initial_conditions:
        method = "closed_form" if "closed_form" in sc.methods() else "integrated"
        k_T = float(result.trajectories[(k0, method)].k[-1])
        rows.append(
            _row(index, cell, k0, k_T, math.log(k_T) / T, result.deviations.get(k0), "ok", "")
        )
    return rows


def _row(index, cell, k0, k_T, rate, deviation, status, message) -> dict:
    row = {"cell": index}
    row.update(cell)
    row.update(k0=k0, k_T=k_T, rate=rate, deviation=deviation, status=status, message=message)
    return row


def sweep(base: Scenario, axes: Sequence[tuple], jobs: int = 1) -> list:
    """Run one scenario per grid cell; returns summary rows in row-major order.

    A cell that fails validation or evaluation is recorded with
    ``status="failed"`` and does not stop the sweep. With ``jobs > 1``
    cells run in worker processes; the row order does not change.
    """
    keys = [key for key, _ in axes]
    if len(set(keys)) != len(keys):
        raise ScenarioError("each sweep axis may appear only once")
    n_cells = math.prod(len(values) for _, values in axes) if axes else 1
    if n_cells > MAX_CELLS:
        raise ScenarioError(f"sweep has {n_cells} cells; the limit is {MAX_CELLS}")
    base_doc = base.to_mapping()
    cells = [dict(zip(keys, combo)) for combo in itertools.product(*(v for _, v in axes))]
    work = [(i, base_doc, cell) for i, cell in enumerate(cells)]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_run_cell, work))
    else:
        chunks = [_run_cell(job) for job in work]
    return [row for chunk in chunks for row in chunk]
