"""Scenario harness behind the command line."""

from .output import emit_csv, emit_summary
from .runner import RunResult, parse_axis, run, sweep
from .scenario import PRESETS, Scenario, format_scenario, parse_scenario, preset, scenario_from_mapping

__all__ = [
    "PRESETS",
    "RunResult",
    "Scenario",
    "emit_csv",
    "emit_summary",
    "format_scenario",
    "parse_axis",
    "parse_scenario",
    "preset",
    "run",
    "scenario_from_mapping",
    "sweep",
]
