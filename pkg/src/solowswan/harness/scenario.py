"""Scenario documents: parsing, validation, canonical form and presets.

Scenarios are flat TOML documents. A complete example::

    model = "bertalanffy"
    alpha = 0.5
    n = 0.8
    s = 0.4
    r = 0.9
    L0 = 1.0
    Linf = 5.0
    k0 = [1.0, 5.0, 10.0, 20.0]
    t_end = 10.0
    samples = 400
    abs_tol = 1e-12
    rel_tol = 1e-10
    method = "both"

Classical (exponential labor) scenarios use ``gamma`` in place of
``r`` and ``Linf``.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass, replace
from typing import Any, Mapping, Union

import numpy as np

if sys.version_info >= (3, 11):
    import tomllib
else:  # pragma: no cover - exercised on 3.10 only
    import tomli as tomllib

from ..core import ORACLE_TOLERANCES, BertalanffyParams, ClassicalParams, CobbDouglas, Tolerances
from ..errors import DomainError, ScenarioError

__all__ = [
    "Scenario",
    "PRESETS",
    "parse_scenario",
    "scenario_from_mapping",
    "format_scenario",
    "preset",
    "parse_override",
]

MODELS = ("classical", "bertalanffy")
RUN_METHODS = ("closed_form", "integrated", "both")

COMMON_KEYS = ("model", "alpha", "n", "s", "L0", "k0")
MODEL_KEYS = {"classical": ("gamma",), "bertalanffy": ("r", "Linf")}
OPTIONAL_KEYS = {
    "t_end": 10.0,
    "samples": 400,
    "abs_tol": Tolerances().abs_tol,
    "rel_tol": Tolerances().rel_tol,
    "method": "closed_form",
}
ALL_KEYS = set(COMMON_KEYS) | {"gamma", "r", "Linf"} | set(OPTIONAL_KEYS)

Params = Union[ClassicalParams, BertalanffyParams]


@dataclass(frozen=True)
class Scenario:
    """A validated run description.

    ``params`` carries the first initial condition; the others are
    substituted at run time. ``n`` keeps the homogeneity degree exactly as
    written so the canonical form round-trips.
    """

    model: str
    params: Params
    n: float
    t_end: float
    samples: int
    initial_conditions: tuple
    tolerances: Tolerances
    method: str

    def grid(self) -> np.ndarray:
        return np.linspace(0.0, self.t_end, self.samples)

    def params_for(self, k0: float) -> Params:
        return replace(self.params, k0=float(k0))

    def methods(self) -> tuple:
        if self.method == "both":
            return ("closed_form", "integrated")
        return (self.method,)

    def to_mapping(self) -> dict:
        p = self.params
        out = {"model": self.model, "alpha": p.production.alpha, "n": self.n, "s": p.s}
        if self.model == "classical":
            out["gamma"] = p.gamma
        else:
            out["r"] = p.r
            out["Linf"] = p.Linf
        out["L0"] = p.L0
        out["k0"] = list(self.initial_conditions)
        out.update(
            t_end=self.t_end,
            samples=self.samples,
            abs_tol=self.tolerances.abs_tol,
            rel_tol=self.tolerances.rel_tol,
            method=self.method,
        )
        return out


def _number(key: str, value: Any) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ScenarioError(f"{key}: expected a number, got {value!r}", key)
    value = float(value)
    if not math.isfinite(value):
        raise ScenarioError(f"{key}: must be finite, got {value!r}", key)
    return value


def _positive(key: str, value: Any) -> float:
    value = _number(key, value)
    if not value > 0.0:
        raise ScenarioError(f"{key}: must be > 0, got {value!r}", key)
    return value


def scenario_from_mapping(doc: Mapping[str, Any]) -> Scenario:
    """Validate a key-value mapping into a :class:`Scenario`.

    Raises ``ScenarioError`` naming the offending key and constraint.
    """
    model = doc.get("model")
    if model not in MODELS:
        raise ScenarioError(f"model: must be one of {MODELS}, got {model!r}", "model")
    allowed = set(COMMON_KEYS) | set(MODEL_KEYS[model]) | set(OPTIONAL_KEYS)
    for key in doc:
        if key not in allowed:
            hint = f" (not valid for model {model!r})" if key in ALL_KEYS else ""
            raise ScenarioError(f"{key}: unknown key{hint}", key)
    for key in COMMON_KEYS + MODEL_KEYS[model]:
        if key not in doc:
            raise ScenarioError(f"{key}: required key is missing", key)
    values = {**OPTIONAL_KEYS, **doc}

    alpha = _number("alpha", values["alpha"])
    if not 0.0 < alpha <= 1.0:
        raise ScenarioError(f"alpha: must lie in (0, 1], got {alpha!r}", "alpha")
    n = _number("n", values["n"])
    beta = n - alpha
    if not 0.0 < beta <= 1.0:
        raise ScenarioError(
            f"n: beta = n - alpha = {beta!r} must lie in (0, 1]", "n"
        )
    s = _number("s", values["s"])
    if s < 0.0:
        raise ScenarioError(f"s: must be >= 0, got {s!r}", "s")
    L0 = _positive("L0", values["L0"])

    raw_k0 = values["k0"]
    k0s = raw_k0 if isinstance(raw_k0, list) else [raw_k0]
    if not k0s:
        raise ScenarioError("k0: at least one initial condition is required", "k0")
    initial = tuple(_positive("k0", k) for k in k0s)

    t_end = _positive("t_end", values["t_end"])
    samples = values["samples"]
    if isinstance(samples, bool) or not isinstance(samples, int) or samples < 2:
        raise ScenarioError(f"samples: must be an integer >= 2, got {samples!r}", "samples")
    try:
        tolerances = Tolerances(
            _positive("abs_tol", values["abs_tol"]), _positive("rel_tol", values["rel_tol"])
        )
    except DomainError as exc:
        raise ScenarioError(str(exc), "abs_tol") from exc
    method = values["method"]
    if method not in RUN_METHODS:
        raise ScenarioError(f"method: must be one of {RUN_METHODS}, got {method!r}", "method")

    production = CobbDouglas(alpha, beta)
    try:
        if model == "classical":
            params = ClassicalParams(production, s, _positive("gamma", values["gamma"]), L0, initial[0])
        else:
            Linf = _positive("Linf", values["Linf"])
            if L0 > Linf:
                raise ScenarioError(f"L0: must not exceed Linf ({L0!r} > {Linf!r})", "L0")
            params = BertalanffyParams(production, s, _positive("r", values["r"]), Linf, L0, initial[0])
    except DomainError as exc:
        raise ScenarioError(str(exc)) from exc

    return Scenario(model, params, n, t_end, samples, initial, tolerances, method)


def parse_scenario(text: str) -> Scenario:
    try:
        doc = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise ScenarioError(f"scenario is not valid TOML: {exc}") from exc
    return scenario_from_mapping(doc)


def _toml_value(value: Any) -> str:
    if isinstance(value, str):
        return '"' + value.replace("\\", "\\\\").replace('"', '\\"') + '"'
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        text = repr(value)
        return text if any(ch in text for ch in ".en") else text + ".0"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_toml_value(v) for v in value) + "]"
    raise TypeError(f"cannot encode {value!r} as TOML")


def format_scenario(sc: Scenario) -> str:
    """Canonical TOML text; ``parse_scenario`` inverts it exactly."""
    return "".join(f"{key} = {_toml_value(value)}\n" for key, value in sc.to_mapping().items())


# -- presets ------------------------------------------------------------------

_FIG1 = {"model": "classical", "s": 0.4, "gamma": 0.7, "L0": 1.0}
_FIG2 = {"model": "bertalanffy", "s": 0.4, "r": 0.9, "L0": 1.0, "Linf": 5.0}
_PRESET_DEFAULTS = {
    "alpha": 0.5,
    "t_end": 10.0,
    "samples": 400,
    "abs_tol": ORACLE_TOLERANCES.abs_tol,
    "rel_tol": ORACLE_TOLERANCES.rel_tol,
    "method": "both",
}

# alpha is not recoverable from the figure captions; 0.5 is an assumed default.
PRESETS = {
    "fig1a": {**_FIG1, **_PRESET_DEFAULTS, "n": 0.8, "k0": [1.0, 1.5, 2.0]},
    "fig1b": {**_FIG1, **_PRESET_DEFAULTS, "n": 1.2, "k0": [1.0, 5.0, 10.0]},
    "fig2a": {**_FIG2, **_PRESET_DEFAULTS, "n": 0.8, "k0": [1.0, 5.0, 10.0, 20.0]},
    "fig2b": {**_FIG2, **_PRESET_DEFAULTS, "n": 1.2, "k0": [1.0, 20.0, 50.0, 100.0]},
}


def preset_mapping(name: str) -> dict:
    if name not in PRESETS:
        raise ScenarioError(
            f"unknown preset {name!r}; valid presets: {', '.join(sorted(PRESETS))}", "preset"
        )
    doc = dict(PRESETS[name])
    doc["k0"] = list(doc["k0"])
    return doc


def preset(name: str, overrides: Mapping[str, Any] = None) -> Scenario:
    """Scenario for a figure preset, with optional key overrides."""
    doc = preset_mapping(name)
    doc.update(overrides or {})
    return scenario_from_mapping(doc)


def parse_override(text: str) -> tuple:
    """Split ``key=value``; values are read as TOML, else as bare strings.

    A comma-separated value such as ``k0=1,2,3`` becomes a list.
    """
    key, sep, raw = text.partition("=")
    key = key.strip()
    if not sep or not key:
        raise ScenarioError(f"override must look like key=value, got {text!r}")
    raw = raw.strip()
    if "," in raw and not raw.startswith("["):
        raw = "[" + raw + "]"
    try:
        value = tomllib.loads(f"v = {raw}")["v"]
    except tomllib.TOMLDecodeError:
        value = raw
    return key, value
