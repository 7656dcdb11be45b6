"""Domain types and the Cobb-Douglas production function.

Every power law is evaluated in log space, so extreme capital or labor
values underflow or overflow only when the true result does.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import DomainError

__all__ = [
    "CobbDouglas",
    "ClassicalParams",
    "BertalanffyParams",
    "Tolerances",
    "Trajectory",
    "HomogeneityCheck",
    "InadaCondition",
    "InadaReport",
    "evaluate_F",
    "intensive_f",
    "log_F",
    "check_homogeneity",
    "check_inada",
]


def _finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class CobbDouglas:
    """Cobb-Douglas technology ``F(K, L) = K**alpha * L**beta``.

    The homogeneity degree ``n = alpha + beta`` selects decreasing
    (``n < 1``), constant (``n == 1``) or increasing (``n > 1``) returns.

    With ``strict=False`` only ``alpha > 0`` is enforced. The exact
    solutions stay meaningful for exponents outside the textbook ranges
    (for instance ``alpha = 1`` with ``n < 1``), which is how the
    degenerate branches are exercised.
    """

    alpha: float
    beta: float
    strict: bool = field(default=True, repr=False, compare=False)

    def __post_init__(self):
        alpha = _finite("alpha", self.alpha)
        beta = _finite("beta", self.beta)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        if self.strict:
            if not 0.0 < alpha <= 1.0:
                raise DomainError(f"alpha must lie in (0, 1], got {alpha!r}")
            if not 0.0 < beta <= 1.0:
                raise DomainError(f"beta must lie in (0, 1], got {beta!r}")
        elif alpha <= 0.0:
            raise DomainError(f"alpha must be positive, got {alpha!r}")

    @classmethod
    def from_degree(cls, alpha: float, n: float, strict: bool = True) -> "CobbDouglas":
        """Build from the capital exponent and the homogeneity degree."""
        return cls(alpha, float(n) - float(alpha), strict=strict)

    @property
    def n(self) -> float:
        return self.alpha + self.beta

    @property
    def returns_to_scale(self) -> str:
        if self.n < 1.0:
            return "decreasing"
        if self.n > 1.0:
            return "increasing"
        return "constant"


@dataclass(frozen=True)
class ClassicalParams:
    """Exponential labor growth ``L(t) = L0 * exp(gamma * t)``."""

    production: CobbDouglas
    s: float
    gamma: float
    L0: float
    k0: float

    def __post_init__(self):
        for name in ("s", "gamma", "L0", "k0"):
            object.__setattr__(self, name, _finite(name, getattr(self, name)))
        # s = 0 is admitted: it is the pure-decay limit used as a sanity case.
        if self.s < 0.0:
            raise DomainError(f"s must be non-negative, got {self.s!r}")
        for name in ("gamma", "L0", "k0"):
            if getattr(self, name) <= 0.0:
                raise DomainError(f"{name} must be positive, got {getattr(self, name)!r}")


@dataclass(frozen=True)
class BertalanffyParams:
    """Saturating labor ``L(t) = Linf - (Linf - L0) * exp(-r * t)``.

    ``strict=False`` lifts the ``L0 <= Linf`` restriction so declining
    labor (``L0 > Linf``) can be studied.
    """

    production: CobbDouglas
    s: float
    r: float
    Linf: float
    L0: float
    k0: float
    strict: bool = field(default=True, repr=False, compare=False)

    def __post_init__(self):
        for name in ("s", "r", "Linf", "L0", "k0"):
            object.__setattr__(self, name, _finite(name, getattr(self, name)))
        if self.s < 0.0:
            raise DomainError(f"s must be non-negative, got {self.s!r}")
        for name in ("r", "Linf", "L0", "k0"):
            if getattr(self, name) <= 0.0:
                raise DomainError(f"{name} must be positive, got {getattr(self, name)!r}")
        if self.strict and self.L0 > self.Linf:
            raise DomainError(f"L0 must not exceed Linf, got L0={self.L0!r} > Linf={self.Linf!r}")


@dataclass(frozen=True)
class Tolerances:
    abs_tol: float = 1e-10
    rel_tol: float = 1e-8

    def __post_init__(self):
        for name in ("abs_tol", "rel_tol"):
            value = _finite(name, getattr(self, name))
            if value <= 0.0:
                raise DomainError(f"{name} must be strictly positive, got {value!r}")
            object.__setattr__(self, name, value)

    def bound(self, magnitude: float) -> float:
        """Error budget for a quantity of the given magnitude."""
        return max(self.abs_tol, self.rel_tol * abs(magnitude))


ORACLE_TOLERANCES = Tolerances(abs_tol=1e-12, rel_tol=1e-10)

METHODS = ("closed_form", "integrated")


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Sampled capital-labor path with labor and capital alongside."""

    times: np.ndarray
    k: np.ndarray
    L: np.ndarray
    K: np.ndarray
    method: str

    def __post_init__(self):
        arrays = {}
        for name in ("times", "k", "L", "K"):
            arr = np.array(getattr(self, name), dtype=float)
            if arr.ndim != 1:
                raise DomainError(f"{name} must be one-dimensional")
            arr.setflags(write=False)
            arrays[name] = arr
            object.__setattr__(self, name, arr)
        lengths = {len(a) for a in arrays.values()}
        if len(lengths) > 1:
            raise DomainError("trajectory series differ in length")
        if self.method not in METHODS:
            raise DomainError(f"method must be one of {METHODS}, got {self.method!r}")
        if np.any(np.diff(self.times) <= 0.0):
            raise DomainError("trajectory times must be strictly increasing")
        for name in ("k", "L", "K"):
            arr = arrays[name]
            if not np.all(np.isfinite(arr) & (arr > 0.0)):
                raise DomainError(f"trajectory {name} samples must be finite and positive")

    def __len__(self):
        return len(self.times)

    @classmethod
    def from_ratio(cls, times, k, L, method: str) -> "Trajectory":
        k = np.asarray(k, dtype=float)
        L = np.asarray(L, dtype=float)
        return cls(times, k, L, k * L, method)


# -- production function ------------------------------------------------------


def _require_positive(**values: float) -> None:
    for name, value in values.items():
        if not value > 0.0:
            raise DomainError(f"{name} must be positive, got {value!r}")


def log_F(p: CobbDouglas, K: float, L: float) -> float:
    _require_positive(K=K, L=L)
    return p.alpha * math.log(K) + p.beta * math.log(L)


def evaluate_F(p: CobbDouglas, K: float, L: float) -> float:
    """Output ``K**alpha * L**beta`` for positive capital and labor."""
    return math.exp(log_F(p, K, L))


def intensive_f(p: CobbDouglas, k: float) -> float:
    """Output per unit labor, ``f(k) = F(k, 1) = k**alpha``."""
    _require_positive(k=k)
    return math.exp(p.alpha * math.log(k))


class HomogeneityCheck(NamedTuple):
    passed: bool
    residual: float


def check_homogeneity(
    p: CobbDouglas, K: float, L: float, lam: float, tol: Tolerances = Tolerances()
) -> HomogeneityCheck:
    """Test ``F(lam*K, lam*L) = lam**n * F(K, L)`` in log space."""
    _require_positive(lam=lam)
    lhs = log_F(p, lam * K, lam * L)
    rhs = p.n * math.log(lam) + log_F(p, K, L)
    residual = abs(lhs - rhs)
    return HomogeneityCheck(residual <= tol.bound(rhs), residual)


# -- Inada conditions ---------------------------------------------------------


@dataclass(frozen=True)
class InadaCondition:
    name: str
    probe: tuple
    passed: bool
    value: float
    note: str = ""


@dataclass(frozen=True)
class InadaReport:
    conditions: tuple

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.conditions)

    def failures(self) -> list:
        return [c for c in self.conditions if not c.passed]

    def by_name(self, name: str) -> list:
        return [c for c in self.conditions if c.name == name]

    def format(self) -> str:
        lines = []
        for c in self.conditions:
            status = "pass" if c.passed else "FAIL"
            extra = f"  ({c.note})" if c.note else ""
            lines.append(f"{status}  {c.name} at {c.probe}: {c.value:.6g}{extra}")
        return "\n".join(lines)


_EPS = np.finfo(float).eps
_ZERO_LADDER = tuple(10.0 ** -j for j in range(1, 7))
_INF_LADDER = tuple(10.0 ** j for j in range(1, 7))
_VARS = ("K", "L")


def _partials(p: CobbDouglas, K: float, L: float, h: float):
    """Central-difference gradient and own second derivatives at (K, L).

    Steps are relative (``h * x``) so probes close to zero stay inside the
    positive quadrant. Returns ``(grad, hess_diag, noise)`` where ``noise``
    bounds the round-off floor of each second difference.
    """
    point = [K, L]
    F0 = evaluate_F(p, K, L)
    grad, hess, noise = [], [], []
    for i in range(2):
        step = h * point[i]
        up = list(point)
        dn = list(point)
        up[i] += step
        dn[i] -= step
        Fu = evaluate_F(p, *up)
        Fd = evaluate_F(p, *dn)
        grad.append((Fu - Fd) / (2.0 * step))
        hess.append((Fu - 2.0 * F0 + Fd) / step**2)
        noise.append(64.0 * _EPS * max(abs(Fu), abs(F0), abs(Fd)) / step**2)
    return grad, hess, noise


def _strictly_monotone(values: Sequence[float], increasing: bool, margin: float = 1e-6) -> bool:
    pairs = zip(values, values[1:])
    if increasing:
        return all(b > a * (1.0 + margin) for a, b in pairs)
    return all(b < a * (1.0 - margin) for a, b in pairs)


def check_inada(
    p: CobbDouglas,
    probe_points: Iterable[tuple] = ((1.0, 1.0),),
    h: float = 1e-5,
) -> InadaReport:
    """Numerically audit the Inada conditions at each probe point.

    Checks at every probe, for both inputs: positive marginal product,
    negative own second derivative, marginal product growing along the
    ladder ``x = 1e-1 .. 1e-6`` and shrinking along ``x = 1e1 .. 1e6``
    (the other input held at the probe value). Limits are judged as
    monotone trends over the ladders, not true limits.

    The mixed partial of Cobb-Douglas is positive for every admissible
    exponent, so it is reported as informational and never fails the audit.
    """
    if not h > 0.0:
        raise DomainError(f"finite-difference step must be positive, got {h!r}")
    conditions = []
    for probe in probe_points:
        K, L = (float(x) for x in probe)
        _require_positive(K=K, L=L)
        grad, hess, noise = _partials(p, K, L, h)
        for i, var in enumerate(_VARS):
            conditions.append(
                InadaCondition(f"dF/d{var} > 0", (K, L), grad[i] > 0.0, grad[i])
            )
            concave = hess[i] < -noise[i]
            note = "" if concave else "not strictly concave in " + var
            conditions.append(
                InadaCondition(f"d2F/d{var}2 < 0", (K, L), concave, hess[i], note)
            )
        mixed = p.alpha * p.beta * evaluate_F(p, K, L) / (K * L)
        conditions.append(
            InadaCondition(
                "d2F/dKdL (informational)", (K, L), True, mixed,
                "mixed partial is positive for Cobb-Douglas",
            )
        )
        for i, var in enumerate(_VARS):
            for ladder, increasing, label in (
                (_ZERO_LADDER, True, f"dF/d{var} -> +inf as {var} -> 0+"),
                (_INF_LADDER, False, f"dF/d{var} -> 0 as {var} -> inf"),
            ):
                trend = []
                for x in ladder:
                    point = [K, L]
                    point[i] = x
                    trend.append(_partials(p, *point, h)[0][i])
                ok = _strictly_monotone(trend, increasing)
                conditions.append(
                    InadaCondition(
                        label, (K, L), ok, trend[-1],
                        "" if ok else "marginal product not monotone along ladder",
                    )
                )
    return InadaReport(tuple(conditions))
