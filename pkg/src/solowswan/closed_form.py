"""Exact solutions for the capital-labor ratio under Cobb-Douglas production.

Both models reduce to a Bernoulli equation ``k' = a(t) k**alpha - b(t) k``
that the substitution ``v = k**(1 - alpha)`` turns linear. Results are
assembled in log space: ``ln k = ln v / (1 - alpha)``.

Branches are chosen by exact comparison of ``alpha`` and ``n`` with 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence, Union

import numpy as np

from .core import BertalanffyParams, ClassicalParams, CobbDouglas, Tolerances, Trajectory
from .errors import DomainError, NumericalError, PositivityError, SolowSwanError
from .numerics.hypergeometric import hyp2f1
from .numerics.quadrature import quad_adaptive, quad_cumulative

__all__ = [
    "ClosedFormBranch",
    "select_branch",
    "labor_exponential",
    "labor_bertalanffy",
    "log_k_classical",
    "k_classical",
    "k_classical_alpha1",
    "script_L",
    "log_k_bertalanffy",
    "k_bertalanffy",
    "k_bertalanffy_alpha1",
    "k_bertalanffy_alpha1_hyp2f1",
    "HypergeometricCheck",
    "cross_check_alpha1_hyp2f1",
    "trajectory_closed_form",
]

Model = Union[ClassicalParams, BertalanffyParams]


@dataclass(frozen=True)
class ClosedFormBranch:
    tag: str
    rule: str


def select_branch(production: CobbDouglas) -> ClosedFormBranch:
    alpha, n = production.alpha, production.n
    if alpha == 1.0:
        return ClosedFormBranch("alpha_one", "alpha == 1: linear equation in k")
    if n == 1.0:
        return ClosedFormBranch("n_one", "n == 1, alpha != 1: constant returns to scale")
    return ClosedFormBranch("general", "n != 1 and alpha != 1")


def _check_time(t: float) -> float:
    t = float(t)
    if not t >= 0.0:
        raise DomainError(f"time must be non-negative, got {t!r}")
    return t


def _exp_or_error(log_k: float, t: float) -> float:
    try:
        return math.exp(log_k)
    except OverflowError:
        raise NumericalError(f"capital-labor ratio overflows at t={t!r} (ln k = {log_k!r})")


# -- labor laws ---------------------------------------------------------------


def labor_exponential(t: float, p: ClassicalParams) -> float:
    return p.L0 * math.exp(p.gamma * _check_time(t))


def labor_bertalanffy(t: float, p: BertalanffyParams) -> float:
    return p.Linf - (p.Linf - p.L0) * math.exp(-p.r * _check_time(t))


# -- exponential labor --------------------------------------------------------


def _log_k_classical_general(t: float, p: ClassicalParams) -> float:
    alpha, beta, n = p.production.alpha, p.production.beta, p.production.n
    if beta == 0.0:
        raise DomainError("beta must be non-zero for the general exponential-labor solution")
    q = 1.0 - alpha
    x = p.gamma * beta * t
    # bracket = A * expm1(x) + k0**q, with A > 0 whenever alpha < 1
    A = p.s * q * math.exp((n - 1.0) * math.log(p.L0)) / (p.gamma * beta)
    log_c = q * math.log(p.k0)
    if x > 30.0 and A > 0.0:
        log_bracket = x + math.log(A + (math.exp(log_c) - A) * math.exp(-x))
    else:
        # bracket - 1 kept separate so alpha -> 1 does not lose digits
        excess = A * math.expm1(x) + math.expm1(log_c)
        if not excess > -1.0:
            raise PositivityError(f"solution left positive domain at t={t!r}", t=t)
        log_bracket = math.log1p(excess)
    return (-q * p.gamma * t + log_bracket) / q


def _log_k_classical_alpha1(t: float, p: ClassicalParams) -> float:
    n, gamma = p.production.n, p.gamma
    if n == 1.0:
        growth = p.s * t
    else:
        x = (n - 1.0) * gamma * t
        growth = p.s * math.exp((n - 1.0) * math.log(p.L0)) * math.expm1(x) / ((n - 1.0) * gamma)
    return math.log(p.k0) + growth - gamma * t


def log_k_classical(t: float, p: ClassicalParams) -> float:
    """Natural log of the exponential-labor ratio; dispatches on ``alpha``."""
    t = _check_time(t)
    if p.production.alpha == 1.0:
        return _log_k_classical_alpha1(t, p)
    return _log_k_classical_general(t, p)


def k_classical(t: float, p: ClassicalParams) -> float:
    """Capital-labor ratio with exponential labor growth.

    For ``alpha != 1``::

        k = (exp((alpha-1) gamma t) * [s (1-alpha) L0**(n-1) expm1(gamma beta t)
             / (gamma beta) + k0**(1-alpha)]) ** (1/(1-alpha))

    ``alpha == 1`` is forwarded to :func:`k_classical_alpha1`. The same
    expression covers ``n == 1``.
    """
    t = _check_time(t)
    return _exp_or_error(log_k_classical(t, p), t)


def k_classical_alpha1(t: float, p: ClassicalParams) -> float:
    """``k0 * exp(s L0**(n-1) expm1((n-1) gamma t) / ((n-1) gamma) - gamma t)``.

    The growth rate ``gamma`` appears in both the inner exponent and the
    denominator; that is the form that satisfies ``k' = s L(t)**(n-1) k - gamma k``.
    """
    if p.production.alpha != 1.0:
        raise DomainError(f"k_classical_alpha1 requires alpha == 1, got {p.production.alpha!r}")
    t = _check_time(t)
    return _exp_or_error(_log_k_classical_alpha1(t, p), t)


# -- saturating labor ---------------------------------------------------------


def _script_L_factory(p: BertalanffyParams):
    alpha, n = p.production.alpha, p.production.n
    s, r, Linf = p.s, p.r, p.Linf
    gap0 = p.Linf - p.L0
    exp, log = math.exp, math.log

    def integrand(tau):
        gap = gap0 * exp(-r * tau)
        return s * exp((n - 1.0) * log(Linf - gap) + (alpha - 1.0) * gap)

    return integrand


def script_L(tau: float, p: BertalanffyParams) -> float:
    """Integrand of the saturating-labor solution.

    Evaluated as ``s * L(tau)**(n-1) * exp((alpha-1) (Linf-L0) exp(-r tau))``,
    which equals the quotient form
    ``s L**n exp(r tau + (alpha-1)(Linf-L0) e**(-r tau)) / (Linf (e**(r tau) - 1) + L0)``
    because ``Linf (e**(r tau) - 1) + L0 = e**(r tau) L(tau)``.
    """
    return _script_L_factory(p)(_check_time(tau))


def _log_k_bertalanffy_general(t: float, p: BertalanffyParams, integral: float) -> float:
    alpha = p.production.alpha
    q = 1.0 - alpha
    gap0 = p.Linf - p.L0
    excess = math.expm1(q * (math.log(p.k0) - gap0)) + q * integral
    if not excess > -1.0:
        raise PositivityError(f"solution left positive domain at t={t!r}", t=t)
    return (q * gap0 * math.exp(-p.r * t) + math.log1p(excess)) / q


def _log_k_bertalanffy_alpha1(t: float, p: BertalanffyParams, labor_integral: float) -> float:
    gap0 = p.Linf - p.L0
    return math.log(p.k0) + p.s * labor_integral + gap0 * math.expm1(-p.r * t)


def _labor_power_factory(p: BertalanffyParams):
    n, r, Linf = p.production.n, p.r, p.Linf
    gap0 = p.Linf - p.L0
    exp, log = math.exp, math.log
    return lambda tau: exp((n - 1.0) * log(Linf - gap0 * exp(-r * tau)))


def log_k_bertalanffy(t: float, p: BertalanffyParams, tol: Tolerances = Tolerances()) -> float:
    t = _check_time(t)
    if p.production.alpha == 1.0:
        integral = quad_adaptive(_labor_power_factory(p), 0.0, t, tol).value
        return _log_k_bertalanffy_alpha1(t, p, integral)
    integral = quad_adaptive(_script_L_factory(p), 0.0, t, tol).value
    return _log_k_bertalanffy_general(t, p, integral)


def k_bertalanffy(t: float, p: BertalanffyParams, tol: Tolerances = Tolerances()) -> float:
    """Capital-labor ratio with saturating labor, for ``alpha != 1``.

    ``k**(1-alpha) = exp((1-alpha) (Linf-L0) e**(-r t))
    * [k0**(1-alpha) exp(-(1-alpha)(Linf-L0)) + (1-alpha) int_0^t script_L]``,
    with the integral from adaptive quadrature to ``tol``. ``alpha == 1``
    is forwarded to :func:`k_bertalanffy_alpha1`.
    """
    t = _check_time(t)
    return _exp_or_error(log_k_bertalanffy(t, p, tol), t)


def k_bertalanffy_alpha1(t: float, p: BertalanffyParams, tol: Tolerances = Tolerances()) -> float:
    """``k0 * exp(s int_0^t L**(n-1) + (Linf-L0)(e**(-r t) - 1))`` for ``alpha == 1``."""
    if p.production.alpha != 1.0:
        raise DomainError(f"k_bertalanffy_alpha1 requires alpha == 1, got {p.production.alpha!r}")
    return k_bertalanffy(t, p, tol)


def k_bertalanffy_alpha1_hyp2f1(t: float, p: BertalanffyParams) -> float:
    """The ``alpha == 1`` solution written with Gauss hypergeometric functions.

    Both arguments, ``Linf / (Linf - L0)`` and ``e**(r t) Linf / (Linf - L0)``,
    stay below 1 only for declining labor (``L0 > Linf``); otherwise the
    hypergeometric evaluator raises ``DomainError``.
    """
    t = _check_time(t)
    n, s, r = p.production.n, p.s, p.r
    if p.production.alpha != 1.0:
        raise DomainError("the hypergeometric form only applies for alpha == 1")
    if n == 1.0:
        raise DomainError("the hypergeometric form is singular at n == 1")
    gap0 = p.Linf - p.L0
    if gap0 == 0.0:
        raise DomainError("the hypergeometric form is singular for constant labor")
    a = 1.0 - n
    c = 2.0 - n
    z0 = p.Linf / gap0
    zt = math.exp(r * t) * p.Linf / gap0
    base0 = -p.L0 / gap0
    baset = 1.0 - zt
    if base0 <= 0.0 or baset <= 0.0:
        raise DomainError("hypergeometric form needs real powers; labor must be declining")
    at_zero = p.L0 ** (n - 1.0) * base0 ** a * hyp2f1(a, a, c, z0)
    at_t = baset ** a * (p.Linf - gap0 * math.exp(-r * t)) ** (n - 1.0) * hyp2f1(a, a, c, zt)
    log_k = (
        math.log(p.k0)
        + gap0 * math.expm1(-r * t)
        + s * (at_zero - at_t) / ((n - 1.0) * r)
    )
    return _exp_or_error(log_k, t)


class HypergeometricCheck(NamedTuple):
    status: str  # "agree", "disagree" or "skipped"
    primary: float
    secondary: Optional[float]
    detail: str


def cross_check_alpha1_hyp2f1(
    t: float, p: BertalanffyParams, tol: Tolerances = Tolerances(), rel: float = 1e-8
) -> HypergeometricCheck:
    """Compare the quadrature and hypergeometric forms at ``alpha == 1``.

    Outside the real domain of the hypergeometric evaluator the check is
    reported as skipped, never as a failure.
    """
    primary = k_bertalanffy_alpha1(t, p, tol)
    try:
        secondary = k_bertalanffy_alpha1_hyp2f1(t, p)
    except DomainError as exc:
        return HypergeometricCheck("skipped", primary, None, str(exc))
    deviation = abs(secondary - primary) / abs(primary)
    status = "agree" if deviation <= rel else "disagree"
    return HypergeometricCheck(status, primary, secondary, f"relative deviation {deviation:.3g}")


# -- trajectories -------------------------------------------------------------


def _annotate(exc: SolowSwanError, t: float) -> SolowSwanError:
    message = str(exc) if "t=" in str(exc) else f"{exc} (at t={t!r})"
    annotated = type(exc)(message)
    annotated.__dict__.update(exc.__dict__)
    if getattr(annotated, "t", t) is None:
        annotated.t = t
    return annotated


def trajectory_closed_form(
    model: Model, grid: Sequence[float], tol: Tolerances = Tolerances()
) -> Trajectory:
    """Sample the exact solution of either model on ``grid``.

    For saturating labor the integral is accumulated panel by panel
    between grid points, so the whole path costs one pass of quadrature.
    """
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1:
        raise DomainError("grid must be one-dimensional")
    if len(grid) and grid[0] < 0.0:
        raise DomainError("grid times must be non-negative")
    if np.any(np.diff(grid) <= 0.0):
        raise DomainError("grid must be strictly increasing")

    log_k = np.empty(len(grid))
    if isinstance(model, ClassicalParams):
        with np.errstate(over="ignore"):
            L = model.L0 * np.exp(model.gamma * grid)
        if not np.all(np.isfinite(L)):
            bad = float(grid[np.argmin(np.isfinite(L))])
            raise NumericalError(f"labor overflows at t={bad!r}")
        for i, t in enumerate(grid):
            try:
                log_k[i] = log_k_classical(t, model)
            except SolowSwanError as exc:
                raise _annotate(exc, float(t)) from exc
    elif isinstance(model, BertalanffyParams):
        L = model.Linf - (model.Linf - model.L0) * np.exp(-model.r * grid)
        alpha1 = model.production.alpha == 1.0
        g = _labor_power_factory(model) if alpha1 else _script_L_factory(model)
        nodes = np.concatenate(([0.0], grid)) if len(grid) and grid[0] > 0.0 else grid
        try:
            integrals = quad_cumulative(g, nodes, tol)
        except SolowSwanError as exc:
            raise _annotate(exc, float(grid[-1])) from exc
        if len(nodes) != len(grid):
            integrals = integrals[1:]
        for i, t in enumerate(grid):
            try:
                if alpha1:
                    log_k[i] = _log_k_bertalanffy_alpha1(t, model, integrals[i])
                else:
                    log_k[i] = _log_k_bertalanffy_general(t, model, integrals[i])
            except SolowSwanError as exc:
                raise _annotate(exc, float(t)) from exc
    else:
        raise DomainError(f"unsupported model type {type(model).__name__}")

    with np.errstate(over="ignore"):
        k = np.exp(log_k)
        K = k * L
    if not (np.all(np.isfinite(k)) and np.all(np.isfinite(K))):
        bad = float(grid[np.argmin(np.isfinite(K))])
        raise NumericalError(f"capital overflows at t={bad!r}")
    return Trajectory.from_ratio(grid, k, L, "closed_form")
