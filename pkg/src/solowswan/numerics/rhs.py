"""Right-hand sides of the capital-labor ratio equations.

The ``rhs_*`` functions are the reference point-wise forms. The
``*_problem`` builders close over the same expressions with constants
hoisted, for use inside the integrator loop.
"""

from __future__ import annotations

import math
from typing import Callable

from ..core import BertalanffyParams, ClassicalParams, intensive_f
from ..errors import DomainError
from .ode import OdeProblem

Intensive = Callable[[float], float]


def _check_state(k: float) -> None:
    if not k > 0.0:
        raise DomainError(f"capital-labor ratio must be positive, got {k!r}")


def rhs_general_classical(t: float, k: float, p: ClassicalParams, f: Intensive) -> float:
    """``s * L(t)**(n-1) * f(k) - gamma * k`` with exponential labor and any ``f``."""
    _check_state(k)
    n = p.production.n
    log_L = math.log(p.L0) + p.gamma * t
    return p.s * math.exp((n - 1.0) * log_L) * f(k) - p.gamma * k


def rhs_cobb_classical(t: float, k: float, p: ClassicalParams) -> float:
    _check_state(k)
    alpha, n = p.production.alpha, p.production.n
    return (
        p.s * math.exp((n - 1.0) * (math.log(p.L0) + p.gamma * t) + alpha * math.log(k))
        - p.gamma * k
    )


def _labor_bertalanffy(t: float, p: BertalanffyParams) -> float:
    return p.Linf - (p.Linf - p.L0) * math.exp(-p.r * t)


def rhs_general_bertalanffy(t: float, k: float, p: BertalanffyParams, f: Intensive) -> float:
    """``s * L(t)**(n-1) * f(k) - r * k * (Linf - L(t))`` with saturating labor."""
    _check_state(k)
    n = p.production.n
    L = _labor_bertalanffy(t, p)
    return p.s * math.exp((n - 1.0) * math.log(L)) * f(k) - p.r * k * (p.Linf - L)


def rhs_cobb_bertalanffy(t: float, k: float, p: BertalanffyParams) -> float:
    _check_state(k)
    alpha, n = p.production.alpha, p.production.n
    L = _labor_bertalanffy(t, p)
    gap = (p.Linf - p.L0) * math.exp(-p.r * t)
    return p.s * math.exp((n - 1.0) * math.log(L) + alpha * math.log(k)) - p.r * gap * k


def cobb_intensive(p) -> Intensive:
    production = p.production
    return lambda k: intensive_f(production, k)


def classical_problem(p: ClassicalParams, t_end: float) -> OdeProblem:
    alpha, n = p.production.alpha, p.production.n
    s, gamma = p.s, p.gamma
    c0 = (n - 1.0) * math.log(p.L0)
    c1 = (n - 1.0) * gamma
    exp, log = math.exp, math.log

    def rhs(t, k):
        if not k > 0.0:
            raise DomainError(f"capital-labor ratio must be positive, got {k!r}")
        return s * exp(c0 + c1 * t + alpha * log(k)) - gamma * k

    L0 = p.L0
    return OdeProblem(rhs, p.k0, (0.0, t_end), labor=lambda t: L0 * math.exp(gamma * t))


def bertalanffy_problem(p: BertalanffyParams, t_end: float) -> OdeProblem:
    alpha, n = p.production.alpha, p.production.n
    s, r, Linf = p.s, p.r, p.Linf
    gap0 = p.Linf - p.L0
    exp, log = math.exp, math.log

    def rhs(t, k):
        if not k > 0.0:
            raise DomainError(f"capital-labor ratio must be positive, got {k!r}")
        gap = gap0 * exp(-r * t)
        return s * exp((n - 1.0) * log(Linf - gap) + alpha * log(k)) - r * gap * k

    return OdeProblem(rhs, p.k0, (0.0, t_end), labor=lambda t: Linf - gap0 * math.exp(-r * t))
