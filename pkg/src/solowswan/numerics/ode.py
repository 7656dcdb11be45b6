"""Adaptive Dormand-Prince 5(4) integrator for scalar non-stiff problems.

The fifth-order solution is propagated (local extrapolation), the
embedded fourth-order solution supplies the error estimate, and a PI
controller picks the next step. Output at requested times comes from the
fourth-order continuous extension, so the step sequence is never
perturbed by the output grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from ..core import Tolerances, Trajectory
from ..errors import BlowUpError, DomainError, NumericalError, PositivityError

__all__ = ["OdeProblem", "IntegrationReport", "integrate"]

# Butcher tableau
C2, C3, C4, C5 = 1 / 5, 3 / 10, 4 / 5, 8 / 9
A21 = 1 / 5
A31, A32 = 3 / 40, 9 / 40
A41, A42, A43 = 44 / 45, -56 / 15, 32 / 9
A51, A52, A53, A54 = 19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729
A61, A62, A63, A64, A65 = 9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656
A71, A73, A74, A75, A76 = 35 / 384, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84

# difference between the fifth- and fourth-order weights
E1, E3, E4, E5, E6, E7 = (
    71 / 57600, -71 / 16695, 71 / 1920, -17253 / 339200, 22 / 525, -1 / 40,
)

# continuous extension
D1 = -12715105075 / 11282082432
D3 = 87487479700 / 32700410799
D4 = -10690763975 / 1880347072
D5 = 701980252875 / 199316789632
D6 = -1453857185 / 822651844
D7 = 69997945 / 29380423

SAFETY = 0.9
FAC_MIN, FAC_MAX = 0.2, 10.0
BETA = 0.04
EXPO = 0.2 - 0.75 * BETA
HUGE = 1e300


@dataclass(frozen=True)
class OdeProblem:
    """Scalar Cauchy problem ``k' = rhs(t, k)``, ``k(0) = k0`` on ``t_span``.

    ``labor`` optionally maps time to labor so the trajectory can carry
    ``L`` and ``K = k * L``; without it labor is reported as 1.
    """

    rhs: Callable[[float, float], float]
    k0: float
    t_span: tuple
    labor: Optional[Callable[[float], float]] = None

    def __post_init__(self):
        t0, t_end = (float(x) for x in self.t_span)
        object.__setattr__(self, "t_span", (t0, t_end))
        if not self.k0 > 0.0:
            raise DomainError(f"k0 must be positive, got {self.k0!r}")
        if t0 != 0.0:
            raise DomainError("problems start at t = 0")
        if not t_end > 0.0:
            raise DomainError(f"t_end must be positive, got {t_end!r}")


@dataclass(frozen=True)
class IntegrationReport:
    trajectory: Trajectory
    steps_accepted: int
    steps_rejected: int
    max_error_estimate: float


def _initial_step(f, t0, y0, f0, t_end, atol, rtol):
    sc = max(atol, rtol * abs(y0))
    d0 = abs(y0) / sc
    d1 = abs(f0) / sc
    h0 = 1e-6 if d0 < 1e-5 or d1 < 1e-5 else 0.01 * d0 / d1
    h0 = min(h0, t_end - t0)
    try:
        f1 = f(t0 + h0, y0 + h0 * f0)
        d2 = abs(f1 - f0) / sc / h0
    except (DomainError, OverflowError):
        return 1e-3 * h0
    if max(d1, d2) <= 1e-15:
        h1 = max(1e-6, 1e-3 * h0)
    else:
        h1 = (0.01 / max(d1, d2)) ** 0.2
    return min(100 * h0, h1, t_end - t0)


def integrate(
    problem: OdeProblem,
    grid: Sequence[float],
    tol: Tolerances = Tolerances(),
    *,
    fixed_step: Optional[float] = None,
    max_steps: int = 1_000_000,
) -> IntegrationReport:
    """Integrate ``problem`` and sample the solution at ``grid``.

    A step is accepted when its local error estimate is at most
    ``max(abs_tol, rel_tol * |k|)``. ``fixed_step`` disables error control
    (used to measure the order of the scheme).

    Raises ``BlowUpError`` when the solution overflows or the step size
    drops below ``1e-14 * t_end``, and ``PositivityError`` when the
    solution leaves ``k > 0``.
    """
    f = problem.rhs
    t0, t_end = problem.t_span
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1:
        raise DomainError("output grid must be one-dimensional")
    if len(grid) and (grid[0] < t0 or grid[-1] > t_end):
        raise DomainError(f"output grid must lie inside [{t0}, {t_end}]")
    if np.any(np.diff(grid) <= 0.0):
        raise DomainError("output grid must be strictly increasing")

    atol, rtol = tol.abs_tol, tol.rel_tol
    out = np.empty(len(grid))
    idx = 0
    while idx < len(grid) and grid[idx] == t0:
        out[idx] = problem.k0
        idx += 1

    t, y = t0, float(problem.k0)
    k1 = f(t, y)
    h_min = 1e-14 * t_end
    if fixed_step is not None:
        if not fixed_step > 0.0:
            raise DomainError("fixed_step must be positive")
        h = fixed_step
    else:
        h = _initial_step(f, t, y, k1, t_end, atol, rtol)
    err_old = 1e-4
    accepted = rejected = 0
    max_rel_err = 0.0
    last_reject = False
    domain_trouble = False

    while t < t_end:
        if accepted + rejected >= max_steps:
            raise NumericalError(f"step budget of {max_steps} exhausted at t={t!r}")
        if h < h_min and fixed_step is None:
            if domain_trouble:
                raise PositivityError(f"solution left k > 0 near t={t!r}", t=t)
            raise BlowUpError(f"step size underflow at t={t!r} (h={h!r}); solution blows up", t=t)
        final = t + 1.01 * h >= t_end
        if final:
            h = t_end - t

        try:
            k2 = f(t + C2 * h, y + h * A21 * k1)
            k3 = f(t + C3 * h, y + h * (A31 * k1 + A32 * k2))
            k4 = f(t + C4 * h, y + h * (A41 * k1 + A42 * k2 + A43 * k3))
            k5 = f(t + C5 * h, y + h * (A51 * k1 + A52 * k2 + A53 * k3 + A54 * k4))
            k6 = f(t + h, y + h * (A61 * k1 + A62 * k2 + A63 * k3 + A64 * k4 + A65 * k5))
            y_new = y + h * (A71 * k1 + A73 * k3 + A74 * k4 + A75 * k5 + A76 * k6)
            k7 = f(t + h, y_new)
        except DomainError:
            if fixed_step is not None:
                raise PositivityError(f"solution left k > 0 near t={t!r}", t=t)
            domain_trouble = True
            rejected += 1
            h *= 0.25
            last_reject = True
            continue
        except OverflowError:
            y_new = math.inf
            k7 = math.inf

        if not (math.isfinite(y_new) and math.isfinite(k7)) or abs(y_new) > HUGE:
            if fixed_step is not None:
                raise BlowUpError(f"solution overflowed near t={t!r}", t=t)
            rejected += 1
            h *= 0.25
            last_reject = True
            continue

        err_abs = abs(h * (E1 * k1 + E3 * k3 + E4 * k4 + E5 * k5 + E6 * k6 + E7 * k7))
        sc = max(atol, rtol * max(abs(y), abs(y_new)))
        err = err_abs / sc

        if fixed_step is None and err > 1.0:
            fac = max(1.0 / FAC_MAX, min(1.0 / FAC_MIN, err ** EXPO / SAFETY))
            h /= fac
            rejected += 1
            last_reject = True
            continue

        if y_new <= 0.0:
            if fixed_step is not None:
                raise PositivityError(f"solution left k > 0 at t={t + h!r}", t=t + h)
            domain_trouble = True
            rejected += 1
            h *= 0.25
            last_reject = True
            continue

        t_new = t_end if final else t + h
        while idx < len(grid) and grid[idx] <= t_new:
            theta = (grid[idx] - t) / h
            diff = y_new - y
            bspl = h * k1 - diff
            r4 = diff - h * k7 - bspl
            r5 = h * (D1 * k1 + D3 * k3 + D4 * k4 + D5 * k5 + D6 * k6 + D7 * k7)
            value = y + theta * (diff + (1.0 - theta) * (bspl + theta * (r4 + (1.0 - theta) * r5)))
            if not value > 0.0:
                raise PositivityError(f"solution left k > 0 near t={grid[idx]!r}", t=grid[idx])
            out[idx] = value
            idx += 1

        accepted += 1
        max_rel_err = max(max_rel_err, err_abs / max(abs(y_new), atol / rtol))
        t, y, k1 = t_new, y_new, k7
        domain_trouble = False

        if fixed_step is None:
            err = max(err, 1e-10)
            fac = err ** EXPO / err_old ** BETA
            fac = max(1.0 / FAC_MAX, min(1.0 / FAC_MIN, fac / SAFETY))
            h_next = h / fac
            if last_reject:
                h_next = min(h_next, h)
            err_old = err
            h = h_next
        last_reject = False

    labor = problem.labor
    L = np.array([labor(x) for x in grid]) if labor is not None else np.ones(len(grid))
    trajectory = Trajectory.from_ratio(grid, out, L, "integrated")
    return IntegrationReport(trajectory, accepted, rejected, max_rel_err)
