"""Gauss hypergeometric function 2F1 on the real line left of the branch point."""

from __future__ import annotations

import math

from ..errors import ConvergenceError, DomainError

__all__ = ["hyp2f1", "hyp2f1_series", "hyp2f1_pfaff", "hyp2f1_euler"]

MAX_TERMS = 10_000
SERIES_RADIUS = 0.5


def _check_c(c: float) -> None:
    if c <= 0.0 and c == math.floor(c):
        raise DomainError(f"c must not be a non-positive integer, got {c!r}")


def hyp2f1_series(a: float, b: float, c: float, z: float, max_terms: int = MAX_TERMS) -> float:
    """Sum the Gauss series directly; valid for ``|z| < 1``.

    Terminates when a term drops below ``1e-16`` of the partial sum or the
    series is a polynomial (``a`` or ``b`` a non-positive integer).
    """
    _check_c(c)
    if not abs(z) < 1.0:
        raise DomainError(f"Gauss series diverges at |z| >= 1, got z={z!r}")
    term = 1.0
    running = 1.0
    terms = [1.0]
    for m in range(max_terms):
        term *= (a + m) * (b + m) / ((c + m) * (m + 1)) * z
        if term == 0.0:
            return math.fsum(terms)
        terms.append(term)
        running += term
        if abs(term) < 1e-16 * abs(running):
            return math.fsum(terms)
    estimate = math.fsum(terms)
    raise ConvergenceError(
        f"2F1({a}, {b}; {c}; {z}) series did not converge in {max_terms} terms",
        estimate=estimate,
        error=abs(term),
    )


def hyp2f1_pfaff(a: float, b: float, c: float, z: float) -> float:
    """``(1 - z)**(-a) * 2F1(a, c - b; c; z / (z - 1))``."""
    if not z < 1.0:
        raise DomainError(f"Pfaff transformation needs z < 1, got z={z!r}")
    return (1.0 - z) ** (-a) * hyp2f1_series(a, c - b, c, z / (z - 1.0))


def hyp2f1_euler(a: float, b: float, c: float, z: float) -> float:
    """``(1 - z)**(c - a - b) * 2F1(c - a, c - b; c; z)``."""
    if not z < 1.0:
        raise DomainError(f"Euler transformation needs z < 1, got z={z!r}")
    return (1.0 - z) ** (c - a - b) * hyp2f1_series(c - a, c - b, c, z)


def hyp2f1(a: float, b: float, c: float, z: float) -> float:
    """Real ``2F1(a, b; c; z)`` for ``z < 1``.

    Near the origin the series is summed directly. For ``z < -1/2`` the
    Pfaff transformation maps the argument into ``(1/3, 1)``, where the
    series converges; for ``1/2 < z < 1`` the series is summed in place.

    ``z >= 1`` raises ``DomainError``: the principal branch is complex
    beyond the branch point, and no branch is selected here.
    """
    a, b, c, z = float(a), float(b), float(c), float(z)
    _check_c(c)
    if not z < 1.0:
        raise DomainError(
            f"2F1 requested at z={z!r} >= 1: branch point/cut, no branch is selected"
        )
    if z == 0.0:
        return 1.0
    if z < -SERIES_RADIUS:
        return hyp2f1_pfaff(a, b, c, z)
    return hyp2f1_series(a, b, c, z)
