import math

import numpy as np
import pytest

from solowswan.core import Tolerances
from solowswan.closed_form import script_L
from solowswan.errors import ConvergenceError, DomainError
from solowswan.numerics import gauss_kronrod_15, quad_adaptive, quad_cumulative


def test_constant_and_cubic():
    assert quad_adaptive(lambda x: 1.0, 0.0, 1.0).value == pytest.approx(1.0, abs=1e-15)
    assert quad_adaptive(lambda x: x**3, 0.0, 1.0).value == pytest.approx(0.25, abs=1e-15)


@pytest.mark.parametrize("degree", range(0, 23))
def test_kronrod_rule_exact_to_degree_22(degree):
    value = gauss_kronrod_15(lambda x: x**degree, 0.0, 1.0).value
    assert value == pytest.approx(1.0 / (degree + 1), abs=1e-14)


@pytest.mark.parametrize("degree", range(0, 14))
def test_embedded_gauss_exact_to_degree_13(degree):
    # the error estimate |K - G| vanishes while both rules are exact
    assert gauss_kronrod_15(lambda x: x**degree, -1.0, 2.0).error < 1e-12


def test_empty_interval_and_bad_bounds():
    assert quad_adaptive(math.exp, 1.0, 1.0) == (0.0, 0.0)
    with pytest.raises(DomainError):
        quad_adaptive(math.exp, 1.0, 0.0)


def test_oscillatory_integrand_converges():
    result = quad_adaptive(lambda x: math.cos(50 * x), 0.0, math.pi / 2, Tolerances(1e-13, 1e-12))
    assert result.value == pytest.approx(math.sin(25 * math.pi) / 50, abs=1e-12)


def test_non_convergence_carries_estimate():
    with pytest.raises(ConvergenceError) as info:
        quad_adaptive(lambda x: 1.0 / math.sqrt(x) if x > 0 else 0.0, 0.0, 1.0, Tolerances(1e-300, 1e-300))
    assert info.value.estimate == pytest.approx(2.0, rel=1e-3)


def test_script_L_integral_against_trapezoid_oracle(fig2a):
    # 1e7-panel composite trapezoid: 0.27383792216056629 (mpmath: 0.27383792216056621)
    result = quad_adaptive(lambda u: script_L(u, fig2a), 0.0, 2.0)
    assert result.value == pytest.approx(0.27383792216056629, abs=1e-8)
    assert result.value == pytest.approx(0.2738379221605662142797, rel=1e-13)


@pytest.mark.parametrize("alpha,n", [(0.3, 0.8), (0.5, 1.2), (0.7, 1.1)])
@pytest.mark.parametrize("r", [0.9, 5.0])
def test_error_estimate_bounds_true_error(alpha, n, r):
    from solowswan import BertalanffyParams, CobbDouglas

    p = BertalanffyParams(CobbDouglas.from_degree(alpha, n), 0.4, r, 5.0, 1.0, 1.0)
    g = lambda u: script_L(u, p)
    reference = quad_adaptive(g, 0.0, 10.0, Tolerances(1e-15, 1e-15)).value
    coarse = quad_adaptive(g, 0.0, 10.0, Tolerances(1e-6, 1e-6))
    assert abs(coarse.value - reference) <= 10 * coarse.error + 1e-15


def test_cumulative_matches_antiderivative():
    grid = np.linspace(0.0, 3.0, 31)
    np.testing.assert_allclose(quad_cumulative(math.exp, grid), np.expm1(grid), rtol=1e-12, atol=1e-14)
    assert list(quad_cumulative(math.exp, [0.0])) == [0.0]
