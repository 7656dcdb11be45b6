import math

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from solowswan.errors import ConvergenceError, DomainError
from solowswan.numerics import hyp2f1, hyp2f1_euler, hyp2f1_pfaff, hyp2f1_series


def test_origin():
    assert hyp2f1(0.3, -1.7, 2.5, 0.0) == 1.0


@pytest.mark.parametrize("z", [-0.9, -0.5, 0.3, 0.7, 0.95, -5.0, -40.0])
def test_log_identity(z):
    expected = -math.log1p(-z) / z
    assert hyp2f1(1.0, 1.0, 2.0, z) == pytest.approx(expected, rel=1e-12)


def test_log_identity_direct_series_at_point_three():
    assert hyp2f1_series(1.0, 1.0, 2.0, 0.3) == pytest.approx(1.18891647979577459637546, rel=1e-14)


def test_transformed_value_against_extended_precision_series():
    # raw Gauss series summed with 40 digits: 0.97839765175966620675...
    assert hyp2f1(0.2, 0.2, 1.2, -0.8) == pytest.approx(0.9783976517596662067523, rel=1e-12)


def test_polynomial_case_terminates():
    # 2F1(-2, b; c; z) = 1 - 2bz/c + b(b+1) z^2 / (c(c+1))
    b, c, z = 1.5, 2.5, 0.8
    expected = 1 - 2 * b * z / c + b * (b + 1) * z**2 / (c * (c + 1))
    assert hyp2f1(-2.0, b, c, z) == pytest.approx(expected, rel=1e-15)


params = st.floats(min_value=-2.5, max_value=2.5).filter(lambda x: abs(x - round(x)) > 1e-3)


@given(params, params, st.floats(min_value=0.1, max_value=3.0), st.floats(min_value=0.3, max_value=0.5))
def test_transformations_agree_on_overlap(a, b, c, u):
    for z in (-u, u):
        raw = hyp2f1_series(a, b, c, z)
        transformed = hyp2f1_pfaff(a, b, c, z) if z < 0 else hyp2f1_euler(a, b, c, z)
        assert transformed == pytest.approx(raw, rel=1e-12, abs=1e-12)


@pytest.mark.parametrize(
    "a,b,c,z",
    [(0.5, 0.25, 1.5, -0.75), (-0.2, -0.2, 0.8, -3.0), (1.3, 0.7, 2.9, 0.85), (0.2, 0.2, 1.2, -12.0)],
)
def test_against_mpmath(a, b, c, z):
    assert hyp2f1(a, b, c, z) == pytest.approx(float(mpmath.hyp2f1(a, b, c, z)), rel=1e-12)


@pytest.mark.parametrize("z", [1.0, 1.25, 3.0])
def test_branch_cut_rejected(z):
    with pytest.raises(DomainError, match="branch"):
        hyp2f1(0.2, 0.2, 1.2, z)


def test_non_positive_integer_c_rejected():
    with pytest.raises(DomainError):
        hyp2f1(1.0, 1.0, -2.0, 0.1)


def test_series_cap():
    with pytest.raises(ConvergenceError):
        hyp2f1(1.0, 1.0, 1.5, 0.9999)
