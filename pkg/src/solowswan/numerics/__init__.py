"""Numerical machinery independent of the closed-form solutions."""

from .hypergeometric import hyp2f1, hyp2f1_euler, hyp2f1_pfaff, hyp2f1_series
from .ode import IntegrationReport, OdeProblem, integrate
from .quadrature import QuadResult, gauss_kronrod_15, quad_adaptive, quad_cumulative
from .rhs import (
    bertalanffy_problem,
    classical_problem,
    rhs_cobb_bertalanffy,
    rhs_cobb_classical,
    rhs_general_bertalanffy,
    rhs_general_classical,
)

__all__ = [
    "IntegrationReport",
    "OdeProblem",
    "QuadResult",
    "bertalanffy_problem",
    "classical_problem",
    "gauss_kronrod_15",
    "hyp2f1",
    "hyp2f1_euler",
    "hyp2f1_pfaff",
    "hyp2f1_series",
    "integrate",
    "quad_adaptive",
    "quad_cumulative",
    "rhs_cobb_bertalanffy",
    "rhs_cobb_classical",
    "rhs_general_bertalanffy",
    "rhs_general_classical",
]
