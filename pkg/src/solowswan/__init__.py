"""Solow-Swan growth with non-constant returns to scale.

Exact Cobb-Douglas solutions for exponential and von Bertalanffy labor,
an independent adaptive integrator to check them, and a scenario harness.
"""

from .closed_form import (
    k_bertalanffy,
    k_bertalanffy_alpha1,
    k_classical,
    k_classical_alpha1,
    labor_bertalanffy,
    labor_exponential,
    script_L,
    trajectory_closed_form,
)
from .core import (
    BertalanffyParams,
    ClassicalParams,
    CobbDouglas,
    Tolerances,
    Trajectory,
    check_homogeneity,
    check_inada,
    evaluate_F,
    intensive_f,
)

__version__ = "0.1.0"
