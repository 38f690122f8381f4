"""Numerical lab for second-order perturbations of Morse-Bott functions.

Given a family S_eps = S0 + eps*S1 + eps^2*S2 on R^d with S0 Morse-Bott and
S1 Morse-Bott on Z0 = Crit(S0), the critical points of S_eps for small eps
localise at the critical points of the leading term

    f = (1/2) dS1(lambda) + S2   restricted to Z1 = Crit(S1|Z0),

where lambda solves the Lagrange-multiplier system Hess S0 (lambda) = -dS1.
The lab continues critical points numerically with damped Newton, computes
Morse indices from Hessian inertia, checks them against the prediction

    ind(S_eps, x) = ind(S0, x) + ind(+-S1|Z0, x) + ind(f, x),

and verifies signed counts against Euler characteristics of the Z0
components.
"""

from .fields import ScalarField, PerturbationFamily
from .scenarios import (
    Scenario,
    Z0Component,
    Z1Site,
    circle_scenario,
    escape_scenario,
    linear_scenario,
    scenario_by_name,
    scenario_names,
    sphere_scenario,
)
from .lab import (
    ConvergenceReport,
    DegenerateCriticalPointError,
    ExperimentReport,
    FoundPoint,
    MultiplierError,
    NewtonResult,
    PredictedPoint,
    convergence_filter,
    lagrange_multiplier,
    leading_term,
    leading_term_kernel_drift,
    morse_bott_index,
    morse_index,
    newton_critical_point,
    predicted_critical_points,
    predicted_spectrum,
    run_localisation,
)

__all__ = [
    "ScalarField",
    "PerturbationFamily",
    "Scenario",
    "Z0Component",
    "Z1Site",
    "circle_scenario",
    "sphere_scenario",
    "linear_scenario",
    "escape_scenario",
    "scenario_by_name",
    "scenario_names",
    "NewtonResult",
    "newton_critical_point",
    "DegenerateCriticalPointError",
    "MultiplierError",
    "morse_index",
    "morse_bott_index",
    "lagrange_multiplier",
    "leading_term",
    "leading_term_kernel_drift",
    "PredictedPoint",
    "predicted_critical_points",
    "predicted_spectrum",
    "FoundPoint",
    "ExperimentReport",
    "run_localisation",
    "ConvergenceReport",
    "convergence_filter",
]
