"""Distorted proportional-odds distribution families with order verification."""

from .baseline import (BaselineDistribution, DistributionBase, Exponential,
                       Gamma, ProfilePoint, StandardLogLogistic, Weibull,
                       make_baseline)
from .distorted import DistortedOdds, d_polynomial, make_domo, make_omo, t_factor
from .ell import EnlargedLogLogistic, compose_odds, make_ell
from .errors import CapabilityError, DomainError, ParseError, ValidationError
from .orders import (GridSpec, OrderVerdict, ShapeReport, build_grid,
                     check_order, classify_shape)
from .params import ParamTriple
from .stability import StabilityReport, geometric_extreme_experiment, ks_distance
from .theorems import (CaseReport, Scenario, SweepConfig, SweepReport,
                       evaluate_hypothesis, list_cases, run_sweep, verify_case)

__all__ = [
    "BaselineDistribution", "DistributionBase", "Exponential", "Gamma",
    "ProfilePoint", "StandardLogLogistic", "Weibull", "make_baseline",
    "DistortedOdds", "d_polynomial", "make_domo", "make_omo", "t_factor",
    "EnlargedLogLogistic", "compose_odds", "make_ell",
    "CapabilityError", "DomainError", "ParseError", "ValidationError",
    "GridSpec", "OrderVerdict", "ShapeReport", "build_grid", "check_order",
    "classify_shape", "ParamTriple",
    "StabilityReport", "geometric_extreme_experiment", "ks_distance",
    "CaseReport", "Scenario", "SweepConfig", "SweepReport",
    "evaluate_hypothesis", "list_cases", "run_sweep", "verify_case",
]
