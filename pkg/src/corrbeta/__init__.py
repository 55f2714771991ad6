"""Sampling pairs of positively correlated beta variates through a Dirichlet."""

from .efficiency import EfficiencyGrid, efficiency_grid, empirical_efficiency, johnk_efficiency
from .errors import (
    CorrBetaError,
    Infeasible,
    InvalidInput,
    InvalidShape,
    InvalidTarget,
    TooManyRejections,
)
from .params import (
    CaseBounds,
    CorrelatedBetaTarget,
    DirichletAlphas,
    FeasibilityReport,
    SpecialCase,
    case_bounds,
    check_feasibility,
    covariance_y,
    derived_c4,
    dirichlet_pair_covariances,
    max_feasible_r,
    solve_alpha3,
    solve_alphas,
    target_correlation,
    variance_x3,
)
from .rng import RngStream, uniform
from .samplers import (
    DirichletDraw,
    JohnkStats,
    Method,
    SampleBatch,
    SamplePair,
    sample_correlated_beta,
    sample_dirichlet_gamma,
    sample_dirichlet_johnk,
    sample_gamma,
    to_pair,
)
from .special import log_gamma, regularized_incomplete_beta
from .validation import ValidationReport, validate_sampler

__version__ = "0.1.0"

__all__ = [
    "CaseBounds",
    "CorrBetaError",
    "CorrelatedBetaTarget",
    "DirichletAlphas",
    "DirichletDraw",
    "EfficiencyGrid",
    "FeasibilityReport",
    "Infeasible",
    "InvalidInput",
    "InvalidShape",
    "InvalidTarget",
    "JohnkStats",
    "Method",
    "RngStream",
    "SampleBatch",
    "SamplePair",
    "SpecialCase",
    "TooManyRejections",
    "ValidationReport",
    "case_bounds",
    "check_feasibility",
    "covariance_y",
    "derived_c4",
    "dirichlet_pair_covariances",
    "efficiency_grid",
    "empirical_efficiency",
    "johnk_efficiency",
    "log_gamma",
    "max_feasible_r",
    "regularized_incomplete_beta",
    "sample_correlated_beta",
    "sample_dirichlet_gamma",
    "sample_dirichlet_johnk",
    "sample_gamma",
    "solve_alpha3",
    "solve_alphas",
    "target_correlation",
    "to_pair",
    "uniform",
    "validate_sampler",
    "variance_x3",
]
