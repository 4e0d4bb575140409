"""Exact verification toolkit for the clubbed binomial approximation of the
lightbulb process."""

from .clubbed import (
    ClubbedPmf,
    ParityClass,
    alpha,
    beta,
    clubbed_pmf,
    parity_class_of,
    theorem_target,
    verify_balance,
)
from .pmf import Pmf, binomial, mean_var, tv_distance
from .process import (
    StageDistribution,
    enumerate_terminal_pmf,
    exact_terminal_pmf,
    stage_distributions,
    stage_transition,
)
from .simulate import SimConfig, SimResult, empirical_tv, run, sample_once
from .stein import (
    SteinSolution,
    g1,
    g2,
    lemma_bound,
    max_abs_residual,
    sharp_sup_bound,
    solve_set,
    solve_singleton,
    stein_apply,
)
from .verify import (
    ReportRow,
    build_report,
    collision_probability,
    exponent_identity,
    exponent_identity_sweep,
    theorem_bound,
    verify_theorem,
)

__version__ = "0.1.0"
