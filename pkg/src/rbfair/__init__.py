"""Utility-proportional-fair resource block allocation for cellular downlinks.

A continuous bid/price dual solver finds per-user rates, a floor/ceiling
rounding stage turns them into integer resource-block candidates, and the
utility-maximising feasible candidates are selected.  A FastAPI service
(`rbfair.service`) and a thin-client CLI (`rbfair.cli`) wrap the engine.
"""

__version__ = "0.1.0"

from .discrete import (
    AllocationResult,
    RBVector,
    allocate,
    boundary_candidates,
    filter_feasible,
    select_maximizers,
    system_log_utility,
)
from .exceptions import (
    DegeneratePriceError,
    ExhaustedBandwidthError,
    RBFairError,
    ScenarioError,
)
from .oracle import OracleResult, brute_force_discrete, brute_force_restricted, complexity_count
from .scenario_io import load_scenario
from .solver import (
    ContinuousAllocation,
    ExponentialDamping,
    HarmonicDamping,
    Scenario,
    SolverParams,
    UEProfile,
    enb_price_update,
    solve_continuous,
    ue_bid_update,
    ue_rate_response,
)
from .sweep import ComplexityRow, SweepRow, report_complexity, run_sweep
from .utility import (
    DEFAULT_RATE_CAP,
    Logarithmic,
    Sigmoidal,
    UtilityFunction,
    inverse_slope,
)

__all__ = [
    "AllocationResult",
    "ComplexityRow",
    "ContinuousAllocation",
    "DEFAULT_RATE_CAP",
    "DegeneratePriceError",
    "ExhaustedBandwidthError",
    "ExponentialDamping",
    "HarmonicDamping",
    "Logarithmic",
    "OracleResult",
    "RBFairError",
    "RBVector",
    "Scenario",
    "ScenarioError",
    "Sigmoidal",
    "SolverParams",
    "SweepRow",
    "UEProfile",
    "UtilityFunction",
    "allocate",
    "boundary_candidates",
    "brute_force_discrete",
    "brute_force_restricted",
    "complexity_count",
    "enb_price_update",
    "filter_feasible",
    "inverse_slope",
    "load_scenario",
    "report_complexity",
    "run_sweep",
    "select_maximizers",
    "solve_continuous",
    "system_log_utility",
    "ue_bid_update",
    "ue_rate_response",
]
