"""Principal eigenvalues of indefinite-weight problems on intervals and shells.

The library computes the positive principal eigenvalue of
u'' + lambda m u = 0 (and its radial counterpart on n-dimensional shells)
under Robin boundary conditions, for bang-bang weights m in {kappa, -1}. It
carries the closed-form optimal placements and critical Robin thresholds,
plus independent numerical oracles for cross-checking every formula.

Piecewise-exact propagation runs on a compiled extension when available and
falls back to a pure-Python twin (set SHELLOPT_PURE=1 to force the fallback);
both produce bit-identical arithmetic.
"""

__version__ = "0.1.0"

from ._kernels import BACKEND
from .errors import (
    ConstraintViolated,
    DimensionError,
    DomainError,
    IterationDivergence,
    NoPositiveEigenpair,
    NoRootInRange,
    NoSignChange,
    NoSignChangeInBracket,
    QTooSmall,
    ShelloptError,
    StepFailure,
)
from .weights import (
    AdmissibilityParams,
    AdmissibilityResult,
    BangBangWeight,
    IntervalDomain,
    check_admissible,
    saturating_interval_weight,
    weight_mean,
)
from .sl_core import (
    EigenResult,
    RobinProblem1D,
    principal_eigenvalue,
    shoot,
    transfer_matrix,
)
from .radial import (
    ShellProblem,
    radial_principal_eigenvalue,
    radial_shoot,
    rayleigh_quotient,
)
from .reduction import (
    ReducedProblem,
    exact_profile_eigenvalue,
    map_r_to_t,
    map_t_to_r,
    q_lower_bound,
    reduce,
    reduced_equivalent_lambda,
    shell_volume,
    solid_angle_constant,
    weight_factor,
)
from .thresholds import Regime, ThresholdReport, beta_star, classify_1d, classify_shell
from .optimal_sets import (
    CriticalFamily,
    OptimalSetPrediction,
    family_member_in_r,
    predict_1d,
    predict_shell_2d,
    predict_shell_nd,
    predicted_sets_in_t,
)
from .verifier import (
    SweepResult,
    fd_eigenvalue,
    fd_eigenvalue_single,
    find_threshold,
    sweep_placements_1d,
    sweep_placements_radial,
)
from .acceptance import SUITES, CheckOutcome, run_suite

__all__ = [
    "__version__",
    "BACKEND",
    "ShelloptError",
    "NoSignChange",
    "NoRootInRange",
    "ConstraintViolated",
    "StepFailure",
    "DomainError",
    "DimensionError",
    "QTooSmall",
    "NoSignChangeInBracket",
    "IterationDivergence",
    "NoPositiveEigenpair",
    "IntervalDomain",
    "BangBangWeight",
    "AdmissibilityParams",
    "AdmissibilityResult",
    "weight_mean",
    "check_admissible",
    "saturating_interval_weight",
    "RobinProblem1D",
    "EigenResult",
    "transfer_matrix",
    "shoot",
    "principal_eigenvalue",
    "ShellProblem",
    "radial_shoot",
    "radial_principal_eigenvalue",
    "rayleigh_quotient",
    "ReducedProblem",
    "map_r_to_t",
    "map_t_to_r",
    "weight_factor",
    "solid_angle_constant",
    "shell_volume",
    "q_lower_bound",
    "reduce",
    "exact_profile_eigenvalue",
    "reduced_equivalent_lambda",
    "Regime",
    "ThresholdReport",
    "beta_star",
    "classify_1d",
    "classify_shell",
    "CriticalFamily",
    "OptimalSetPrediction",
    "predict_1d",
    "predict_shell_2d",
    "predict_shell_nd",
    "predicted_sets_in_t",
    "family_member_in_r",
    "SweepResult",
    "sweep_placements_1d",
    "sweep_placements_radial",
    "find_threshold",
    "fd_eigenvalue",
    "fd_eigenvalue_single",
    "CheckOutcome",
    "SUITES",
    "run_suite",
]
