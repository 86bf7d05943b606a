"""Error taxonomy shared across the package.

Every failure mode a caller can act on gets its own class; the CLI maps
SolverError subclasses to exit code 2 and usage problems to exit code 1.
"""


class ShelloptError(Exception):
    """Base class for all package-specific errors."""


class ConstraintViolated(ShelloptError):
    """An admissibility constraint does not hold (e.g. beta=0 with nonnegative mean weight)."""


class NoSignChange(ShelloptError):
    """The weight does not change sign, so no positive principal eigenvalue exists."""


class NoRootInRange(ShelloptError):
    """The bracket scan reached its cap without finding a residual sign change."""

    def __init__(self, cap: float, message: str | None = None):
        self.cap = cap
        super().__init__(message or f"no residual root found below scan cap {cap:g}")


class StepFailure(ShelloptError):
    """Adaptive integrator step size underflowed; configuration is stiff or invalid."""


class DomainError(ShelloptError):
    """Argument outside the mathematical domain of a map (r <= 0, or t >= 0 for n >= 3)."""


class DimensionError(ShelloptError):
    """Operation called with an unsupported spatial dimension."""


class QTooSmall(ShelloptError):
    """Scaling constant q at or below its lower bound."""


class NoSignChangeInBracket(ShelloptError):
    """Threshold bisection bracket does not straddle the placement-gap root."""


class IterationDivergence(ShelloptError):
    """Inverse iteration failed to converge."""


class NoPositiveEigenpair(ShelloptError):
    """The discrete pencil has no positive eigenvalue with positive weighted norm."""
