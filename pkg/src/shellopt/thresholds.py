"""Critical Robin coefficient beta*(c, kappa) and regime classification.

beta* separates the placement regimes on the unit interval: above it the
optimal favorable set is centered, below it boundary-flush, at it every
placement ties. General intervals and shells rescale the unit-interval
value; the scalings differ per dimension and are implemented verbatim.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .radial import ShellProblem
from .weights import IntervalDomain

REGIME_TOLERANCE = 1e-12


class Regime(str, enum.Enum):
    SUPERCRITICAL = "Supercritical"
    CRITICAL = "Critical"
    SUBCRITICAL = "Subcritical"


def beta_star(c: float, kappa: float) -> float:
    """Critical Robin coefficient on the unit interval.

    kappa > 1: (2/(c sqrt(kappa))) arctan(1/sqrt(kappa));
    kappa = 1: pi/(2c);
    kappa < 1: (1/(c sqrt(kappa))) (arctan(2 sqrt(kappa)/(kappa-1)) + pi).
    The kappa < 1 branch is parenthesized so that the arctan closes before
    pi is added; only that reading is continuous at kappa = 1 (the arctan
    argument diverges to -inf, the branch tends to pi/(2c)).
    """
    if not (0.0 < c < 1.0):
        raise ValueError(f"c must lie in (0,1), got {c}")
    if not kappa > 0.0:
        raise ValueError(f"kappa must be positive, got {kappa}")
    rk = math.sqrt(kappa)
    if kappa > 1.0:
        return (2.0 / (c * rk)) * math.atan(1.0 / rk)
    if kappa == 1.0:
        return math.pi / (2.0 * c)
    return (1.0 / (c * rk)) * (math.atan(2.0 * rk / (kappa - 1.0)) + math.pi)


@dataclass(frozen=True)
class ThresholdReport:
    """Unit-interval beta*, the problem's scaled threshold, and the verdict."""

    beta_star: float
    beta_star_scaled: float
    regime: Regime
    comparison_tolerance: float

    def to_json_dict(self) -> dict:
        return {
            "beta_star": self.beta_star,
            "beta_star_scaled": self.beta_star_scaled,
            "regime": self.regime.value,
            "comparison_tolerance": self.comparison_tolerance,
        }


def _classify(beta: float, threshold: float, tol: float) -> Regime:
    slack = tol * threshold
    if beta > threshold + slack:
        return Regime.SUPERCRITICAL
    if beta < threshold - slack:
        return Regime.SUBCRITICAL
    return Regime.CRITICAL


def classify_1d(
    domain: IntervalDomain,
    beta: float,
    c: float,
    kappa: float,
    *,
    tolerance: float = REGIME_TOLERANCE,
) -> ThresholdReport:
    """Regime of beta on an arbitrary interval: threshold beta*(c,k)/(b-a)."""
    bs = beta_star(c, kappa)
    scaled = bs / domain.length()
    return ThresholdReport(
        beta_star=bs,
        beta_star_scaled=scaled,
        regime=_classify(beta, scaled, tolerance),
        comparison_tolerance=tolerance,
    )


def classify_shell(
    sp: ShellProblem,
    c_prime: float,
    *,
    tolerance: float = REGIME_TOLERANCE,
) -> ThresholdReport:
    """Regime of the shell problem's beta against the reduced threshold.

    n=2: beta*(c',k) / (r1 (ln r2 - ln r1));
    n>=3: (n-2) r1^(1-n) beta*(c',k) / (r1^(2-n) - r2^(2-n)).
    Both are the 1D threshold of the reduced t-problem expressed in the
    original beta (the reduction maps beta to beta r1^(n-1)).
    """
    bs = beta_star(c_prime, sp.params.kappa)
    n, r1, r2 = sp.n, sp.r1, sp.r2
    if n == 2:
        scaled = bs / (r1 * (math.log(r2) - math.log(r1)))
    elif n >= 3:
        scaled = (n - 2) * r1 ** (1 - n) * bs / (r1 ** (2 - n) - r2 ** (2 - n))
    else:
        raise ValueError(f"shell classification requires n >= 2, got n={n}")
    return ThresholdReport(
        beta_star=bs,
        beta_star_scaled=scaled,
        regime=_classify(sp.beta, scaled, tolerance),
        comparison_tolerance=tolerance,
    )
