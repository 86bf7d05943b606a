"""Closed-form optimal favorable sets per regime, on intervals and shells.

Supercritical: one centered set. Subcritical: the two boundary-flush
candidates (both are returned; which one wins on a shell is measured, not
assumed). Critical: a full family, returned as a descriptor (anchor range
plus fixed length), never a silently chosen representative.

Shell predictions are stated in the radial variable in closed form; their
images under the substitution are exactly the interval predictions on the
t-domain, which is what the pullback checks assert.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionError
from .radial import ShellProblem
from .reduction import map_r_to_t, map_t_to_r
from .thresholds import Regime, ThresholdReport, classify_1d, classify_shell
from .weights import IntervalDomain


@dataclass(frozen=True)
class CriticalFamily:
    """All sets (anchor, anchor + length) for anchor in [anchor_lo, anchor_hi].

    variable names the coordinate the anchors live in ("x" for interval
    problems, "t" for shells; shell members map to radial sets through the
    substitution).
    """

    anchor_lo: float
    anchor_hi: float
    length: float
    variable: str

    def instantiate(self, anchor: float) -> IntervalDomain:
        if not (self.anchor_lo - 1e-12 <= anchor <= self.anchor_hi + 1e-12):
            raise ValueError(f"anchor {anchor} outside [{self.anchor_lo}, {self.anchor_hi}]")
        return IntervalDomain(anchor, anchor + self.length)

    def to_json_dict(self) -> dict:
        return {
            "anchor_lo": self.anchor_lo,
            "anchor_hi": self.anchor_hi,
            "length": self.length,
            "variable": self.variable,
        }


@dataclass(frozen=True)
class OptimalSetPrediction:
    """Predicted optimizer(s): sets for the definite regimes, family at criticality."""

    regime: Regime
    sets: tuple[IntervalDomain, ...]
    variable: str  # coordinate of the sets: "x", "t", or "r"
    family: CriticalFamily | None = None
    threshold: ThresholdReport | None = None

    def __post_init__(self):
        if self.regime == Regime.SUPERCRITICAL and len(self.sets) != 1:
            raise ValueError("supercritical prediction must carry exactly one set")
        if self.regime == Regime.SUBCRITICAL and len(self.sets) != 2:
            raise ValueError("subcritical prediction must carry exactly two sets")
        if self.regime == Regime.CRITICAL and self.family is None:
            raise ValueError("critical prediction must carry the family descriptor")

    def to_json_dict(self) -> dict:
        out = {
            "regime": self.regime.value,
            "variable": self.variable,
            "sets": [[s.a, s.b] for s in self.sets],
            "family": self.family.to_json_dict() if self.family else None,
        }
        if self.threshold is not None:
            out["threshold"] = self.threshold.to_json_dict()
        return out

    def csv_rows(self) -> list[tuple[str, str, float, float]]:
        rows = [(self.regime.value, self.variable, s.a, s.b) for s in self.sets]
        if self.family is not None:
            fam = self.family
            for anchor in (fam.anchor_lo, fam.anchor_hi):
                rows.append(
                    (self.regime.value, fam.variable, anchor, anchor + fam.length)
                )
        return rows


def predict_1d(
    domain: IntervalDomain, beta: float, c: float, kappa: float
) -> OptimalSetPrediction:
    """Optimal set(s) on an interval: centered above threshold, flush below."""
    report = classify_1d(domain, beta, c, kappa)
    a, b = domain.a, domain.b
    ell = c * (b - a)
    if report.regime == Regime.SUPERCRITICAL:
        mid = 0.5 * (a + b)
        sets = (IntervalDomain(mid - 0.5 * ell, mid + 0.5 * ell),)
        family = None
    elif report.regime == Regime.SUBCRITICAL:
        sets = (IntervalDomain(a, a + ell), IntervalDomain(b - ell, b))
        family = None
    else:
        sets = ()
        family = CriticalFamily(anchor_lo=a, anchor_hi=b - ell, length=ell, variable="x")
    return OptimalSetPrediction(
        regime=report.regime, sets=sets, variable="x", family=family, threshold=report
    )


def _shell_family(n: int, r1: float, r2: float, c_prime: float) -> CriticalFamily:
    t1 = map_r_to_t(n, r1)
    t2 = map_r_to_t(n, r2)
    ell = c_prime * (t2 - t1)
    return CriticalFamily(anchor_lo=t1, anchor_hi=t2 - ell, length=ell, variable="t")


def predict_shell_2d(sp: ShellProblem, c_prime: float) -> OptimalSetPrediction:
    """Optimal radial sets on a planar shell (geometric-mean geometry)."""
    if sp.n != 2:
        raise DimensionError(f"planar prediction requires n=2, got n={sp.n}")
    report = classify_shell(sp, c_prime)
    r1, r2, cp = sp.r1, sp.r2, c_prime
    if report.regime == Regime.SUPERCRITICAL:
        sets = (
            IntervalDomain(
                r1 ** ((1 + cp) / 2) * r2 ** ((1 - cp) / 2),
                r1 ** ((1 - cp) / 2) * r2 ** ((1 + cp) / 2),
            ),
        )
        family = None
    elif report.regime == Regime.SUBCRITICAL:
        sets = (
            IntervalDomain(r1, r1 ** (1 - cp) * r2**cp),
            IntervalDomain(r1**cp * r2 ** (1 - cp), r2),
        )
        family = None
    else:
        sets = ()
        family = _shell_family(2, r1, r2, cp)
    return OptimalSetPrediction(
        regime=report.regime, sets=sets, variable="r", family=family, threshold=report
    )


def predict_shell_nd(sp: ShellProblem, c_prime: float) -> OptimalSetPrediction:
    """Optimal radial sets on a shell in dimension n >= 3."""
    if sp.n < 3:
        raise DimensionError(f"this prediction requires n >= 3, got n={sp.n}")
    report = classify_shell(sp, c_prime)
    n, r1, r2, cp = sp.n, sp.r1, sp.r2, c_prime
    p = 2 - n
    ia = r1**p
    ib = r2**p
    if report.regime == Regime.SUPERCRITICAL:
        lo = (((1 + cp) * ia + (1 - cp) * ib) / 2.0) ** (1.0 / p)
        hi = (((1 - cp) * ia + (1 + cp) * ib) / 2.0) ** (1.0 / p)
        sets = (IntervalDomain(lo, hi),)
        family = None
    elif report.regime == Regime.SUBCRITICAL:
        inner_hi = ((1 - cp) * ia + cp * ib) ** (1.0 / p)
        outer_lo = (cp * ia + (1 - cp) * ib) ** (1.0 / p)
        sets = (IntervalDomain(r1, inner_hi), IntervalDomain(outer_lo, r2))
        family = None
    else:
        sets = ()
        family = _shell_family(n, r1, r2, cp)
    return OptimalSetPrediction(
        regime=report.regime, sets=sets, variable="r", family=family, threshold=report
    )


def predicted_sets_in_t(pred: OptimalSetPrediction, n: int) -> list[IntervalDomain]:
    """Images of a radial prediction's sets under the substitution."""
    if pred.variable != "r":
        raise ValueError("expected a radial prediction")
    return [
        IntervalDomain(map_r_to_t(n, s.a), map_r_to_t(n, s.b)) for s in pred.sets
    ]


def family_member_in_r(fam: CriticalFamily, n: int, anchor_t: float) -> IntervalDomain:
    """Radial image of one critical-family member anchored at anchor_t."""
    member = fam.instantiate(anchor_t)
    return IntervalDomain(map_t_to_r(n, member.a), map_t_to_r(n, member.b))
