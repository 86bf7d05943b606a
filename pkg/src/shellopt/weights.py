"""Sign-changing bang-bang weights on an interval and the admissible class.

A weight takes the value kappa on a finite union of open subintervals (the
favorable set E) and -1 on the rest of the domain. All types are immutable;
everything here is exact interval arithmetic, no quadrature.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

# Slack absorbing rounding in constructed c-values when the mean constraint
# is meant to be active (|E| = c|domain| exactly).
ADMISSIBILITY_SLACK = 1e-12


@dataclass(frozen=True)
class IntervalDomain:
    """Open interval (a, b), a < b."""

    a: float
    b: float

    def __post_init__(self):
        if not (self.a < self.b):
            raise ValueError(f"interval requires a < b, got ({self.a}, {self.b})")

    def length(self) -> float:
        return self.b - self.a

    def contains(self, x: float) -> bool:
        return self.a <= x <= self.b

    def midpoint(self) -> float:
        return 0.5 * (self.a + self.b)

    def as_tuple(self) -> tuple[float, float]:
        return (self.a, self.b)


@dataclass(frozen=True)
class BangBangWeight:
    """m = kappa on the segments (the set E), -1 elsewhere on the domain.

    Segments are disjoint open subintervals sorted by left endpoint; their
    total length must be strictly between 0 and the domain length.
    """

    domain: IntervalDomain
    kappa: float
    segments: tuple[IntervalDomain, ...]

    def __post_init__(self):
        if not self.kappa > 0:
            raise ValueError(f"kappa must be positive, got {self.kappa}")
        segs = tuple(
            s if isinstance(s, IntervalDomain) else IntervalDomain(*s)
            for s in self.segments
        )
        object.__setattr__(self, "segments", segs)
        if not segs:
            raise ValueError("E must have positive measure: no segments given")
        prev_end = self.domain.a
        for s in segs:
            if s.a < prev_end:
                raise ValueError(f"segments must be sorted and disjoint, violated at ({s.a}, {s.b})")
            if s.b > self.domain.b:
                raise ValueError(f"segment ({s.a}, {s.b}) leaves the domain")
            prev_end = s.b
        total = self.segment_length()
        if not (0.0 < total < self.domain.length()):
            raise ValueError(
                f"|E| = {total} must lie strictly between 0 and |domain| = {self.domain.length()}"
            )

    def segment_length(self) -> float:
        return sum(s.length() for s in self.segments)

    def evaluate(self, x: float) -> float:
        """Weight value at x; endpoints resolve to the right-limit value."""
        for s in self.segments:
            if s.a <= x < s.b:
                return self.kappa
        # right-limit convention: the left endpoint of a segment is inside,
        # the right endpoint is outside (value -1), except at the domain end
        if x == self.domain.b and self.segments[-1].b == self.domain.b:
            return self.kappa
        return -1.0

    def translated(self, offset: float) -> "BangBangWeight":
        """Weight with domain and E both shifted by offset."""
        return BangBangWeight(
            IntervalDomain(self.domain.a + offset, self.domain.b + offset),
            self.kappa,
            tuple(IntervalDomain(s.a + offset, s.b + offset) for s in self.segments),
        )

    def to_json_dict(self) -> dict:
        return {
            "domain": [self.domain.a, self.domain.b],
            "kappa": self.kappa,
            "segments": [[s.a, s.b] for s in self.segments],
        }


@dataclass(frozen=True)
class AdmissibilityParams:
    """Mean-weight bound m0, weight ceiling kappa, Robin coefficient beta.

    The derived favorable fraction c = (1-m0)/(1+kappa) must land in (0,1);
    for beta=0 the mean must stay strictly negative, so m0 > 0 is required.
    """

    m0: float
    kappa: float
    beta: float
    c: float = field(init=False)

    def __post_init__(self):
        if self.beta < 0:
            raise ValueError(f"beta must be nonnegative, got {self.beta}")
        if not self.kappa > 0:
            raise ValueError(f"kappa must be positive, got {self.kappa}")
        if self.beta > 0:
            if not (-self.kappa < self.m0 < 1.0):
                raise ValueError(f"m0 must lie in (-kappa, 1) for beta > 0, got {self.m0}")
        else:
            if not (0.0 < self.m0 < 1.0):
                raise ValueError(f"m0 must lie in (0, 1) for beta = 0, got {self.m0}")
        object.__setattr__(self, "c", (1.0 - self.m0) / (1.0 + self.kappa))

    def to_json_dict(self) -> dict:
        return {"m0": self.m0, "kappa": self.kappa, "beta": self.beta, "c": self.c}


@dataclass(frozen=True)
class AdmissibilityResult:
    ok: bool
    mean: float
    bound: float
    diagnostic: str

    def __bool__(self) -> bool:
        return self.ok


def weight_mean(w: BangBangWeight) -> float:
    """Mean value of the weight: [kappa|E| - (|domain| - |E|)] / |domain|."""
    e = w.segment_length()
    omega = w.domain.length()
    return (w.kappa * e - (omega - e)) / omega


def check_admissible(w: BangBangWeight, p: AdmissibilityParams) -> AdmissibilityResult:
    """Membership in the admissible class: mean(m) <= -m0 and |E| > 0.

    The inequality is tested with slack ADMISSIBILITY_SLACK so that weights
    constructed to saturate the constraint (|E| = c|domain|) pass despite
    floating-point rounding.
    """
    if w.kappa != p.kappa:
        return AdmissibilityResult(
            False, weight_mean(w), -p.m0,
            f"kappa mismatch: weight has {w.kappa}, params have {p.kappa}",
        )
    mean = weight_mean(w)
    bound = -p.m0
    if mean <= bound + ADMISSIBILITY_SLACK:
        return AdmissibilityResult(True, mean, bound, "ok")
    return AdmissibilityResult(
        False, mean, bound,
        f"mean weight {mean:.17g} exceeds -m0 = {bound:.17g}",
    )


def saturating_interval_weight(
    domain: IntervalDomain, kappa: float, c: float, anchor: float
) -> BangBangWeight:
    """Single-interval weight E = (anchor, anchor + c|domain|), clipped shifts rejected."""
    ell = c * domain.length()
    if not (domain.a - 1e-12 <= anchor and anchor + ell <= domain.b + 1e-12):
        raise ValueError(f"anchor {anchor} places E outside the domain")
    lo = max(anchor, domain.a)
    hi = min(anchor + ell, domain.b)
    return BangBangWeight(domain, kappa, (IntervalDomain(lo, hi),))


def piecewise_arrays(w: BangBangWeight) -> tuple[np.ndarray, np.ndarray]:
    """Breakpoints and per-piece values covering the domain.

    Returns (bounds, values) with len(bounds) = len(values) + 1; zero-length
    pieces (segments flush against the domain or each other) are dropped.
    """
    pts = [w.domain.a]
    vals = []
    cursor = w.domain.a
    for s in w.segments:
        if s.a > cursor:
            pts.append(s.a)
            vals.append(-1.0)
        pts.append(s.b)
        vals.append(w.kappa)
        cursor = s.b
    if cursor < w.domain.b:
        pts.append(w.domain.b)
        vals.append(-1.0)
    bounds = np.asarray(pts, dtype=float)
    values = np.asarray(vals, dtype=float)
    keep = np.diff(bounds) > 0
    if not keep.all():
        values = values[keep]
        bounds = np.concatenate([bounds[:1], bounds[1:][keep]])
    return bounds, values
