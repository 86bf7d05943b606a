"""Direct solver for the radial problem on a spherical shell.

u'' + ((n-1)/r) u' + lam*m(r)*u = 0 on (r1, r2), with the outward-normal
Robin conditions u'(r1) = beta*u(r1) and u'(r2) = -beta*u(r2). Integration
is an adaptive embedded RK5(4) shot from r1; weight discontinuities are
forced step points so the integrator never crosses a kink. This solver is
deliberately independent of the change-of-variables machinery so the two
can act as mutual oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import _kernels
from ._rootfind import SCAN_CAP, SCAN_FACTOR, SCAN_START, find_principal_root
from .errors import ConstraintViolated, NoSignChange, StepFailure
from .sl_core import NEUMANN_FLOOR, EigenResult
from .weights import (
    AdmissibilityParams,
    BangBangWeight,
    IntervalDomain,
    piecewise_arrays,
)

DEFAULT_RTOL = 1e-10
DEFAULT_ATOL = 1e-14

_trapz = getattr(np, "trapezoid", None) or np.trapz


@dataclass(frozen=True)
class ShellProblem:
    """Radial shell problem: dimension, radii, Robin beta, radial weight.

    n = 1 is admitted (the curvature term vanishes) so the solver can be
    checked against the exact interval solver; the reduction and the
    placement predictions only apply for n >= 2.
    """

    n: int
    r1: float
    r2: float
    beta: float
    weight_r: BangBangWeight
    params: AdmissibilityParams

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"dimension must be a positive integer, got {self.n}")
        if not (0.0 < self.r1 < self.r2):
            raise ValueError(f"radii must satisfy 0 < r1 < r2, got ({self.r1}, {self.r2})")
        if self.beta < 0:
            raise ValueError("beta must be nonnegative")
        if self.weight_r.domain != IntervalDomain(self.r1, self.r2):
            raise ValueError("weight domain must equal (r1, r2)")
        if self.weight_r.kappa != self.params.kappa:
            raise ValueError("kappa mismatch between weight and admissibility params")
        if self.beta != self.params.beta:
            raise ValueError("beta mismatch between problem and admissibility params")

    @classmethod
    def make(
        cls,
        n: int,
        r1: float,
        r2: float,
        beta: float,
        kappa: float,
        m0: float,
        segments,
    ) -> "ShellProblem":
        weight = BangBangWeight(IntervalDomain(r1, r2), kappa, tuple(segments))
        params = AdmissibilityParams(m0=m0, kappa=kappa, beta=beta)
        return cls(n=n, r1=r1, r2=r2, beta=beta, weight_r=weight, params=params)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "r1": self.r1,
            "r2": self.r2,
            "beta": self.beta,
            "weight": self.weight_r.to_json_dict(),
            "params": self.params.to_json_dict(),
        }


class RadialShootResult(NamedTuple):
    residual: float
    zero_count: int
    scale_log: float
    samples: np.ndarray | None  # (r, u, u') rows when recorded


def radial_weighted_integral(sp: ShellProblem) -> float:
    """Exact integral of m(r) r^(n-1) dr over the shell (per unit solid angle)."""
    bounds, values = piecewise_arrays(sp.weight_r)
    n = sp.n
    powers = bounds**n / n
    return float(np.sum(values * np.diff(powers)))


def radial_shoot(
    sp: ShellProblem,
    lam: float,
    *,
    rtol: float = DEFAULT_RTOL,
    atol: float = DEFAULT_ATOL,
    max_step: float = np.inf,
    record: bool = False,
) -> RadialShootResult:
    """One RK5(4) shot from r1; residual F(lam) = u'(r2) + beta*u(r2)."""
    bounds, values = piecewise_arrays(sp.weight_r)
    res, zeros, scale_log, status, xs, ys, yps = _kernels.integrate_shoot(
        0, sp.n, sp.beta, sp.beta, bounds, values, 1.0, lam,
        rtol, atol, max_step, record,
    )
    if status != 0:
        raise StepFailure(f"step size underflow at lam={lam:.6g}")
    samples = np.column_stack([xs, ys, yps]) if record else None
    return RadialShootResult(res, zeros, scale_log, samples)


def radial_principal_eigenvalue(
    sp: ShellProblem,
    *,
    scan_start: float = SCAN_START,
    scan_cap: float = SCAN_CAP,
    scan_factor: float = SCAN_FACTOR,
    rel_tol: float = 1e-12,
    rtol: float = DEFAULT_RTOL,
    atol: float = DEFAULT_ATOL,
    sample_resolution: int = 256,
) -> EigenResult:
    """Search contract of sl_core.principal_eigenvalue on the radial problem."""
    bounds, values = piecewise_arrays(sp.weight_r)
    if not ((values > 0).any() and (values < 0).any()):
        raise NoSignChange("radial weight does not change sign")
    floor = 0.0
    if sp.beta == 0.0:
        wint = radial_weighted_integral(sp)
        if wint >= 0.0:
            raise ConstraintViolated(
                f"beta=0 requires a negative weighted integral, got {wint:.6g}"
            )
        floor = NEUMANN_FLOOR

    def F(lam: float) -> tuple[float, int, float]:
        res, zeros, scale_log, status, _, _, _ = _kernels.integrate_shoot(
            0, sp.n, sp.beta, sp.beta, bounds, values, 1.0, lam,
            rtol, atol, np.inf, False,
        )
        if status != 0:
            raise StepFailure(f"step size underflow at lam={lam:.6g}")
        return res, zeros, scale_log

    root, f_root, _zc = find_principal_root(
        F,
        floor,
        scan_start=scan_start,
        scan_cap=scan_cap,
        scan_factor=scan_factor,
        rel_tol=rel_tol,
    )
    shot = radial_shoot(
        sp, root, rtol=rtol, atol=atol,
        max_step=(sp.r2 - sp.r1) / sample_resolution, record=True,
    )
    rs = shot.samples[:, 0]
    us = shot.samples[:, 1]
    peak = np.max(np.abs(us))
    us = us / peak
    if us.min() <= 0.0:
        raise RuntimeError(
            "principal eigenfunction is not strictly positive; solver inconsistency"
        )
    return EigenResult(
        lam=root,
        eigenfunction_samples=np.column_stack([rs, us]),
        zero_count=0,
        residual=f_root,
    )


def rayleigh_quotient(
    sp: ShellProblem,
    lam: float,
    *,
    rtol: float = DEFAULT_RTOL,
    atol: float = DEFAULT_ATOL,
    resolution: int = 8192,
) -> float:
    """Trapezoid Rayleigh quotient of the shot eigenfunction at lam.

    [integral (u')^2 r^(n-1) + beta(u(r1)^2 r1^(n-1) + u(r2)^2 r2^(n-1))]
    over [integral m u^2 r^(n-1)], integrated piece by piece so the weight
    jump never sits inside a trapezoid cell.
    """
    shot = radial_shoot(
        sp, lam, rtol=rtol, atol=atol,
        max_step=(sp.r2 - sp.r1) / resolution, record=True,
    )
    rs = shot.samples[:, 0]
    us = shot.samples[:, 1]
    ups = shot.samples[:, 2]
    peak = np.max(np.abs(us))
    us = us / peak
    ups = ups / peak
    n = sp.n
    bounds, values = piecewise_arrays(sp.weight_r)
    num = sp.beta * (us[0] ** 2 * sp.r1 ** (n - 1) + us[-1] ** 2 * sp.r2 ** (n - 1))
    den = 0.0
    for i, v in enumerate(values):
        i0 = int(np.searchsorted(rs, bounds[i], side="left"))
        i1 = int(np.searchsorted(rs, bounds[i + 1], side="right"))
        r = rs[i0:i1]
        rw = r ** (n - 1)
        num += float(_trapz(ups[i0:i1] ** 2 * rw, r))
        den += v * float(_trapz(us[i0:i1] ** 2 * rw, r))
    return num / den
