"""Change of variables turning the radial shell problem into a 1D problem.

r = e^t for n=2 and r = [(2-n)t]^(1/(2-n)) for n >= 3 remove the first-order
radial term; the price is a t-dependent factor g(t) = r(t)^(2n-2) multiplying
the weight and asymmetric Robin coefficients. The transformed weight of a
bang-bang profile is therefore NOT two-valued; this module keeps both views:
the exact profile (a per-segment analytic formula) and the bang-bang envelope
the closed-form predictions are stated for. Solving with the exact profile
and undoing the scaling must reproduce the radial solver; solving with the
envelope is the relaxation the closed-form optimal sets are derived in.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from ._rootfind import SCAN_CAP, SCAN_FACTOR, SCAN_START, find_principal_root
from .errors import (
    ConstraintViolated,
    DimensionError,
    DomainError,
    QTooSmall,
    StepFailure,
)
from .radial import ShellProblem, radial_weighted_integral
from .sl_core import NEUMANN_FLOOR, EigenResult
from .weights import BangBangWeight, IntervalDomain, piecewise_arrays

VOLUME_NOTE = (
    "q lower bound computed with the standard shell volume "
    "pi^(n/2)(r2^n - r1^n)/Gamma(n/2 + 1); the variant with (r2^2 - r1^2) "
    "sometimes quoted for the n>=3 pipeline is dimensionally inconsistent "
    "and is not used here"
)


def map_r_to_t(n: int, r: float) -> float:
    """Monotone substitution t(r): ln r for n=2, r^(2-n)/(2-n) for n>=3."""
    if n < 2:
        raise DimensionError(f"substitution defined for n >= 2, got n={n}")
    if r <= 0:
        raise DomainError(f"radius must be positive, got {r}")
    if n == 2:
        return math.log(r)
    return r ** (2 - n) / (2 - n)


def map_t_to_r(n: int, t: float) -> float:
    """Inverse substitution r(t): e^t for n=2, [(2-n)t]^(1/(2-n)) for n>=3."""
    if n < 2:
        raise DimensionError(f"substitution defined for n >= 2, got n={n}")
    if n == 2:
        return math.exp(t)
    if t >= 0:
        raise DomainError(f"t must be negative for n >= 3, got {t}")
    return ((2 - n) * t) ** (1.0 / (2 - n))


def weight_factor(n: int, t: float) -> float:
    """g(t) = r(t)^(2n-2), the factor the substitution puts on the weight."""
    if n < 2:
        raise DimensionError(f"substitution defined for n >= 2, got n={n}")
    if n == 2:
        return math.exp(2.0 * t)
    if t >= 0:
        raise DomainError(f"t must be negative for n >= 3, got {t}")
    return ((2.0 - n) * t) ** ((2.0 * n - 2.0) / (2.0 - n))


def solid_angle_constant(n: int) -> float:
    """Surface measure of the unit (n-1)-sphere: 2 pi^(n/2) / Gamma(n/2).

    Equals the telescoped product form 2 pi^(n/2) prod_k Gamma((k+1)/2) /
    Gamma(k/2 + 1) relating integrals over the shell to radial integrals.
    """
    if n < 2:
        raise DimensionError(f"solid angle constant defined for n >= 2, got n={n}")
    return 2.0 * math.pi ** (n / 2.0) / math.gamma(n / 2.0)


def shell_volume(n: int, r1: float, r2: float) -> float:
    """|Omega| = pi^(n/2) (r2^n - r1^n) / Gamma(n/2 + 1)."""
    if n < 2:
        raise DimensionError(f"shell volume defined for n >= 2, got n={n}")
    return math.pi ** (n / 2.0) * (r2**n - r1**n) / math.gamma(n / 2.0 + 1.0)


def q_lower_bound(n: int, r1: float, r2: float, m0: float) -> float:
    """Strict lower bound on the scaling constant q.

    n=2: m0 / (2 (ln r2 - ln r1)). n>=3: max(m0, S_n r2^(2n-2) |Omega_t| /
    |Omega|) with the standard volume, which simplifies to
    n |Omega_t| r2^(2n-2) / (r2^n - r1^n).
    """
    if n == 2:
        return m0 / (2.0 * (math.log(r2) - math.log(r1)))
    t1 = map_r_to_t(n, r1)
    t2 = map_r_to_t(n, r2)
    omega_t = t2 - t1
    geometric = (
        solid_angle_constant(n)
        * r2 ** (2 * n - 2)
        * omega_t
        / shell_volume(n, r1, r2)
    )
    return max(m0, geometric)


@dataclass(frozen=True)
class ReducedProblem:
    """The transformed 1D problem plus its complete scaling record.

    lambda_factor relates eigenvalues: lambda' (t-problem) = lambda_factor *
    lambda (radial problem). weight_t is the bang-bang envelope of the
    transformed weight; exact_profile gives the true t-dependent values.
    """

    n: int
    r1: float
    r2: float
    t_domain: IntervalDomain
    beta_left: float
    beta_right: float
    lambda_factor: float
    q: float
    q_bound: float
    m0_prime: float
    c_prime: float
    weight_t: BangBangWeight

    def exact_profile(self, t: float) -> float:
        """Transformed weight value g(t) m(r(t)) / r2^(2n-2), in [-1, kappa]."""
        return (
            weight_factor(self.n, t)
            * self.weight_t.evaluate(t)
            / self.r2 ** (2 * self.n - 2)
        )

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "r1": self.r1,
            "r2": self.r2,
            "t_domain": [self.t_domain.a, self.t_domain.b],
            "beta_left": self.beta_left,
            "beta_right": self.beta_right,
            "lambda_factor": self.lambda_factor,
            "q": self.q,
            "q_lower_bound": self.q_bound,
            "m0_prime": self.m0_prime,
            "c_prime": self.c_prime,
            "weight_t": self.weight_t.to_json_dict(),
            "notes": VOLUME_NOTE if self.n >= 3 else "",
        }


def reduce(sp: ShellProblem, q: float | None = None) -> ReducedProblem:
    """Apply the substitution to a shell problem; q defaults to twice its bound.

    Raises QTooSmall when a supplied q does not strictly exceed the bound.
    The transformed Robin coefficients are beta' = beta r1^(n-1) on the left
    and beta' (r2/r1)^(n-1) on the right; eigenvalues scale by r2^(2n-2).
    """
    n = sp.n
    if n < 2:
        raise DimensionError(f"reduction defined for n >= 2, got n={n}")
    m0 = sp.params.m0
    if m0 <= 0:
        raise ConstraintViolated(
            f"the scaling pipeline requires m0 > 0 (got {m0}); "
            "m0' would not land in (0,1)"
        )
    bound = q_lower_bound(n, sp.r1, sp.r2, m0)
    if q is None:
        q = 2.0 * bound
    elif q <= bound:
        raise QTooSmall(f"q={q:.6g} must strictly exceed the lower bound {bound:.6g}")
    t1 = map_r_to_t(n, sp.r1)
    t2 = map_r_to_t(n, sp.r2)
    kappa = sp.params.kappa
    if n == 2:
        log_width = t2 - t1
        m0_prime = m0 * (sp.r2**2 - sp.r1**2) / (2.0 * q * sp.r2**2 * log_width)
    else:
        m0_prime = m0 / q
    c_prime = (1.0 - m0_prime) / (1.0 + kappa)
    beta_prime = sp.beta * sp.r1 ** (n - 1)
    segs_t = tuple(
        IntervalDomain(map_r_to_t(n, s.a), map_r_to_t(n, s.b))
        for s in sp.weight_r.segments
    )
    weight_t = BangBangWeight(IntervalDomain(t1, t2), kappa, segs_t)
    return ReducedProblem(
        n=n,
        r1=sp.r1,
        r2=sp.r2,
        t_domain=IntervalDomain(t1, t2),
        beta_left=beta_prime,
        beta_right=beta_prime * (sp.r2 / sp.r1) ** (n - 1),
        lambda_factor=sp.r2 ** (2 * n - 2),
        q=q,
        q_bound=bound,
        m0_prime=m0_prime,
        c_prime=c_prime,
        weight_t=weight_t,
    )


def exact_profile_eigenvalue(
    rp: ReducedProblem,
    *,
    scan_start: float = SCAN_START,
    scan_cap: float = SCAN_CAP,
    scan_factor: float = SCAN_FACTOR,
    rel_tol: float = 1e-12,
    rtol: float = 1e-10,
    atol: float = 1e-14,
    sample_resolution: int = 256,
) -> EigenResult:
    """Principal eigenvalue lambda' of the t-problem with the exact profile.

    This solves v'' + lambda' g(t) m(r(t)) r2^(2-2n) v = 0 numerically (the
    profile is smooth within each weight segment but not constant, so the
    transfer-matrix solver does not apply). Dividing the result by
    lambda_factor must reproduce the radial eigenvalue; that equivalence is
    the end-to-end check of the substitution chain.
    """
    bounds, values = piecewise_arrays(rp.weight_t)
    scale = rp.r2 ** (2 - 2 * rp.n)
    floor = 0.0
    if rp.beta_left == 0.0 and rp.beta_right == 0.0:
        floor = NEUMANN_FLOOR

    def F(lam: float) -> tuple[float, int, float]:
        res, zeros, scale_log, status, _, _, _ = _kernels.integrate_shoot(
            1, rp.n, rp.beta_left, rp.beta_right, bounds, values, scale, lam,
            rtol, atol, np.inf, False,
        )
        if status != 0:
            raise StepFailure(f"step size underflow at lam'={lam:.6g}")
        return res, zeros, scale_log

    root, f_root, _zc = find_principal_root(
        F,
        floor,
        scan_start=scan_start,
        scan_cap=scan_cap,
        scan_factor=scan_factor,
        rel_tol=rel_tol,
    )
    res, zeros, scale_log, status, xs, ys, _yps = _kernels.integrate_shoot(
        1, rp.n, rp.beta_left, rp.beta_right, bounds, values, scale, root,
        rtol, atol, (rp.t_domain.b - rp.t_domain.a) / sample_resolution, True,
    )
    if status != 0:
        raise StepFailure(f"step size underflow at lam'={root:.6g}")
    ts = np.asarray(xs)
    vs = np.asarray(ys)
    vs = vs / np.max(np.abs(vs))
    if vs.min() <= 0.0:
        raise RuntimeError(
            "principal eigenfunction is not strictly positive; solver inconsistency"
        )
    return EigenResult(
        lam=root,
        eigenfunction_samples=np.column_stack([ts, vs]),
        zero_count=0,
        residual=f_root,
    )


def reduced_equivalent_lambda(rp: ReducedProblem, **kwargs) -> float:
    """Radial-scale eigenvalue implied by the exact-profile t-problem."""
    return exact_profile_eigenvalue(rp, **kwargs).lam / rp.lambda_factor
