"""Acceptance suites: every closed-form claim checked against an oracle.

Each suite returns a CheckOutcome with a pass/fail verdict and a detail
transcript of the measured numbers, so a failure says exactly what was
measured, not just that a comparison tripped. The `verify` CLI command runs
these and exits nonzero on any failure; the pytest acceptance tests assert
each suite individually.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .optimal_sets import predict_shell_2d, predict_shell_nd
from .radial import ShellProblem, radial_principal_eigenvalue, rayleigh_quotient
from .reduction import (
    exact_profile_eigenvalue,
    map_r_to_t,
    map_t_to_r,
    reduce,
    solid_angle_constant,
)
from .sl_core import RobinProblem1D, principal_eigenvalue, transfer_matrix
from .thresholds import Regime, beta_star, classify_shell
from .verifier import (
    fd_eigenvalue,
    find_threshold,
    sweep_placements_1d,
    sweep_placements_radial,
)
from .weights import (
    AdmissibilityParams,
    BangBangWeight,
    IntervalDomain,
    saturating_interval_weight,
)

# fixed seed for the randomized cross-validation configurations
CROSS_VALIDATION_SEED = 20260822

UNIT = IntervalDomain(0.0, 1.0)


@dataclass(frozen=True)
class CheckOutcome:
    criterion: str
    passed: bool
    detail: str
    seconds: float

    def summary_line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"{verdict} {self.criterion} ({self.seconds:.1f}s)"

    def to_json_dict(self) -> dict:
        return {
            "criterion": self.criterion,
            "passed": self.passed,
            "seconds": self.seconds,
            "detail": self.detail,
        }


class _Recorder:
    """Collects per-check lines and the aggregate verdict."""

    def __init__(self):
        self.lines: list[str] = []
        self.ok = True

    def check(self, passed: bool, line: str) -> None:
        self.ok = self.ok and passed
        self.lines.append(("ok   " if passed else "BAD  ") + line)

    def note(self, line: str) -> None:
        self.lines.append("note " + line)


def suite_beta_star() -> tuple[bool, str]:
    """Closed-form threshold vs its empirical counterpart."""
    rec = _Recorder()
    bs = beta_star(0.5, 1.0)
    rec.check(
        abs(bs - math.pi) <= 1e-12,
        f"beta_star(0.5, 1) = {bs:.17g}, |diff from pi| = {abs(bs - math.pi):.3e} (tol 1e-12)",
    )
    for c, kappa in ((0.5, 1.0), (0.3, 1.0), (0.3, 2.0)):
        closed = beta_star(c, kappa)
        empirical = find_threshold(UNIT, c, kappa, (0.5 * closed, 2.0 * closed))
        rec.check(
            abs(empirical - closed) <= 1e-4,
            f"(c={c}, kappa={kappa}): closed {closed:.10g}, empirical {empirical:.10g}, "
            f"|diff| = {abs(empirical - closed):.3e} (tol 1e-4)",
        )
    return rec.ok, "\n".join(rec.lines)


def suite_regime_1d() -> tuple[bool, str]:
    """201-point sweeps at 2x, 0.5x, and exactly the threshold (c=0.5, kappa=1)."""
    rec = _Recorder()
    c, kappa = 0.5, 1.0
    bs = beta_star(c, kappa)
    grid = 201
    cell = (1.0 - c) / (grid - 1)

    sweep_hi = sweep_placements_1d(UNIT, 2 * bs, 2 * bs, c, kappa, grid)
    centered = 0.5 * (1.0 - c)
    off_hi = abs(sweep_hi.argmin_anchor - centered)
    rec.check(
        off_hi <= cell + 1e-12,
        f"beta = 2*beta*: argmin anchor {sweep_hi.argmin_anchor:.6f}, centered "
        f"prediction {centered:.6f}, offset {off_hi / cell:.2f} cells (tol 1 cell)",
    )

    sweep_lo = sweep_placements_1d(UNIT, 0.5 * bs, 0.5 * bs, c, kappa, grid)
    off_lo = min(abs(sweep_lo.argmin_anchor - 0.0), abs(sweep_lo.argmin_anchor - (1.0 - c)))
    rec.check(
        off_lo <= cell + 1e-12,
        f"beta = beta*/2: argmin anchor {sweep_lo.argmin_anchor:.6f}, flush predictions "
        f"{{0, {1 - c}}}, offset {off_lo / cell:.2f} cells (tol 1 cell)",
    )

    sweep_star = sweep_placements_1d(UNIT, bs, bs, c, kappa, grid)
    flat = sweep_star.lambda_range / sweep_star.lambda_min
    rec.check(
        flat <= 1e-7,
        f"beta = beta*: lambda_range/lambda_min = {flat:.3e} over {grid} placements (tol 1e-7)",
    )
    return rec.ok, "\n".join(rec.lines)


def suite_cross_validation() -> tuple[bool, str]:
    """Exact solver vs finite differences; interval solver vs flat radial solver."""
    rec = _Recorder()
    rng = np.random.default_rng(CROSS_VALIDATION_SEED)
    worst = 0.0
    failures = 0
    for i in range(25):
        c = float(rng.uniform(0.15, 0.6))
        kappa = float(rng.uniform(0.5, 4.0))
        beta = float(rng.uniform(0.1, 6.0))
        anchor = float(rng.uniform(0.0, 1.0)) * (1.0 - c)
        w = saturating_interval_weight(UNIT, kappa, c, anchor)
        problem = RobinProblem1D(UNIT, beta, beta, w)
        lam_exact = principal_eigenvalue(problem, n_samples=8).lam
        lam_fd = fd_eigenvalue(problem, 20000)
        rel = abs(lam_fd - lam_exact) / lam_exact
        worst = max(worst, rel)
        if rel > 1e-5:
            failures += 1
            rec.check(
                False,
                f"config {i}: c={c:.4f} kappa={kappa:.4f} beta={beta:.4f} "
                f"anchor={anchor:.4f}: exact {lam_exact:.12g} vs fd {lam_fd:.12g} "
                f"rel {rel:.3e} (tol 1e-5)",
            )
    rec.check(
        failures == 0,
        f"25 randomized configs (seed {CROSS_VALIDATION_SEED}): exact vs "
        f"finite-difference worst rel diff {worst:.3e} (tol 1e-5)",
    )
    worst_flat = 0.0
    flat_failures = 0
    for i in range(5):
        r1 = float(rng.uniform(0.5, 1.0))
        r2 = r1 + float(rng.uniform(0.5, 2.0))
        c = float(rng.uniform(0.2, 0.5))
        kappa = float(rng.uniform(0.5, 3.0))
        beta = float(rng.uniform(0.1, 4.0))
        dom = IntervalDomain(r1, r2)
        anchor = r1 + float(rng.uniform(0.0, 1.0)) * (1.0 - c) * (r2 - r1)
        w = saturating_interval_weight(dom, kappa, c, anchor)
        problem = RobinProblem1D(dom, beta, beta, w)
        lam_1d = principal_eigenvalue(problem, n_samples=8).lam
        sp = ShellProblem(
            n=1, r1=r1, r2=r2, beta=beta, weight_r=w,
            params=AdmissibilityParams(m0=0.5, kappa=kappa, beta=beta),
        )
        lam_flat = radial_principal_eigenvalue(sp, sample_resolution=4).lam
        rel = abs(lam_flat - lam_1d) / lam_1d
        worst_flat = max(worst_flat, rel)
        if rel > 1e-9:
            flat_failures += 1
            rec.check(
                False,
                f"flat config {i}: ({r1:.3f},{r2:.3f}) c={c:.3f} kappa={kappa:.3f} "
                f"beta={beta:.3f}: interval {lam_1d:.15g} vs radial(n=1) {lam_flat:.15g} "
                f"rel {rel:.3e} (tol 1e-9)",
            )
    rec.check(
        flat_failures == 0,
        f"5 flat-geometry configs: interval solver vs n=1 radial solver worst "
        f"rel diff {worst_flat:.3e} (tol 1e-9)",
    )
    return rec.ok, "\n".join(rec.lines)


def suite_reduction_equivalence() -> tuple[bool, str]:
    """Radial eigenvalue vs exact-profile reduced eigenvalue over placements."""
    rec = _Recorder()
    shells = {2: (1.0, math.e), 3: (1.0, 2.0), 4: (1.0, 1.6)}
    kappa, m0, beta = 1.5, 0.4, 1.0
    frac = 0.3  # t-length of each favorable candidate as a fraction of the t-domain
    for n, (r1, r2) in shells.items():
        t1 = map_r_to_t(n, r1)
        t2 = map_r_to_t(n, r2)
        ell = frac * (t2 - t1)
        worst = 0.0
        for pos in (0.05, 0.275, 0.5, 0.725, 0.95):
            t0 = t1 + pos * (t2 - t1 - ell)
            lo = max(map_t_to_r(n, t0), r1)
            hi = min(map_t_to_r(n, t0 + ell), r2)
            sp = ShellProblem.make(n, r1, r2, beta, kappa, m0, [(lo, hi)])
            lam_radial = radial_principal_eigenvalue(sp, sample_resolution=4).lam
            rp = reduce(sp)
            lam_reduced = exact_profile_eigenvalue(rp).lam / rp.lambda_factor
            rel = abs(lam_reduced - lam_radial) / lam_radial
            worst = max(worst, rel)
        rec.check(
            worst <= 1e-8,
            f"n={n}, shell ({r1:.6g}, {r2:.6g}): worst rel diff over 5 placements "
            f"{worst:.3e} (tol 1e-8)",
        )
    return rec.ok, "\n".join(rec.lines)


def _t_scale(t1: float, t2: float) -> float:
    return max(1.0, abs(t1), abs(t2))


def suite_shell_structure() -> tuple[bool, str]:
    """Pullback geometry of the radial predictions; continuity; sphere constants."""
    rec = _Recorder()
    for n in (2, 3, 5):
        r1, r2 = 1.0, 2.0
        sp0 = ShellProblem.make(n, r1, r2, 1.0, 1.0, 0.5, [(1.2, 1.5)])
        rp = reduce(sp0)
        cp = rp.c_prime
        t1, t2 = rp.t_domain.a, rp.t_domain.b
        ell = cp * (t2 - t1)
        tol = 1e-12 * _t_scale(t1, t2)
        thr = classify_shell(sp0, cp).beta_star_scaled
        predict = predict_shell_2d if n == 2 else predict_shell_nd

        def remake(beta):
            return ShellProblem.make(n, r1, r2, beta, 1.0, 0.5, [(1.2, 1.5)])

        sup = predict(remake(2.0 * thr), cp)
        s = sup.sets[0]
        ta, tb = map_r_to_t(n, s.a), map_r_to_t(n, s.b)
        mid_err = abs(0.5 * (ta + tb) - 0.5 * (t1 + t2))
        len_err = abs((tb - ta) - ell)
        rec.check(
            sup.regime == Regime.SUPERCRITICAL and mid_err <= tol and len_err <= tol,
            f"n={n} supercritical pullback: center error {mid_err:.2e}, "
            f"length error {len_err:.2e} (tol {tol:.1e})",
        )

        sub = predict(remake(0.5 * thr), cp)
        (sa, sb) = sub.sets
        ta1, tb1 = map_r_to_t(n, sa.a), map_r_to_t(n, sa.b)
        ta2, tb2 = map_r_to_t(n, sb.a), map_r_to_t(n, sb.b)
        flush_err = max(abs(ta1 - t1), abs(tb2 - t2))
        len_err = max(abs((tb1 - ta1) - ell), abs((tb2 - ta2) - ell))
        mirror_err = max(
            abs((ta1 - t1) - (t2 - tb2)), abs((tb1 - t1) - (t2 - ta2))
        )
        rec.check(
            sub.regime == Regime.SUBCRITICAL
            and flush_err <= tol
            and len_err <= tol
            and mirror_err <= tol,
            f"n={n} subcritical pullback: flush error {flush_err:.2e}, length error "
            f"{len_err:.2e}, mirror error {mirror_err:.2e} (tol {tol:.1e})",
        )

        crit = predict(remake(thr), cp)
        fam = crit.family
        fam_err = max(
            abs(fam.anchor_lo - t1),
            abs(fam.anchor_hi - (t2 - ell)),
            abs(fam.length - ell),
        )
        rec.check(
            crit.regime == Regime.CRITICAL and fam is not None and fam_err <= tol,
            f"n={n} critical family: anchor-range/length error {fam_err:.2e} (tol {tol:.1e})",
        )

    for c in (0.2, 0.5, 0.8):
        left = beta_star(c, 1.0 - 1e-8)
        right = beta_star(c, 1.0 + 1e-8)
        target = math.pi / (2.0 * c)
        err = max(abs(left - target), abs(right - target))
        rec.check(
            err <= 1e-6,
            f"continuity at kappa=1, c={c}: max branch deviation {err:.3e} (tol 1e-6)",
        )

    s3 = solid_angle_constant(3)
    s4 = solid_angle_constant(4)
    rec.check(
        abs(s3 - 4.0 * math.pi) <= 1e-12,
        f"unit sphere surface n=3: {s3:.17g} vs 4*pi, diff {abs(s3 - 4 * math.pi):.2e}",
    )
    rec.check(
        abs(s4 - 2.0 * math.pi**2) <= 1e-12,
        f"unit sphere surface n=4: {s4:.17g} vs 2*pi^2, diff {abs(s4 - 2 * math.pi**2):.2e}",
    )
    return rec.ok, "\n".join(rec.lines)


def suite_shell_regime() -> tuple[bool, str]:
    """Empirical radial sweeps vs the predicted placement regimes.

    Candidates have fixed t-length (equal weighted volume), matching the set
    families the predictions are stated for. The subcritical left/right
    lambda gap is reported rather than asserted zero.
    """
    rec = _Recorder()
    shells = {2: (1.0, math.e), 3: (1.0, 2.0)}
    grid = 101
    for n, (r1, r2) in shells.items():
        sp0 = ShellProblem.make(n, r1, r2, 1.0, 1.0, 0.5, [(r1 + 0.1, r1 + 0.2)])
        rp = reduce(sp0)
        cp = rp.c_prime
        thr = classify_shell(sp0, cp).beta_star_scaled
        t1, t2 = rp.t_domain.a, rp.t_domain.b
        ell = cp * (t2 - t1)
        cell = (t2 - t1 - ell) / (grid - 1)

        beta_hi = 2.0 * thr
        sp_hi = ShellProblem.make(n, r1, r2, beta_hi, 1.0, 0.5, [(r1 + 0.1, r1 + 0.2)])
        sweep_hi = sweep_placements_radial(sp_hi, cp, grid)
        centered = 0.5 * (t1 + t2) - 0.5 * ell
        off = abs(sweep_hi.argmin_anchor - centered)
        lam_at_pred = min(
            lam for a, lam in sweep_hi.placements if abs(a - centered) <= 0.5001 * cell
        )
        rec.check(
            off <= cell + 1e-12,
            f"n={n} beta=2x threshold ({beta_hi:.6g}): sweep argmin t-anchor "
            f"{sweep_hi.argmin_anchor:.6f} vs centered prediction {centered:.6f}, "
            f"offset {off / cell:.2f} grid cells (tol 1); lambda at argmin "
            f"{sweep_hi.lambda_min:.8g}, at predicted anchor {lam_at_pred:.8g} "
            f"({(lam_at_pred / sweep_hi.lambda_min - 1) * 100:.2f}% above the sweep minimum)",
        )

        beta_lo = 0.5 * thr
        sp_lo = ShellProblem.make(n, r1, r2, beta_lo, 1.0, 0.5, [(r1 + 0.1, r1 + 0.2)])
        sweep_lo = sweep_placements_radial(sp_lo, cp, grid)
        off_lo = min(
            abs(sweep_lo.argmin_anchor - t1),
            abs(sweep_lo.argmin_anchor - (t2 - ell)),
        )
        lam_left = sweep_lo.placements[0][1]
        lam_right = sweep_lo.placements[-1][1]
        rec.check(
            off_lo <= cell + 1e-12,
            f"n={n} beta=0.5x threshold ({beta_lo:.6g}): sweep argmin t-anchor "
            f"{sweep_lo.argmin_anchor:.6f} vs flush predictions {{{t1:.6f}, "
            f"{t2 - ell:.6f}}}, offset {off_lo / cell:.2f} grid cells (tol 1)",
        )
        rec.note(
            f"n={n} subcritical flush tie gap: lambda(inner-flush) = {lam_left:.10g}, "
            f"lambda(outer-flush) = {lam_right:.10g}, rel gap "
            f"{abs(lam_left - lam_right) / min(lam_left, lam_right):.3e}"
        )
    return rec.ok, "\n".join(rec.lines)


def suite_invariants() -> tuple[bool, str]:
    """Structural invariants: determinants, positivity, covariance, quotients, maps."""
    rec = _Recorder()

    # the determinant identity is only representable in doubles while
    # cosh(w h)^2 * eps stays below the tolerance, so growing-branch
    # arguments are capped at w h <= 4 (cosh ~ 27); beyond that the stored
    # entries themselves deviate from unimodularity by ~2 eps cosh^2
    worst_det = 0.0
    cases = 0
    for mu in (-2.0, -1.0, 0.0, 0.5, 1.0, 3.0):
        for h in (0.1, 1.0, 2.7):
            for lam in (0.0, 1.0, 10.0, 100.0):
                if mu * lam < 0 and math.sqrt(-mu * lam) * h > 4.0:
                    continue
                T = transfer_matrix(mu, h, lam)
                worst_det = max(worst_det, abs(T[0, 0] * T[1, 1] - T[0, 1] * T[1, 0] - 1.0))
                cases += 1
    rec.check(
        worst_det <= 1e-12,
        f"transfer matrix determinant: worst |det - 1| = {worst_det:.3e} over {cases} "
        "cases spanning all three branches (tol 1e-12; growing-branch arguments "
        "capped where the identity is representable in doubles)",
    )

    w = BangBangWeight(UNIT, 1.0, (IntervalDomain(0.35, 0.65),))
    res_1d = principal_eigenvalue(RobinProblem1D(UNIT, 1.0, 1.0, w))
    sp = ShellProblem.make(3, 1.0, 2.0, 1.0, 1.0, 0.5, [(1.3, 1.6)])
    res_rad = radial_principal_eigenvalue(sp)
    min_1d = res_1d.eigenfunction_samples[:, 1].min()
    min_rad = res_rad.eigenfunction_samples[:, 1].min()
    rec.check(
        min_1d > 0.0 and res_1d.zero_count == 0 and min_rad > 0.0 and res_rad.zero_count == 0,
        f"positivity: min interval sample {min_1d:.3e}, min radial sample {min_rad:.3e}, "
        "both zero counts 0",
    )

    # exact translation equality needs every endpoint sum to round exactly,
    # so the dyadic case uses dyadic segment endpoints and a dyadic offset
    w_dyadic = BangBangWeight(UNIT, 1.0, (IntervalDomain(0.25, 0.625),))
    base_dyadic = principal_eigenvalue(RobinProblem1D(UNIT, 2.0, 2.0, w_dyadic), n_samples=8).lam
    shifted = principal_eigenvalue(
        RobinProblem1D(IntervalDomain(0.5, 1.5), 2.0, 2.0, w_dyadic.translated(0.5)),
        n_samples=8,
    ).lam
    rec.check(
        shifted == base_dyadic,
        f"translation by 0.5 (all endpoints dyadic): lambda {shifted:.17g} equals "
        "the base value bit for bit",
    )
    base = principal_eigenvalue(RobinProblem1D(UNIT, 2.0, 2.0, w), n_samples=8).lam
    res_s = principal_eigenvalue(
        RobinProblem1D(IntervalDomain(0.3, 1.3), 2.0, 2.0, w.translated(0.3)), n_samples=8
    ).lam
    rel = abs(res_s - base) / base
    rec.check(
        rel <= 1e-12,
        f"translation by 0.3 (generic offset): rel diff {rel:.3e} (tol 1e-12)",
    )

    a, b = 2.0, 5.0
    scale = b - a
    w_scaled = BangBangWeight(
        IntervalDomain(a, b),
        1.0,
        (IntervalDomain(a + 0.35 * scale, a + 0.65 * scale),),
    )
    lam_unit = principal_eigenvalue(RobinProblem1D(UNIT, 2.0, 2.0, w), n_samples=8).lam
    lam_ab = principal_eigenvalue(
        RobinProblem1D(IntervalDomain(a, b), 2.0 / scale, 2.0 / scale, w_scaled),
        n_samples=8,
    ).lam
    rel = abs(lam_ab * scale**2 - lam_unit) / lam_unit
    rec.check(
        rel <= 1e-10,
        f"scaling law (0,1) -> ({a:g},{b:g}): |lambda*(b-a)^2 - lambda_unit| rel "
        f"{rel:.3e} (tol 1e-10)",
    )

    sp_rq = ShellProblem.make(2, 1.0, math.e, 2.0, 1.0, 0.5, [(1.4, 2.0)])
    lam_rq = radial_principal_eigenvalue(sp_rq, sample_resolution=4).lam
    rq = rayleigh_quotient(sp_rq, lam_rq)
    rel_rq = abs(rq - lam_rq) / lam_rq
    rec.check(
        rel_rq <= 1e-6,
        f"Rayleigh quotient consistency: quotient {rq:.10g} vs lambda {lam_rq:.10g}, "
        f"rel {rel_rq:.3e} (tol 1e-6)",
    )

    worst_rt = 0.0
    for n in (2, 3, 4, 5):
        for r in (0.5, 1.0, 2.0, 10.0):
            back = map_t_to_r(n, map_r_to_t(n, r))
            worst_rt = max(worst_rt, abs(back - r) / r)
    rec.check(
        worst_rt <= 1e-14,
        f"substitution round trips: worst rel error {worst_rt:.3e} over 16 cases (tol 1e-14)",
    )
    return rec.ok, "\n".join(rec.lines)


SUITES: dict[str, Callable[[], tuple[bool, str]]] = {
    "beta-star": suite_beta_star,
    "regime-1d": suite_regime_1d,
    "cross-validation": suite_cross_validation,
    "reduction-equivalence": suite_reduction_equivalence,
    "shell-structure": suite_shell_structure,
    "shell-regime": suite_shell_regime,
    "invariants": suite_invariants,
}


def run_suite(name: str) -> CheckOutcome:
    fn = SUITES[name]
    start = time.perf_counter()
    try:
        passed, detail = fn()
    except Exception as exc:  # a crashed suite is a failed suite, not a crashed run
        passed = False
        detail = f"BAD  suite aborted: {type(exc).__name__}: {exc}"
    return CheckOutcome(
        criterion=name,
        passed=passed,
        detail=detail,
        seconds=time.perf_counter() - start,
    )


def run(names: list[str] | None = None) -> list[CheckOutcome]:
    if names is None:
        names = list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s): {', '.join(unknown)}")
    return [run_suite(n) for n in names]
