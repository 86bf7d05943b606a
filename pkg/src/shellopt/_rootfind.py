"""Principal-root search on a shooting residual.

The residual F is cheap (closed-form matrices or a fast RK shot), so the
search favors robustness: geometric bracket scan for the first sign change,
bisection to relative tolerance, short secant polish. The principal root is
recognized by a zero interior-zero count of the shooting solution; any root
with zeros is one of the higher eigenvalues and triggers a restart from the
bottom of the scan range (which happens when a warm start overshoots).
"""

from __future__ import annotations

import math
from typing import Callable

from .errors import NoRootInRange

# F(lam) -> (residual, zero_count, scale_log); the true residual is
# residual * exp(scale_log) with scale_log >= 0.
ResidualFn = Callable[[float], tuple[float, int, float]]

SCAN_START = 1e-6
SCAN_CAP = 1e8
SCAN_FACTOR = 1.25
REL_TOL = 1e-12
ABS_TOL = 1e-14  # absolute floor near zero

# fallback factor when a coarse scan brackets two roots at once and
# bisection lands on a non-principal one
_FINE_FACTOR = 1.06


def _log_mag(f: float, scale_log: float) -> float:
    if f == 0.0:
        return -math.inf
    return scale_log + math.log(abs(f))


def _refine(F: ResidualFn, lo, f_lo, sl_lo, hi, f_hi, sl_hi, rel_tol, abs_tol):
    """Bisection on a sign-change bracket, then one guarded secant step.

    Returns (root, f, zero_count, scale_log) evaluated at the returned point.
    """
    zc_lo = zc_hi = None
    while hi - lo > rel_tol * hi + abs_tol:
        mid = 0.5 * (lo + hi)
        if not (lo < mid < hi):
            break
        f_mid, zc_mid, sl_mid = F(mid)
        if f_mid == 0.0:
            return mid, f_mid, zc_mid, sl_mid
        if (f_lo < 0.0) != (f_mid < 0.0):
            hi, f_hi, sl_hi, zc_hi = mid, f_mid, sl_mid, zc_mid
        else:
            lo, f_lo, sl_lo, zc_lo = mid, f_mid, sl_mid, zc_mid
    candidates = []
    if zc_lo is not None:
        candidates.append((lo, f_lo, zc_lo, sl_lo))
    if zc_hi is not None:
        candidates.append((hi, f_hi, zc_hi, sl_hi))
    if f_hi != f_lo:
        x = hi - f_hi * (hi - lo) / (f_hi - f_lo)
        if lo < x < hi:
            f_x, zc_x, sl_x = F(x)
            candidates.append((x, f_x, zc_x, sl_x))
    if not candidates:
        # degenerate bracket (endpoints never re-evaluated); take the midpoint
        mid = 0.5 * (lo + hi)
        f_mid, zc_mid, sl_mid = F(mid)
        candidates.append((mid, f_mid, zc_mid, sl_mid))
    return min(candidates, key=lambda cand: _log_mag(cand[1], cand[3]))


def _scan(F, floor, start, cap, factor, rel_tol, abs_tol):
    """First refined root of F on (floor, cap] scanning geometrically from start."""
    lo = floor
    f_lo, _, sl_lo = F(lo)
    lam = max(start, floor * (1.0 + 1e-12), 1e-300)
    while True:
        f, zc, sl = F(lam)
        if f == 0.0:
            return lam, f, zc, sl
        if f_lo * f < 0.0 or (f_lo == 0.0 and lam > floor):
            return _refine(F, lo, f_lo, sl_lo, lam, f, sl, rel_tol, abs_tol)
        lo, f_lo, sl_lo = lam, f, sl
        if lam >= cap:
            raise NoRootInRange(cap)
        lam = min(lam * factor, cap)


def find_principal_root(
    F: ResidualFn,
    floor: float = 0.0,
    *,
    scan_start: float = SCAN_START,
    scan_cap: float = SCAN_CAP,
    scan_factor: float = SCAN_FACTOR,
    rel_tol: float = REL_TOL,
    abs_tol: float = ABS_TOL,
) -> tuple[float, float, int]:
    """Smallest root of F above floor whose shooting solution has no zeros.

    scan_start above the default warm-starts the scan near a previously
    known eigenvalue; overshoot is detected by a nonzero zero count and
    falls back to a cold scan.
    """
    root, f, zc, _sl = _scan(F, floor, scan_start, scan_cap, scan_factor, rel_tol, abs_tol)
    if zc == 0:
        return root, f, zc
    if scan_start > SCAN_START:
        root, f, zc, _sl = _scan(F, floor, SCAN_START, scan_cap, scan_factor, rel_tol, abs_tol)
        if zc == 0:
            return root, f, zc
    # coarse bracket swallowed an even cluster of roots; rescan finely
    root, f, zc, _sl = _scan(F, floor, SCAN_START, scan_cap, _FINE_FACTOR, rel_tol, abs_tol)
    if zc == 0:
        return root, f, zc
    raise NoRootInRange(scan_cap, "scan found only non-principal residual roots")
