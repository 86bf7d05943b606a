"""Pure-Python reference kernels.

Same contracts as the compiled module ``_core``; selected when the extension
is unavailable or SHELLOPT_PURE=1 is set. Readable and slow, and the source
of truth for what the Cython mirror must compute (the parity tests compare
the two backends call by call).

All kernels return plain floats/ints/lists; array conversion happens in the
calling layer.
"""

from __future__ import annotations

import math

BACKEND = "pure"

# State renormalization threshold. Hyperbolic propagation grows like
# exp(omega*h); rescaling (u, u') preserves residual sign and zero counts.
_RENORM = 1e100
_LOG_RENORM = math.log(_RENORM)

# Above this phase, cosh/sinh overflow is close; factor exp(theta)/2 out.
_HYP_SPLIT = 300.0


def shoot_piecewise(beta_left, beta_right, bounds, values, lam):
    """Propagate u'' + lam*m(x)*u = 0 through constant-weight pieces.

    Starts from (u, u') = (1, beta_left) at bounds[0], applies the exact
    2x2 propagator of each piece, counts interior zeros of u in closed form.

    Returns (residual, zero_count, u_end, up_end, scale_log) where the true
    final state is exp(scale_log) * (u_end, up_end) and
    residual = u'(b) + beta_right*u(b), up to the same positive factor.
    """
    u = 1.0
    up = float(beta_left)
    zeros = 0
    scale_log = 0.0
    n = len(values)
    for i in range(n):
        h = bounds[i + 1] - bounds[i]
        w = lam * values[i]
        if w > 0.0:
            om = math.sqrt(w)
            th = om * h
            c = math.cos(th)
            s = math.sin(th)
            un = u * c + up * (s / om)
            upn = -u * om * s + up * c
            # zeros of u0*cos(om x) + (up0/om)*sin(om x) in (0, h]:
            # integers k with A < k <= B, i.e. floor(B) - floor(A)
            phi = math.atan2(up / om, u)
            a_ = (-phi - 0.5 * math.pi) / math.pi
            b_ = (th - phi - 0.5 * math.pi) / math.pi
            k = int(math.floor(b_)) - int(math.floor(a_))
            if k > 0:
                zeros += k
        else:
            # at most one zero: compare entry sign (right limit) to exit sign
            sgn0 = u if u != 0.0 else up
            if w < 0.0:
                om = math.sqrt(-w)
                th = om * h
                if th > _HYP_SPLIT:
                    # cosh th ~ sinh th ~ exp(th)/2; factor it into scale_log
                    un = u + up / om
                    upn = u * om + up
                    scale_log += th - math.log(2.0)
                else:
                    ch = math.cosh(th)
                    sh = math.sinh(th)
                    un = u * ch + up * (sh / om)
                    upn = u * om * sh + up * ch
            else:
                un = u + up * h
                upn = up
            if un == 0.0 or (sgn0 > 0.0) != (un > 0.0):
                zeros += 1
        mag = abs(un) + abs(upn)
        if mag > _RENORM:
            un /= mag
            upn /= mag
            scale_log += math.log(mag)
        u = un
        up = upn
    return up + beta_right * u, zeros, u, up, scale_log


def _rhs_ypp(mode, n, lam, scale, v, x, y, yp):
    # mode 0: radial  u'' = -((n-1)/x) u' - lam*v*u
    # mode 1: reduced u'' = -lam*scale*g(x)*v*u with g the change-of-variables
    #         factor r(x)^(2n-2) (exp(2x) for n=2, ((2-n)x)^((2n-2)/(2-n)) else)
    if mode == 0:
        if n == 1:
            return -lam * v * y
        return -((n - 1.0) / x) * yp - lam * v * y
    if n == 2:
        g = math.exp(2.0 * x)
    else:
        g = ((2.0 - n) * x) ** ((2.0 * n - 2.0) / (2.0 - n))
    return -lam * scale * g * v * y


# Dormand-Prince 5(4) coefficients
_C2, _C3, _C4, _C5 = 0.2, 0.3, 0.8, 8.0 / 9.0
_A21 = 0.2
_A31, _A32 = 3.0 / 40.0, 9.0 / 40.0
_A41, _A42, _A43 = 44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0
_A51, _A52, _A53, _A54 = 19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0
_A61, _A62, _A63, _A64, _A65 = (
    9017.0 / 3168.0,
    -355.0 / 33.0,
    46732.0 / 5247.0,
    49.0 / 176.0,
    -5103.0 / 18656.0,
)
_B1, _B3, _B4, _B5, _B6 = 35.0 / 384.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0
# 5th-order minus embedded 4th-order weights (error estimator)
_E1, _E3, _E4, _E5, _E6, _E7 = (
    71.0 / 57600.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
)


def integrate_shoot(
    mode,
    n,
    beta_left,
    beta_right,
    bounds,
    values,
    scale,
    lam,
    rtol,
    atol,
    max_step,
    record,
):
    """Adaptive RK5(4) shoot of the smooth variable-coefficient problems.

    Integrates piece by piece (weight discontinuities are forced step points),
    starting from (y, y') = (1, beta_left) at bounds[0]. Counts sign changes
    of y at accepted steps; the weight renormalization mirrors shoot_piecewise.

    Returns (residual, zero_count, scale_log, status, xs, ys, yps); status 0
    means success, 1 step-size underflow. The sample lists are empty unless
    record is true.
    """
    y = 1.0
    yp = float(beta_left)
    zeros = 0
    scale_log = 0.0
    cur_sign = 1.0  # y starts at 1
    xs = [bounds[0]] if record else []
    ys = [y] if record else []
    yps = [yp] if record else []
    npieces = len(values)
    status = 0
    for i in range(npieces):
        x0 = bounds[i]
        x1 = bounds[i + 1]
        v = values[i]
        x = x0
        # frequency-informed first step keeps early rejections rare
        if mode == 0:
            wmag = abs(lam * v)
        else:
            gmid = math.exp(2.0 * 0.5 * (x0 + x1)) if n == 2 else (
                ((2.0 - n) * 0.5 * (x0 + x1)) ** ((2.0 * n - 2.0) / (2.0 - n))
            )
            wmag = abs(lam * scale * gmid * v)
        h = min(max_step, x1 - x0, 0.5 / math.sqrt(wmag + 1.0))
        k1y = yp
        k1p = _rhs_ypp(mode, n, lam, scale, v, x, y, yp)
        hmin = 1e-14 * max(abs(x0), abs(x1), 1.0)
        while x < x1:
            last = False
            if h >= x1 - x:
                h = x1 - x
                last = True
            # stages
            ya = y + h * _A21 * k1y
            pa = yp + h * _A21 * k1p
            k2y = pa
            k2p = _rhs_ypp(mode, n, lam, scale, v, x + _C2 * h, ya, pa)
            ya = y + h * (_A31 * k1y + _A32 * k2y)
            pa = yp + h * (_A31 * k1p + _A32 * k2p)
            k3y = pa
            k3p = _rhs_ypp(mode, n, lam, scale, v, x + _C3 * h, ya, pa)
            ya = y + h * (_A41 * k1y + _A42 * k2y + _A43 * k3y)
            pa = yp + h * (_A41 * k1p + _A42 * k2p + _A43 * k3p)
            k4y = pa
            k4p = _rhs_ypp(mode, n, lam, scale, v, x + _C4 * h, ya, pa)
            ya = y + h * (_A51 * k1y + _A52 * k2y + _A53 * k3y + _A54 * k4y)
            pa = yp + h * (_A51 * k1p + _A52 * k2p + _A53 * k3p + _A54 * k4p)
            k5y = pa
            k5p = _rhs_ypp(mode, n, lam, scale, v, x + _C5 * h, ya, pa)
            ya = y + h * (_A61 * k1y + _A62 * k2y + _A63 * k3y + _A64 * k4y + _A65 * k5y)
            pa = yp + h * (_A61 * k1p + _A62 * k2p + _A63 * k3p + _A64 * k4p + _A65 * k5p)
            k6y = pa
            k6p = _rhs_ypp(mode, n, lam, scale, v, x + h, ya, pa)
            yn = y + h * (_B1 * k1y + _B3 * k3y + _B4 * k4y + _B5 * k5y + _B6 * k6y)
            pn = yp + h * (_B1 * k1p + _B3 * k3p + _B4 * k4p + _B5 * k5p + _B6 * k6p)
            k7y = pn  # FSAL
            k7p = _rhs_ypp(mode, n, lam, scale, v, x + h, yn, pn)
            ey = h * (_E1 * k1y + _E3 * k3y + _E4 * k4y + _E5 * k5y + _E6 * k6y + _E7 * k7y)
            ep = h * (_E1 * k1p + _E3 * k3p + _E4 * k4p + _E5 * k5p + _E6 * k6p + _E7 * k7p)
            sy = atol + rtol * max(abs(y), abs(yn))
            sp = atol + rtol * max(abs(yp), abs(pn))
            err = math.sqrt(0.5 * ((ey / sy) * (ey / sy) + (ep / sp) * (ep / sp)))
            if err <= 1.0:
                x = x1 if last else x + h
                y = yn
                yp = pn
                k1y = k7y
                k1p = k7p
                if y != 0.0:
                    s = 1.0 if y > 0.0 else -1.0
                    if cur_sign != 0.0 and s != cur_sign:
                        zeros += 1
                    cur_sign = s
                else:
                    zeros += 1
                    cur_sign = 0.0
                mag = abs(y) + abs(yp)
                if mag > _RENORM:
                    y /= mag
                    yp /= mag
                    k1y /= mag
                    k1p /= mag
                    scale_log += math.log(mag)
                    if record:
                        for j in range(len(ys)):
                            ys[j] /= mag
                            yps[j] /= mag
                if record:
                    xs.append(x)
                    ys.append(y)
                    yps.append(yp)
                fac = 5.0 if err == 0.0 else min(5.0, max(0.2, 0.9 * err ** -0.2))
            else:
                fac = max(0.2, 0.9 * err ** -0.2)
            h *= fac
            if h > max_step:
                h = max_step
            if h < hmin and x < x1:
                status = 1
                break
        if status != 0:
            break
    return yp + beta_right * y, zeros, scale_log, status, xs, ys, yps


def pencil_neg_count(d, e, b, lam):
    """Negative-pivot count of LDL^T for the tridiagonal A - lam*B.

    d: diagonal of A, e: off-diagonal of A, b: diagonal of B (B diagonal).
    By Sylvester inertia this counts pencil eigenvalues below lam (valid for
    lam > 0 when A is positive definite and B indefinite diagonal).
    """
    count = 0
    nn = len(d)
    p = d[0] - lam * b[0]
    if p == 0.0:
        p = -1e-300
    if p < 0.0:
        count += 1
    for i in range(1, nn):
        p = (d[i] - lam * b[i]) - e[i - 1] * e[i - 1] / p
        if p == 0.0:
            p = -1e-300
        if p < 0.0:
            count += 1
    return count
