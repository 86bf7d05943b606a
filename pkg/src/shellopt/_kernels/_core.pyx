# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: exact piecewise propagation, adaptive RK shooting,
and tridiagonal pencil inertia counts.

Mirrors _kernels/pure.py operation for operation (same floating-point
order, no contraction) so the two backends agree bitwise; see the parity
tests. Any semantic change must land in both files.
"""

from libc.math cimport sqrt, sin, cos, cosh, sinh, exp, log, atan2, floor, fabs, pow

BACKEND = "compiled"

cdef double _RENORM = 1e100
cdef double _HYP_SPLIT = 300.0
cdef double _PI = 3.141592653589793


def shoot_piecewise(double beta_left, double beta_right,
                    double[::1] bounds, double[::1] values, double lam):
    cdef double u = 1.0
    cdef double up = beta_left
    cdef long zeros = 0
    cdef double scale_log = 0.0
    cdef Py_ssize_t i, n = values.shape[0]
    cdef double h, w, om, th, c, s, un, upn, phi, a_, b_, sgn0, mag, ch, sh
    cdef long k
    for i in range(n):
        h = bounds[i + 1] - bounds[i]
        w = lam * values[i]
        if w > 0.0:
            om = sqrt(w)
            th = om * h
            c = cos(th)
            s = sin(th)
            un = u * c + up * (s / om)
            upn = -u * om * s + up * c
            phi = atan2(up / om, u)
            a_ = (-phi - 0.5 * _PI) / _PI
            b_ = (th - phi - 0.5 * _PI) / _PI
            k = <long>floor(b_) - <long>floor(a_)
            if k > 0:
                zeros += k
        else:
            sgn0 = u if u != 0.0 else up
            if w < 0.0:
                om = sqrt(-w)
                th = om * h
                if th > _HYP_SPLIT:
                    un = u + up / om
                    upn = u * om + up
                    scale_log += th - log(2.0)
                else:
                    ch = cosh(th)
                    sh = sinh(th)
                    un = u * ch + up * (sh / om)
                    upn = u * om * sh + up * ch
            else:
                un = u + up * h
                upn = up
            if un == 0.0 or (sgn0 > 0.0) != (un > 0.0):
                zeros += 1
        mag = fabs(un) + fabs(upn)
        if mag > _RENORM:
            un /= mag
            upn /= mag
            scale_log += log(mag)
        u = un
        up = upn
    return up + beta_right * u, zeros, u, up, scale_log


cdef inline double _rhs_ypp(int mode, int n, double lam, double scale,
                            double v, double x, double y, double yp):
    cdef double g
    if mode == 0:
        if n == 1:
            return -lam * v * y
        return -((n - 1.0) / x) * yp - lam * v * y
    if n == 2:
        g = exp(2.0 * x)
    else:
        g = pow((2.0 - n) * x, (2.0 * n - 2.0) / (2.0 - n))
    return -lam * scale * g * v * y


cdef double _C2 = 0.2, _C3 = 0.3, _C4 = 0.8, _C5 = 8.0 / 9.0
cdef double _A21 = 0.2
cdef double _A31 = 3.0 / 40.0, _A32 = 9.0 / 40.0
cdef double _A41 = 44.0 / 45.0, _A42 = -56.0 / 15.0, _A43 = 32.0 / 9.0
cdef double _A51 = 19372.0 / 6561.0, _A52 = -25360.0 / 2187.0
cdef double _A53 = 64448.0 / 6561.0, _A54 = -212.0 / 729.0
cdef double _A61 = 9017.0 / 3168.0, _A62 = -355.0 / 33.0, _A63 = 46732.0 / 5247.0
cdef double _A64 = 49.0 / 176.0, _A65 = -5103.0 / 18656.0
cdef double _B1 = 35.0 / 384.0, _B3 = 500.0 / 1113.0, _B4 = 125.0 / 192.0
cdef double _B5 = -2187.0 / 6784.0, _B6 = 11.0 / 84.0
cdef double _E1 = 71.0 / 57600.0, _E3 = -71.0 / 16695.0, _E4 = 71.0 / 1920.0
cdef double _E5 = -17253.0 / 339200.0, _E6 = 22.0 / 525.0, _E7 = -1.0 / 40.0


def integrate_shoot(int mode, int n, double beta_left, double beta_right,
                    double[::1] bounds, double[::1] values, double scale,
                    double lam, double rtol, double atol, double max_step,
                    bint record):
    cdef double y = 1.0
    cdef double yp = beta_left
    cdef long zeros = 0
    cdef double scale_log = 0.0
    cdef double cur_sign = 1.0
    cdef int status = 0
    cdef Py_ssize_t i, j, npieces = values.shape[0]
    cdef double x0, x1, v, x, wmag, gmid, h, hmin
    cdef double k1y, k1p, k2y, k2p, k3y, k3p, k4y, k4p, k5y, k5p, k6y, k6p, k7y, k7p
    cdef double ya, pa, yn, pn, ey, ep, sy, sp, err, fac, mag, s
    cdef bint last
    xs = [bounds[0]] if record else []
    ys = [y] if record else []
    yps = [yp] if record else []
    for i in range(npieces):
        x0 = bounds[i]
        x1 = bounds[i + 1]
        v = values[i]
        x = x0
        if mode == 0:
            wmag = fabs(lam * v)
        else:
            if n == 2:
                gmid = exp(2.0 * 0.5 * (x0 + x1))
            else:
                gmid = pow((2.0 - n) * 0.5 * (x0 + x1), (2.0 * n - 2.0) / (2.0 - n))
            wmag = fabs(lam * scale * gmid * v)
        h = min(max_step, x1 - x0, 0.5 / sqrt(wmag + 1.0))
        k1y = yp
        k1p = _rhs_ypp(mode, n, lam, scale, v, x, y, yp)
        hmin = 1e-14 * max(fabs(x0), fabs(x1), 1.0)
        while x < x1:
            last = False
            if h >= x1 - x:
                h = x1 - x
                last = True
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
            k7y = pn
            k7p = _rhs_ypp(mode, n, lam, scale, v, x + h, yn, pn)
            ey = h * (_E1 * k1y + _E3 * k3y + _E4 * k4y + _E5 * k5y + _E6 * k6y + _E7 * k7y)
            ep = h * (_E1 * k1p + _E3 * k3p + _E4 * k4p + _E5 * k5p + _E6 * k6p + _E7 * k7p)
            sy = atol + rtol * max(fabs(y), fabs(yn))
            sp = atol + rtol * max(fabs(yp), fabs(pn))
            err = sqrt(0.5 * ((ey / sy) * (ey / sy) + (ep / sp) * (ep / sp)))
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
                mag = fabs(y) + fabs(yp)
                if mag > _RENORM:
                    y /= mag
                    yp /= mag
                    k1y /= mag
                    k1p /= mag
                    scale_log += log(mag)
                    if record:
                        for j in range(len(ys)):
                            ys[j] = ys[j] / mag
                            yps[j] = yps[j] / mag
                if record:
                    xs.append(x)
                    ys.append(y)
                    yps.append(yp)
                fac = 5.0 if err == 0.0 else min(5.0, max(0.2, 0.9 * pow(err, -0.2)))
            else:
                fac = max(0.2, 0.9 * pow(err, -0.2))
            h *= fac
            if h > max_step:
                h = max_step
            if h < hmin and x < x1:
                status = 1
                break
        if status != 0:
            break
    return yp + beta_right * y, zeros, scale_log, status, xs, ys, yps


def pencil_neg_count(double[::1] d, double[::1] e, double[::1] b, double lam):
    cdef long count = 0
    cdef Py_ssize_t i, nn = d.shape[0]
    cdef double p = d[0] - lam * b[0]
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
