import math

import numpy as np
import pytest

from shellopt import (
    BangBangWeight,
    ConstraintViolated,
    IntervalDomain,
    NoRootInRange,
    RobinProblem1D,
    fd_eigenvalue,
    principal_eigenvalue,
    shoot,
    transfer_matrix,
)

UNIT = IntervalDomain(0.0, 1.0)

# smallest positive root s of tan(s/4) = tanh(3s/4), computed to 30 digits by
# bisection on the matching condition; lambda = s^2
LAMBDA_QUARTER_NEUMANN = 9.63202598413637322


def _problem(segments, beta_left, beta_right, kappa=1.0, domain=UNIT):
    segs = tuple(IntervalDomain(a, b) for a, b in segments)
    return RobinProblem1D(domain, beta_left, beta_right, BangBangWeight(domain, kappa, segs))


def test_transfer_matrix_shear():
    for mu in (-3.0, 0.0, 2.0):
        T = transfer_matrix(mu, 0.7, 0.0)
        assert np.array_equal(T, np.array([[1.0, 0.7], [0.0, 1.0]]))


def test_transfer_matrix_half_period():
    T = transfer_matrix(1.0, 1.0, math.pi**2)
    assert np.allclose(T, [[-1.0, 0.0], [0.0, -1.0]], atol=1e-12)


def test_transfer_matrix_hyperbolic():
    T = transfer_matrix(-1.0, 1.0, 1.0)
    ref = [[math.cosh(1.0), math.sinh(1.0)], [math.sinh(1.0), math.cosh(1.0)]]
    assert np.allclose(T, ref, rtol=1e-15, atol=0.0)


def test_transfer_matrix_determinant():
    for mu in (-2.0, -0.5, 0.0, 1.0, 3.0):
        for h in (0.05, 0.8, 2.0):
            for lam in (0.0, 0.7, 4.0):
                T = transfer_matrix(mu, h, lam)
                assert abs(T[0, 0] * T[1, 1] - T[0, 1] * T[1, 0] - 1.0) <= 1e-12


def test_shoot_affine_at_lambda_zero():
    # u(x) = 1 + x solves u'' = 0 with u(0)=1, u'(0)=beta_left=1
    p = _problem([(0.3, 0.6)], 1.0, 1.0)
    res = shoot(p, 0.0)
    assert res.residual == pytest.approx(3.0, abs=1e-14)
    assert res.zero_count == 0


def test_shoot_neumann_constant_mode():
    p = _problem([(0.0, 0.25)], 0.0, 0.0)
    res = shoot(p, 0.0)
    assert res.residual == 0.0
    assert res.zero_count == 0
    assert res.final_state == (1.0, 0.0)


def test_quarter_interval_neumann_eigenvalue():
    p = _problem([(0.0, 0.25)], 0.0, 0.0)
    res = principal_eigenvalue(p)
    assert res.lam == pytest.approx(LAMBDA_QUARTER_NEUMANN, rel=1e-12)
    assert res.zero_count == 0


def test_eigenfunction_positive_and_normalized():
    p = _problem([(0.0, 0.25)], 0.0, 0.0)
    res = principal_eigenvalue(p)
    u = res.eigenfunction_samples[:, 1]
    assert u.min() > 0.0
    assert u.max() == pytest.approx(1.0, abs=1e-15)
    xs = res.eigenfunction_samples[:, 0]
    assert xs[0] == 0.0 and xs[-1] == 1.0
    # segment endpoint present among the samples
    assert np.any(xs == 0.25)


def test_reflection_symmetry():
    for c in (0.2, 0.4):
        for kappa in (1.0, 2.5):
            left = _problem([(0.0, c)], 1.5, 1.5, kappa)
            right = _problem([(1.0 - c, 1.0)], 1.5, 1.5, kappa)
            l1 = principal_eigenvalue(left, n_samples=8).lam
            l2 = principal_eigenvalue(right, n_samples=8).lam
            assert l2 == pytest.approx(l1, rel=1e-12)


def test_asymmetric_beta_breaks_reflection():
    left = _problem([(0.0, 0.3)], 0.5, 4.0)
    right = _problem([(0.7, 1.0)], 0.5, 4.0)
    l1 = principal_eigenvalue(left, n_samples=8).lam
    l2 = principal_eigenvalue(right, n_samples=8).lam
    assert abs(l1 - l2) / l1 > 1e-3


def test_monotone_in_favorable_set():
    small = _problem([(0.3, 0.5)], 1.0, 1.0)
    large = _problem([(0.3, 0.6)], 1.0, 1.0)
    assert principal_eigenvalue(large, n_samples=8).lam <= principal_eigenvalue(
        small, n_samples=8
    ).lam


def test_translation_exact_dyadic():
    w = BangBangWeight(UNIT, 1.0, (IntervalDomain(0.25, 0.625),))
    base = principal_eigenvalue(RobinProblem1D(UNIT, 2.0, 2.0, w), n_samples=8).lam
    dom = IntervalDomain(0.5, 1.5)
    moved = principal_eigenvalue(
        RobinProblem1D(dom, 2.0, 2.0, w.translated(0.5)), n_samples=8
    ).lam
    assert moved == base


def test_scaling_law():
    w = BangBangWeight(UNIT, 1.0, (IntervalDomain(0.35, 0.65),))
    lam_unit = principal_eigenvalue(RobinProblem1D(UNIT, 2.0, 2.0, w), n_samples=8).lam
    a, b = 2.0, 5.0
    s = b - a
    dom = IntervalDomain(a, b)
    w_s = BangBangWeight(dom, 1.0, (IntervalDomain(a + 0.35 * s, a + 0.65 * s),))
    lam_s = principal_eigenvalue(
        RobinProblem1D(dom, 2.0 / s, 2.0 / s, w_s), n_samples=8
    ).lam
    assert lam_s * s**2 == pytest.approx(lam_unit, rel=1e-10)


def test_finite_difference_cross_check():
    p = _problem([(0.35, 0.65)], 1.0, 1.0)
    lam = principal_eigenvalue(p, n_samples=8).lam
    assert fd_eigenvalue(p, 20000) == pytest.approx(lam, rel=1e-6)


def test_neumann_zero_mean_rejected():
    p = _problem([(0.0, 0.5)], 0.0, 0.0)  # mean weight exactly 0
    with pytest.raises(ConstraintViolated):
        principal_eigenvalue(p)


def test_scan_cap_reported():
    p = _problem([(0.3, 0.6)], 1.0, 1.0)
    with pytest.raises(NoRootInRange) as exc:
        principal_eigenvalue(p, scan_cap=10.0)
    assert exc.value.cap == 10.0


def test_robin_problem_validation():
    with pytest.raises(ValueError):
        RobinProblem1D(UNIT, -0.5, 1.0, BangBangWeight(UNIT, 1.0, (IntervalDomain(0.0, 0.25),)))
    other = IntervalDomain(0.0, 2.0)
    with pytest.raises(ValueError):
        RobinProblem1D(UNIT, 1.0, 1.0, BangBangWeight(other, 1.0, (IntervalDomain(0.0, 0.25),)))
