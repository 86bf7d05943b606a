"""Finite-difference oracle, empirical threshold search, placement sweeps.

These are the independent checks: none of them go through the
transfer-matrix closed forms they are used to validate.
"""

import math

import pytest

from shellopt import (
    BangBangWeight,
    IntervalDomain,
    NoSignChangeInBracket,
    RobinProblem1D,
    ShellProblem,
    beta_star,
    fd_eigenvalue,
    fd_eigenvalue_single,
    find_threshold,
    principal_eigenvalue,
    saturating_interval_weight,
    sweep_placements_1d,
    sweep_placements_radial,
)

UNIT = IntervalDomain(0.0, 1.0)


def _problem(segments, beta, kappa=1.0):
    segs = tuple(IntervalDomain(a, b) for a, b in segments)
    return RobinProblem1D(UNIT, beta, beta, BangBangWeight(UNIT, kappa, segs))


def test_fd_second_order_convergence():
    # halving h must shrink the error by ~4; the ratio of successive
    # differences sits near 4 once the mesh resolves the weight jumps
    p = _problem([(0.35, 0.65)], 1.0)
    l1 = fd_eigenvalue_single(p, 501)
    l2 = fd_eigenvalue_single(p, 1001)
    l3 = fd_eigenvalue_single(p, 2001)
    ratio = abs(l1 - l2) / abs(l2 - l3)
    assert 3.0 < ratio < 5.0


def test_fd_matches_exact_solver():
    p = _problem([(0.35, 0.65)], 1.0)
    exact = principal_eigenvalue(p, n_samples=8).lam
    assert fd_eigenvalue(p, 20000) == pytest.approx(exact, rel=1e-6)


def test_fd_neumann_negative_mean():
    # beta = 0 with mean weight -0.4: the principal eigenvalue is strictly
    # positive, not the trivial constant mode at zero
    p = _problem([(0.0, 0.3)], 0.0)
    lam = fd_eigenvalue(p, 4000)
    assert lam > 1.0
    exact = principal_eigenvalue(p, n_samples=8).lam
    assert lam == pytest.approx(exact, rel=1e-6)


def test_fd_richardson_beats_single_mesh():
    p = _problem([(0.25, 0.5)], 2.0)
    exact = principal_eigenvalue(p, n_samples=8).lam
    err_single = abs(fd_eigenvalue_single(p, 2001) - exact)
    err_rich = abs(fd_eigenvalue(p, 2001) - exact)
    assert err_rich < 0.1 * err_single


def test_empirical_threshold_matches_formula():
    c, kappa = 0.5, 1.0
    bs = beta_star(c, kappa)
    thr = find_threshold(UNIT, c, kappa, (0.5 * bs, 2.0 * bs))
    assert thr == pytest.approx(bs, abs=1e-4)


def test_threshold_scales_with_interval_length():
    c, kappa = 0.4, 2.0
    bs = beta_star(c, kappa)
    thr_unit = find_threshold(UNIT, c, kappa, (0.5 * bs, 2.0 * bs))
    dom2 = IntervalDomain(0.0, 2.0)
    thr_two = find_threshold(dom2, c, kappa, (0.25 * bs, bs))
    assert abs(thr_two - 0.5 * thr_unit) <= 2e-6


def test_threshold_needs_sign_change():
    c, kappa = 0.5, 1.0
    bs = beta_star(c, kappa)
    with pytest.raises(NoSignChangeInBracket):
        find_threshold(UNIT, c, kappa, (0.05 * bs, 0.5 * bs))


def test_sweep_reflection_tie_at_neumann():
    # beta = 0 on a symmetric problem: the two flush placements are mirror
    # images, so the sweep's first and last anchors must tie
    res = sweep_placements_1d(UNIT, 0.0, 0.0, 0.3, 1.0, 21)
    lam_first = res.placements[0][1]
    lam_last = res.placements[-1][1]
    assert lam_last == pytest.approx(lam_first, rel=1e-10)
    assert res.argmin_anchor in (res.placements[0][0], res.placements[-1][0])


def test_sweep_grid_refinement_stability():
    res_c = sweep_placements_1d(UNIT, 7.0, 7.0, 0.5, 1.0, 26)
    res_f = sweep_placements_1d(UNIT, 7.0, 7.0, 0.5, 1.0, 51)
    assert abs(res_f.argmin_anchor - res_c.argmin_anchor) <= res_c.grid_cell() + 1e-12
    # supercritical: the minimizer sits at the centered anchor
    assert res_f.argmin_anchor == pytest.approx(0.25, abs=res_f.grid_cell() + 1e-12)


def test_sweep_result_accessors():
    res = sweep_placements_1d(UNIT, 1.0, 1.0, 0.5, 1.0, 11)
    assert res.grid_cell() == pytest.approx(0.05, rel=1e-12)
    rows = res.csv_rows()
    assert len(rows) == 11
    assert rows[0][0] == 0.0 and rows[-1][0] == 0.5
    assert res.anchor_variable == "x"
    doc = res.to_json_dict()
    assert doc["argmin_anchor"] == res.argmin_anchor
    assert len(doc["placements"]) == 11


def test_sweep_rejects_tiny_grids():
    with pytest.raises(ValueError):
        sweep_placements_1d(UNIT, 1.0, 1.0, 0.5, 1.0, 2)


def test_radial_sweep_anchor_variables():
    sp = ShellProblem.make(2, 1.0, math.e, 1.0, 1.0, 0.5, [(1.2, 1.5)])
    res_t = sweep_placements_radial(sp, 0.3, 5)
    assert res_t.anchor_variable == "t"
    assert res_t.placements[0][0] == pytest.approx(0.0, abs=1e-15)
    res_r = sweep_placements_radial(sp, 0.3, 5, raw_r_length=True)
    assert res_r.anchor_variable == "r"
    assert res_r.placements[0][0] == 1.0


def test_saturating_weight_honors_mean_constraint():
    from shellopt import weight_mean

    w = saturating_interval_weight(UNIT, 2.0, 0.25, 0.1)
    # |E| = 0.25, kappa = 2: mean = 0.25*2 - 0.75 = -0.25
    assert weight_mean(w) == pytest.approx(-0.25, abs=1e-15)
    assert w.segments[0].a == 0.1
