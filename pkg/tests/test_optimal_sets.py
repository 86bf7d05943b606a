"""Closed-form placement predictions for intervals and shells."""

import math

import pytest

from shellopt import (
    CriticalFamily,
    DimensionError,
    IntervalDomain,
    Regime,
    ShellProblem,
    family_member_in_r,
    map_r_to_t,
    predict_1d,
    predict_shell_2d,
    predict_shell_nd,
    predicted_sets_in_t,
)

UNIT = IntervalDomain(0.0, 1.0)


def _shell(n, r1, r2, beta, kappa=1.0, m0=0.5):
    # placeholder segment; predictions depend only on the scalar data
    mid = 0.5 * (r1 + r2)
    return ShellProblem.make(n, r1, r2, beta, kappa, m0, [(mid, mid + 0.1 * (r2 - r1))])


def test_interval_supercritical_centered():
    pred = predict_1d(UNIT, 10.0, 0.5, 1.0)
    assert pred.regime is Regime.SUPERCRITICAL
    (s,) = pred.sets
    assert (s.a, s.b) == (0.25, 0.75)


def test_interval_subcritical_flush():
    pred = predict_1d(UNIT, 0.0, 0.3, 1.0)
    assert pred.regime is Regime.SUBCRITICAL
    assert [(s.a, s.b) for s in pred.sets] == [(0.0, 0.3), (0.7, 1.0)]


def test_interval_prediction_translates():
    pred = predict_1d(IntervalDomain(2.0, 4.0), 10.0, 0.5, 1.0)
    (s,) = pred.sets
    assert (s.a, s.b) == (2.5, 3.5)


def test_interval_critical_family():
    dom = IntervalDomain(0.0, 2.0)
    pred = predict_1d(dom, math.pi / 2.0, 0.5, 1.0)
    assert pred.regime is Regime.CRITICAL
    assert pred.sets == ()
    fam = pred.family
    assert fam.variable == "x"
    assert (fam.anchor_lo, fam.anchor_hi, fam.length) == (0.0, 1.0, 1.0)
    member = fam.instantiate(0.25)
    assert (member.a, member.b) == (0.25, 1.25)
    with pytest.raises(ValueError):
        fam.instantiate(1.5)


def test_planar_supercritical_geometric_means():
    sp = _shell(2, 1.0, math.e, 20.0)
    pred = predict_shell_2d(sp, 0.5)
    assert pred.regime is Regime.SUPERCRITICAL
    (s,) = pred.sets
    assert s.a == pytest.approx(math.exp(0.25), rel=1e-14)
    assert s.b == pytest.approx(math.exp(0.75), rel=1e-14)


def test_planar_subcritical_flush():
    sp = _shell(2, 1.0, math.e, 0.01)
    pred = predict_shell_2d(sp, 0.5)
    assert pred.regime is Regime.SUBCRITICAL
    inner, outer = pred.sets
    assert inner.a == 1.0
    assert inner.b == pytest.approx(math.sqrt(math.e), rel=1e-14)
    assert outer.a == pytest.approx(math.sqrt(math.e), rel=1e-14)
    assert outer.b == math.e


def test_spatial_supercritical_harmonic_combination():
    sp = _shell(3, 1.0, 2.0, 50.0)
    pred = predict_shell_nd(sp, 0.5)
    assert pred.regime is Regime.SUPERCRITICAL
    (s,) = pred.sets
    # 1/r interpolation: endpoints 1/((3/4 + 1/8)) = 8/7 and 1/((1/4 + 3/8)) = 8/5
    assert s.a == pytest.approx(8.0 / 7.0, rel=1e-14)
    assert s.b == pytest.approx(1.6, rel=1e-14)


def test_spatial_subcritical_flush():
    sp = _shell(3, 1.0, 2.0, 0.01)
    pred = predict_shell_nd(sp, 0.5)
    assert pred.regime is Regime.SUBCRITICAL
    inner, outer = pred.sets
    assert inner.a == 1.0
    assert inner.b == pytest.approx(4.0 / 3.0, rel=1e-14)
    assert outer.a == pytest.approx(4.0 / 3.0, rel=1e-14)
    assert outer.b == 2.0


def test_shell_sets_stay_inside_shell():
    for n, r2, beta in ((2, 3.0, 40.0), (2, 3.0, 0.01), (3, 2.5, 40.0), (5, 1.8, 0.01)):
        sp = _shell(n, 1.2, r2, beta, kappa=2.0, m0=0.3)
        pred = predict_shell_2d(sp, 0.35) if n == 2 else predict_shell_nd(sp, 0.35)
        for s in pred.sets:
            assert 1.2 <= s.a < s.b <= r2


def test_dimension_guards():
    sp3 = _shell(3, 1.0, 2.0, 1.0)
    with pytest.raises(DimensionError):
        predict_shell_2d(sp3, 0.5)
    sp2 = _shell(2, 1.0, 2.0, 1.0)
    with pytest.raises(DimensionError):
        predict_shell_nd(sp2, 0.5)


def test_pullback_is_interval_prediction():
    # the radial sets must map to exactly the 1D prediction on the t-domain
    for n, r2 in ((2, math.e), (3, 2.0), (4, 1.7)):
        sp = _shell(n, 1.0, r2, 80.0)
        cp = 0.4
        pred = predict_shell_2d(sp, cp) if n == 2 else predict_shell_nd(sp, cp)
        t1, t2 = map_r_to_t(n, 1.0), map_r_to_t(n, r2)
        span = t2 - t1
        (img,) = predicted_sets_in_t(pred, n)
        mid = 0.5 * (t1 + t2)
        assert img.a == pytest.approx(mid - 0.2 * span, rel=1e-12, abs=1e-15)
        assert img.b == pytest.approx(mid + 0.2 * span, rel=1e-12, abs=1e-15)


def test_critical_family_membership():
    sp = _shell(2, 1.0, math.e, math.pi)  # threshold is exactly pi here
    pred = predict_shell_2d(sp, 0.5)
    assert pred.regime is Regime.CRITICAL
    fam = pred.family
    assert fam.variable == "t"
    assert fam.length == pytest.approx(0.5, rel=1e-14)
    member_r = family_member_in_r(fam, 2, 0.1)
    assert member_r.a == pytest.approx(math.exp(0.1), rel=1e-14)
    assert member_r.b == pytest.approx(math.exp(0.6), rel=1e-14)


def test_family_lengths_share_t_measure():
    # every member of the critical family has the same t-length even though
    # the radial lengths differ
    fam = CriticalFamily(anchor_lo=-1.0, anchor_hi=-0.75, length=0.25, variable="t")
    r_lo = family_member_in_r(fam, 3, -1.0)
    r_hi = family_member_in_r(fam, 3, -0.75)
    assert r_lo.b - r_lo.a != pytest.approx(r_hi.b - r_hi.a, rel=1e-3)
    for member in (r_lo, r_hi):
        t_len = map_r_to_t(3, member.b) - map_r_to_t(3, member.a)
        assert t_len == pytest.approx(0.25, rel=1e-12)


def test_prediction_shape_validation():
    with pytest.raises(ValueError):
        predicted_sets_in_t(predict_1d(UNIT, 10.0, 0.5, 1.0), 2)


def test_prediction_serialization():
    pred = predict_1d(UNIT, 0.0, 0.3, 1.0)
    doc = pred.to_json_dict()
    assert doc["regime"] == "Subcritical"
    assert doc["sets"] == [[0.0, 0.3], [0.7, 1.0]]
    assert doc["family"] is None
    assert doc["threshold"]["beta_star_scaled"] > 0.0
    rows = pred.csv_rows()
    assert len(rows) == 2 and rows[0][0] == "Subcritical"
