import math

import pytest

from shellopt import (
    AdmissibilityParams,
    BangBangWeight,
    IntervalDomain,
    check_admissible,
    saturating_interval_weight,
    weight_mean,
)
from shellopt.weights import piecewise_arrays

UNIT = IntervalDomain(0.0, 1.0)


def test_interval_domain_basics():
    d = IntervalDomain(2.0, 5.0)
    assert d.length() == 3.0
    assert d.midpoint() == 3.5
    assert d.contains(2.0) and d.contains(5.0) and not d.contains(5.1)
    with pytest.raises(ValueError):
        IntervalDomain(1.0, 1.0)


def test_weight_mean_examples():
    w = BangBangWeight(UNIT, 1.0, (IntervalDomain(0.0, 0.25),))
    assert weight_mean(w) == pytest.approx(-0.5, abs=1e-15)
    w = BangBangWeight(UNIT, 1.0, (IntervalDomain(0.0, 0.5),))
    assert weight_mean(w) == pytest.approx(0.0, abs=1e-15)
    w = BangBangWeight(IntervalDomain(0.0, 2.0), 3.0, (IntervalDomain(0.5, 1.0),))
    assert weight_mean(w) == pytest.approx(0.0, abs=1e-15)


def test_evaluate_two_valued_right_limit():
    w = BangBangWeight(UNIT, 2.0, (IntervalDomain(0.25, 0.5),))
    assert w.evaluate(0.1) == -1.0
    assert w.evaluate(0.3) == 2.0
    # endpoints take the right-limit value; the domain's right end takes the left limit
    assert w.evaluate(0.25) == 2.0
    assert w.evaluate(0.5) == -1.0
    assert w.evaluate(1.0) == -1.0
    vals = {w.evaluate(0.01 + 0.007 * i) for i in range(140)}
    assert vals <= {-1.0, 2.0}


def test_segment_validation():
    with pytest.raises(ValueError):
        BangBangWeight(UNIT, 1.0, ())  # empty favorable set
    with pytest.raises(ValueError):
        BangBangWeight(UNIT, 1.0, (IntervalDomain(0.0, 1.0),))  # fills the domain
    with pytest.raises(ValueError):
        BangBangWeight(UNIT, 1.0, (IntervalDomain(-0.1, 0.2),))  # escapes the domain
    with pytest.raises(ValueError):
        # overlapping segments
        BangBangWeight(UNIT, 1.0, (IntervalDomain(0.1, 0.4), IntervalDomain(0.3, 0.6)))
    with pytest.raises(ValueError):
        BangBangWeight(UNIT, -1.0, (IntervalDomain(0.1, 0.4),))


def test_check_admissible_examples():
    p = AdmissibilityParams(m0=0.5, kappa=1.0, beta=0.0)
    ok = check_admissible(BangBangWeight(UNIT, 1.0, (IntervalDomain(0.0, 0.25),)), p)
    assert ok
    assert ok.mean == pytest.approx(-0.5, abs=1e-15)
    bad = check_admissible(BangBangWeight(UNIT, 1.0, (IntervalDomain(0.0, 0.3),)), p)
    assert not bad
    assert "mean" in bad.diagnostic

    p2 = AdmissibilityParams(m0=0.2, kappa=2.0, beta=1.0)
    c = (1.0 - 0.2) / 3.0
    w = saturating_interval_weight(UNIT, 2.0, c, 0.0)
    assert check_admissible(w, p2)


def test_active_constraint_identity():
    # |E| = c|Omega| with c = (1-m0)/(1+kappa) forces mean = -m0
    for m0, kappa in ((0.5, 1.0), (0.2, 2.0), (0.7, 0.5)):
        c = (1.0 - m0) / (1.0 + kappa)
        w = saturating_interval_weight(UNIT, kappa, c, 0.3 * (1 - c))
        assert weight_mean(w) == pytest.approx(-m0, abs=1e-12)


def test_admissibility_translation_invariant():
    p = AdmissibilityParams(m0=0.5, kappa=1.0, beta=0.0)
    for anchor in (0.0, 0.2, 0.5, 0.75):
        w = BangBangWeight(UNIT, 1.0, (IntervalDomain(anchor, anchor + 0.25),))
        assert check_admissible(w, p).ok


def test_admissibility_params_ranges():
    AdmissibilityParams(m0=-0.5, kappa=1.0, beta=2.0)  # fine when beta > 0
    with pytest.raises(ValueError):
        AdmissibilityParams(m0=-0.5, kappa=1.0, beta=0.0)
    with pytest.raises(ValueError):
        AdmissibilityParams(m0=1.0, kappa=1.0, beta=1.0)
    p = AdmissibilityParams(m0=0.4, kappa=2.0, beta=1.0)
    assert p.c == pytest.approx(0.2, abs=1e-15)


def test_translated_weight():
    w = BangBangWeight(UNIT, 1.0, (IntervalDomain(0.25, 0.5),))
    shifted = w.translated(1.0)
    assert shifted.domain.as_tuple() == (1.0, 2.0)
    assert shifted.segments[0].as_tuple() == (1.25, 1.5)


def test_piecewise_arrays():
    w = BangBangWeight(UNIT, 3.0, (IntervalDomain(0.2, 0.4), IntervalDomain(0.6, 0.7)))
    bounds, values = piecewise_arrays(w)
    assert list(bounds) == [0.0, 0.2, 0.4, 0.6, 0.7, 1.0]
    assert list(values) == [-1.0, 3.0, -1.0, 3.0, -1.0]
    # flush segment: no zero-width leading piece
    w2 = BangBangWeight(UNIT, 3.0, (IntervalDomain(0.0, 0.4),))
    bounds2, values2 = piecewise_arrays(w2)
    assert list(bounds2) == [0.0, 0.4, 1.0]
    assert list(values2) == [3.0, -1.0]


def test_weight_json_round_shape():
    w = BangBangWeight(UNIT, 1.5, (IntervalDomain(0.1, 0.3),))
    d = w.to_json_dict()
    assert d == {"domain": [0.0, 1.0], "kappa": 1.5, "segments": [[0.1, 0.3]]}
