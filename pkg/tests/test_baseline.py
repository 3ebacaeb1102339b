"""Baseline families: frozen example values and the odds/hazard calculus."""
import math

import numpy as np
import pytest
from scipy.integrate import quad
from scipy.special import gammainc

from oddsmodels import DomainError, ParseError, ValidationError, make_baseline

ALL = [
    make_baseline("exp", 1.0),
    make_baseline("exp", 2.5),
    make_baseline("weibull", 2.0, 1.0),
    make_baseline("weibull", 0.7, 3.0),
    make_baseline("gamma", 4.0, 1.0),
    make_baseline("gamma", 1.13, 116.6),
    make_baseline("loglogistic"),
]


def test_frozen_examples():
    e = make_baseline("exp", 1.0)
    assert e.cdf(math.log(2)) == pytest.approx(0.5, abs=1e-15)
    assert e.cdf(0.0) == 0.0
    assert e.pdf(0.0) == 1.0
    assert e.quantile(0.5) == pytest.approx(math.log(2), rel=1e-14)

    ll = make_baseline("loglogistic")
    assert ll.cdf(1.0) == 0.5
    assert ll.cdf(3.0) == 0.75
    assert ll.pdf(1.0) == 0.25
    assert ll.quantile(0.75) == pytest.approx(3.0, rel=1e-14)

    w = make_baseline("weibull", 2.0, 1.0)
    assert w.pdf(0.0) == 0.0

    g = make_baseline("gamma", 1.13, 116.6)
    assert abs(g.cdf(g.quantile(1.0 - 1e-12)) - (1.0 - 1e-12)) < 1e-13
    assert g.cdf(1e8) == 1.0


def test_gamma_median_against_independent_oracle():
    g = make_baseline("gamma", 1.13, 116.6)
    v = g.quantile(0.5)
    assert abs(gammainc(1.13, v / 116.6) - 0.5) < 1e-10


def test_validation_errors_name_the_field():
    with pytest.raises(ValidationError, match="shape"):
        make_baseline("gamma", 0.0, 1.0)
    with pytest.raises(ValidationError, match="rate"):
        make_baseline("exp", -1.0)
    with pytest.raises(ValidationError, match="scale"):
        make_baseline("weibull", 1.0, 0.0)
    with pytest.raises(ParseError):
        make_baseline("cauchy", 1.0)


def test_gammarate_alias():
    a = make_baseline("gammarate", 1.13, 1.0 / 116.6)
    b = make_baseline("gamma", 1.13, 116.6)
    assert a.cdf(100.0) == pytest.approx(b.cdf(100.0), rel=1e-12)


@pytest.mark.parametrize("d", ALL, ids=lambda d: d.spec_string())
def test_negative_x_conventions(d):
    assert d.cdf(-1.0) == 0.0
    assert d.pdf(-1.0) == 0.0
    assert d.sf(-1.0) == 1.0


@pytest.mark.parametrize("d", ALL, ids=lambda d: d.spec_string())
def test_profile_identities_random_points(d):
    rng = np.random.default_rng(5)
    us = rng.random(1000) * 0.9998 + 1e-4
    xs = d.quantile(us)
    cdf, pdf, sf = d.cdf(xs), d.pdf(xs), d.sf(xs)
    odds = d.odds(xs)
    assert np.max(np.abs(odds - (1.0 / sf - 1.0)) / np.maximum(odds, 1e-12)) < 1e-12
    assert np.allclose(d.hazard(xs), pdf / sf, rtol=1e-12)
    assert np.allclose(d.reversed_hazard(xs), pdf / cdf, rtol=1e-12)
    assert np.allclose(d.odds_rate(xs), pdf / sf**2, rtol=1e-12)
    assert np.max(np.abs(cdf + sf - 1.0)) < 1e-12


@pytest.mark.parametrize("d", ALL, ids=lambda d: d.spec_string())
def test_quantile_roundtrip(d):
    rng = np.random.default_rng(11)
    us = rng.random(1000)
    us = np.clip(us, 1e-9, 1 - 1e-9)
    xs = d.quantile(us)
    assert np.max(np.abs(d.cdf(xs) - us)) < 1e-10
    # and x-space consistency for interior points
    interior = (us > 0.01) & (us < 0.99)
    back = d.quantile(d.cdf(xs[interior]))
    assert np.max(np.abs(back - xs[interior]) / np.abs(xs[interior])) < 1e-9


@pytest.mark.parametrize("d", ALL, ids=lambda d: d.spec_string())
def test_pdf_matches_cdf_derivative(d):
    us = np.linspace(0.05, 0.95, 19)
    xs = d.quantile(us)
    h = 1e-6 * np.maximum(xs, 1.0)
    fd = (d.cdf(xs + h) - d.cdf(xs - h)) / (2 * h)
    assert np.max(np.abs(fd - d.pdf(xs)) / d.pdf(xs)) < 1e-6


@pytest.mark.parametrize("d", ALL, ids=lambda d: d.spec_string())
def test_pdf_integrates_to_one(d):
    lo, hi = d.quantile(1e-9), d.quantile(1.0 - 1e-9)
    anchors = [d.quantile(u) for u in (1e-3, 0.1, 0.5, 0.9, 1 - 1e-3, 1 - 1e-6)]
    total, err = quad(d.pdf, lo, hi, limit=400, points=anchors)
    assert abs(total - (1.0 - 2e-9)) < 1e-8, (total, err)


def test_odds_rate_matches_odds_derivative():
    for d in (make_baseline("exp", 1.0), make_baseline("weibull", 2.0, 1.0)):
        us = np.linspace(0.1, 0.9, 17)
        xs = d.quantile(us)
        h = 1e-6 * np.maximum(xs, 1.0)
        fd = (d.odds(xs + h) - d.odds(xs - h)) / (2 * h)
        assert np.max(np.abs(fd - d.odds_rate(xs)) / d.odds_rate(xs)) < 1e-5


def test_loglogistic_constant_odds_rate():
    ll = make_baseline("loglogistic")
    xs = ll.quantile(np.linspace(1e-3, 1 - 1e-3, 1000))
    assert np.max(np.abs(ll.odds_rate(xs) - 1.0)) < 1e-10


def test_exponential_constant_hazard():
    e = make_baseline("exp", 2.5)
    xs = e.quantile(np.linspace(1e-3, 1 - 1e-3, 200))
    assert np.max(np.abs(e.hazard(xs) - 2.5)) < 1e-12


def test_profile_point_values():
    ll = make_baseline("loglogistic")
    p = ll.profile(1.0)
    assert (p.cdf, p.pdf, p.hazard, p.odds, p.odds_rate) == (0.5, 0.25, 0.5, 1.0, 1.0)
    e = make_baseline("exp", 1.0)
    assert e.profile(math.log(2)).odds == pytest.approx(1.0, rel=1e-14)
    assert e.profile(0.3).hazard == pytest.approx(1.0, rel=1e-14)


def test_quantile_domain_errors():
    e = make_baseline("exp", 1.0)
    for bad in (0.0, 1.0, -0.5, 1.5):
        with pytest.raises(DomainError):
            e.quantile(bad)


def test_sampling_is_deterministic():
    g = make_baseline("gamma", 4.0, 1.0)
    a = g.sample(500, seed=123)
    b = g.sample(500, seed=123)
    assert np.array_equal(a, b)
    with pytest.raises(ValidationError):
        g.sample(0, seed=1)
