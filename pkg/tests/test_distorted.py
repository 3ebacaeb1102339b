"""Distorted odds Marshall-Olkin family, checked against closed-form oracles."""
import math

import numpy as np
import pytest
from scipy.integrate import quad

from oddsmodels import (ParamTriple, ValidationError, d_polynomial,
                        make_baseline, make_domo, make_omo, t_factor)
from oddsmodels.stability import ks_distance

EXP = make_baseline("exp", 1.0)
BASES = [
    EXP,
    make_baseline("weibull", 2.0, 1.0),
    make_baseline("gamma", 4.0, 1.0),
    make_baseline("loglogistic"),
]
TRIPLES = [
    (0.0, 1.0, 1.0), (0.0, 2.3, 1.0), (0.0, 0.4, 1.7), (0.5, 5.0, 0.25),
    (1.0, 1.0, 2.0), (1.0, 1.0, 0.6), (2.0, 0.3, 3.0), (3.5, 7.0, 0.45),
]


def test_identity_distortion():
    d = make_domo(EXP, ParamTriple(0.0, 1.0, 1.0))
    xs = np.linspace(0.01, 5, 50)
    assert np.allclose(d.cdf(xs), EXP.cdf(xs), atol=1e-15)
    assert np.allclose(d.pdf(xs), EXP.pdf(xs), rtol=1e-13)
    assert np.allclose(d.hazard(xs), EXP.hazard(xs), rtol=1e-13)


def test_phr_reduction_oracle():
    # (alpha, beta, theta) = (1, 1, theta) is the proportional hazards law.
    d = make_domo(EXP, ParamTriple(1.0, 1.0, 2.0))
    assert d.sf(1.0) == pytest.approx(math.exp(-2.0), rel=1e-13)
    assert d.pdf(1.0) == pytest.approx(2.0 * math.exp(-2.0), rel=1e-13)
    assert d.hazard(0.77) == pytest.approx(2.0, rel=1e-12)
    xs = np.linspace(0.01, 6, 2049)
    for theta in (0.5, 2.0, 3.7):
        d = make_domo(EXP, ParamTriple(1.0, 1.0, theta))
        assert np.max(np.abs(d.sf(xs) - EXP.sf(xs) ** theta)) < 1e-12


def test_marshall_olkin_reduction():
    for beta in (0.3, 2.0):
        d = make_omo(EXP, beta, 1.0)
        xs = np.linspace(0.01, 8, 2049)
        f, s = EXP.cdf(xs), EXP.sf(xs)
        assert np.max(np.abs(d.sf(xs) - s / (beta * f + s))) < 1e-12
    d = make_omo(EXP, 2.0, 1.0)
    assert d.sf(math.log(2)) == pytest.approx(1.0 / 3.0, rel=1e-14)


def test_odds_examples():
    d = make_domo(EXP, ParamTriple(1.0, 2.0, 1.0))
    assert d.odds(math.log(2)) == pytest.approx(2.0, rel=1e-13)
    assert d.odds(0.0) == 0.0
    d = make_domo(EXP, ParamTriple(0.0, 1.0, 2.0))
    assert d.odds(math.log(2)) == pytest.approx(1.0, rel=1e-13)


def test_defining_identity_randomized():
    rng = np.random.default_rng(17)
    worst = 0.0
    for _ in range(1000):
        base = BASES[rng.integers(len(BASES))]
        a = 0.0 if rng.random() < 0.3 else float(rng.uniform(0.01, 4.0))
        b = float(np.exp(rng.uniform(np.log(0.1), np.log(10.0))))
        t = float(np.exp(rng.uniform(np.log(0.2), np.log(5.0))))
        d = make_domo(base, ParamTriple(a, b, t))
        x = base.quantile(float(rng.uniform(1e-4, 1 - 1e-4)))
        lam = base.cdf(x) / base.sf(x)
        expected = b * ((a + lam) ** t - a**t)
        got = d.odds(x)
        if expected > 0:
            worst = max(worst, abs(got - expected) / expected)
    assert worst < 1e-11


def test_alternative_cdf_form_agrees():
    # Independent algebraic form of the distribution function.
    xs = np.linspace(0.005, 8.0, 801)
    for base in BASES:
        for trip in TRIPLES:
            a, b, t = trip
            d = make_domo(base, ParamTriple(*trip))
            f, s = base.cdf(xs), base.sf(xs)
            num = b * ((a + (1 - a) * f) ** t - (a * s) ** t)
            alt = num / (s**t + num)
            assert np.max(np.abs(d.cdf(xs) - alt)) < 1e-12, trip


def test_hazard_factorization():
    xs = np.linspace(0.01, 6.0, 500)
    for base in BASES:
        for trip in TRIPLES:
            d = make_domo(base, ParamTriple(*trip))
            a, b, t = trip
            lam = base.cdf(xs) / base.sf(xs)
            expected = b * t * base.hazard(xs) * t_factor(ParamTriple(*trip), lam)
            got = d.hazard(xs)
            mask = expected > 0
            assert np.max(np.abs(got[mask] - expected[mask]) / expected[mask]) < 1e-11
            # hazard also equals pdf / survival computed independently
            ratio = d.pdf(xs) / d.sf(xs)
            assert np.max(np.abs(got[mask] - ratio[mask]) / ratio[mask]) < 1e-12


def test_t_factor_frozen_values():
    assert t_factor(ParamTriple(2, 1, 2), 0.0) == 2.0
    assert t_factor(ParamTriple(0, 3, 1), 0.0) == 1.0
    assert t_factor(ParamTriple(1, 1, 1), 5.0) == 1.0
    assert t_factor(ParamTriple(0, 1, 2), 0.0) == 0.0
    assert np.isinf(t_factor(ParamTriple(0, 1, 0.5), 0.0))


def test_d_polynomial_frozen_values():
    assert d_polynomial(ParamTriple(1, 1, 2), 0.0) == 0.0
    assert d_polynomial(ParamTriple(0, 1, 1), 7.0) == 0.0
    xs = np.linspace(0, 9, 10)
    assert np.max(np.abs(d_polynomial(ParamTriple(1, 1, 3.3), xs))) == 0.0
    a, b, t = 2.0, 3.0, 1.7
    assert d_polynomial(ParamTriple(a, b, t), 0.0) == pytest.approx(
        a**t * b * t - a - (t - 1.0), rel=1e-13)


def test_param_validation():
    with pytest.raises(ValidationError, match="alpha"):
        make_domo(EXP, ParamTriple(-1.0, 1.0, 1.0))
    with pytest.raises(ValidationError, match="beta"):
        ParamTriple(0.0, 0.0, 1.0)
    with pytest.raises(ValidationError, match="theta"):
        ParamTriple(0.0, 1.0, -2.0)


def test_quantile_roundtrip_randomized():
    rng = np.random.default_rng(23)
    for base in BASES:
        for trip in TRIPLES:
            d = make_domo(base, ParamTriple(*trip))
            us = rng.random(1000)
            us = np.clip(us, 1e-6, 1 - 1e-6)
            xs = d.quantile(us)
            assert np.max(np.abs(d.cdf(xs) - us)) < 1e-10, trip


def test_quantile_examples():
    d = make_domo(EXP, ParamTriple(0.0, 1.0, 1.0))
    assert d.quantile(0.5) == pytest.approx(math.log(2), rel=1e-13)
    d = make_domo(EXP, ParamTriple(1.0, 1.0, 2.0))
    assert d.quantile(1.0 - math.exp(-2.0)) == pytest.approx(1.0, rel=1e-12)


def test_pdf_matches_cdf_derivative():
    for base in BASES:
        d = make_domo(base, ParamTriple(0.7, 2.0, 1.6))
        xs = d.quantile(np.linspace(0.05, 0.95, 19))
        h = 1e-6 * np.maximum(xs, 1.0)
        fd = (d.cdf(xs + h) - d.cdf(xs - h)) / (2 * h)
        assert np.max(np.abs(fd - d.pdf(xs)) / d.pdf(xs)) < 1e-6


def test_pdf_normalization_spread():
    rng = np.random.default_rng(31)
    for _ in range(12):
        base = BASES[rng.integers(len(BASES))]
        a = 0.0 if rng.random() < 0.3 else float(rng.uniform(0.05, 3.0))
        b = float(np.exp(rng.uniform(np.log(0.2), np.log(5.0))))
        t = float(np.exp(rng.uniform(np.log(0.3), np.log(3.0))))
        d = make_domo(base, ParamTriple(a, b, t))
        lo, hi = d.quantile(1e-9), d.quantile(1.0 - 1e-9)
        anchors = [d.quantile(u) for u in (1e-3, 0.1, 0.5, 0.9, 1 - 1e-3, 1 - 1e-6)]
        total, _ = quad(d.pdf, lo, hi, limit=400, points=anchors)
        assert abs(total - (1 - 2e-9)) < 1e-8, (base.spec_string(), a, b, t)


def test_example3_density_normalizes():
    g = make_baseline("gamma", 1.13, 116.6)
    d = make_domo(g, ParamTriple(0.0, 4.4324, 0.6822))
    lo, hi = d.quantile(1e-9), d.quantile(1.0 - 1e-9)
    total, _ = quad(d.pdf, lo, hi, limit=500, points=[d.quantile(0.001), d.quantile(0.5)])
    assert abs(total - 1.0) < 1e-6


def test_support_start_sentinel():
    g = make_baseline("gamma", 1.13, 116.6)
    d = make_domo(g, ParamTriple(0.0, 4.4324, 0.6822))
    assert np.isinf(d.pdf(0.0))
    assert np.isinf(d.hazard(0.0))
    assert d.pdf(-1.0) == 0.0


def test_hazard_bounds_theta_one():
    # beta <= 1: beta h_F <= h_G <= h_F; beta >= 1 reverses.
    w = make_baseline("weibull", 2.0, 1.0)
    xs = w.quantile(np.linspace(1e-4, 1 - 1e-4, 1000))
    hf = w.hazard(xs)
    for beta in (0.5, 1.0, 2.0):
        d = make_omo(w, beta, 1.0)
        hg = d.hazard(xs)
        lo, hi = min(beta, 1.0), max(beta, 1.0)
        assert np.all(hg >= lo * hf - 1e-10)
        assert np.all(hg <= hi * hf + 1e-10)


def test_concavity_preserved_uniform_grid():
    # concave baseline cdf with beta >= 1 and theta = 1 stays concave
    xs = np.linspace(0.0, 10.0, 2001)
    for beta in (1.0, 3.0, 8.0):
        d = make_omo(EXP, beta, 1.0)
        cdf = d.cdf(xs)
        second = np.diff(cdf, 2)
        assert np.max(second) <= 1e-9 * np.max(np.abs(cdf))


def test_sampling_determinism_and_ks():
    d = make_domo(EXP, ParamTriple(1.0, 1.0, 2.0))
    a = d.sample(1000, seed=9)
    b = d.sample(1000, seed=9)
    assert np.array_equal(a, b)
    with pytest.raises(ValidationError):
        d.sample(0, seed=1)
    n = 100_000
    xs = np.sort(d.sample(n, seed=2024))
    assert ks_distance(xs, d.cdf) < 1.63 / math.sqrt(n)
