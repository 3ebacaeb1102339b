"""Special-function accuracy against scipy as the independent oracle."""
import math

import numpy as np
import pytest
from scipy.special import gammainc, gammaincc, gammaincinv

from oddsmodels.special import (gamma_unit_isf, gamma_unit_quantile, log_gamma,
                                reg_lower_gamma, reg_upper_gamma)

SHAPES = [0.3, 0.5, 1.0, 1.13, 2.7, 4.0, 20.0, 150.0]


def test_log_gamma_matches_math():
    xs = np.array([0.05, 0.13, 0.5, 1.0, 1.13, 2.0, 4.5, 20.0, 171.0])
    mine = log_gamma(xs)
    ref = np.array([math.lgamma(v) for v in xs])
    assert np.max(np.abs(mine - ref) / np.maximum(np.abs(ref), 1.0)) < 1e-13


@pytest.mark.parametrize("shape", SHAPES)
def test_reg_lower_gamma_accuracy(shape):
    xs = np.geomspace(1e-8, 50 * max(shape, 1.0), 400)
    mine = reg_lower_gamma(shape, xs)
    ref = gammainc(shape, xs)
    scale = np.maximum(ref, 1e-290)
    assert np.max(np.abs(mine - ref) / scale) < 1e-12


@pytest.mark.parametrize("shape", SHAPES)
def test_reg_upper_gamma_accuracy(shape):
    xs = np.geomspace(1e-8, 50 * max(shape, 1.0), 400)
    mine = reg_upper_gamma(shape, xs)
    ref = gammaincc(shape, xs)
    scale = np.maximum(ref, 1e-290)
    assert np.max(np.abs(mine - ref) / scale) < 1e-12


@pytest.mark.parametrize("shape", [0.5, 1.13, 4.0, 20.0])
def test_gamma_quantile_roundtrip(shape):
    us = np.concatenate([[1e-12, 1e-9, 1e-6, 1e-4],
                         np.linspace(0.01, 0.99, 50),
                         [1 - 1e-6, 1 - 1e-10, 1 - 1e-12]])
    ys = gamma_unit_quantile(shape, us)
    assert np.max(np.abs(reg_lower_gamma(shape, ys) - us)) < 1e-12


def test_gamma_quantile_vs_scipy_bulk():
    us = np.linspace(0.01, 0.99, 99)
    ys = gamma_unit_quantile(1.13, us)
    ref = gammaincinv(1.13, us)
    assert np.max(np.abs(ys - ref) / ref) < 1e-10


@pytest.mark.parametrize("shape", [0.5, 1.13, 4.0, 20.0])
def test_gamma_isf_deep_tail(shape):
    qs = np.array([0.9, 0.5, 0.2, 1e-3, 1e-8, 1e-30, 1e-120, 1e-250])
    ys = gamma_unit_isf(shape, qs)
    back = reg_upper_gamma(shape, ys)
    assert np.max(np.abs(back - qs) / qs) < 1e-11


def test_gamma_quantile_rejects_bad_u():
    with pytest.raises(ValueError):
        gamma_unit_quantile(2.0, np.array([1.0]))
    with pytest.raises(ValueError):
        gamma_unit_isf(2.0, np.array([0.0]))
