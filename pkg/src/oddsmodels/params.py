"""The (alpha, beta, theta) parameter triple and its shifted-power algebra.

Both the distorted-odds family and the enlarged log-logistic family are
driven by the same map lam -> beta * ((alpha + lam)^theta - alpha^theta),
so the cancellation-safe forward and inverse forms live here.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError


@dataclass(frozen=True)
class ParamTriple:
    alpha: float
    beta: float
    theta: float

    def __post_init__(self):
        if not self.alpha >= 0.0:
            raise ValidationError("alpha must be >= 0")
        if not self.beta > 0.0:
            raise ValidationError("beta must be > 0")
        if not self.theta > 0.0:
            raise ValidationError("theta must be > 0")

    def as_tuple(self):
        return (self.alpha, self.beta, self.theta)


def shifted_power_diff(alpha, theta, lam):
    """(alpha + lam)^theta - alpha^theta without cancellation for small lam."""
    lam = np.asarray(lam, dtype=float)
    with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
        if alpha == 0.0:
            return lam**theta
        ratio = lam / alpha
        out = alpha**theta * np.expm1(theta * np.log1p(ratio))
        # log1p overflows only when lam is inf, where the power form is exact.
        big = ~np.isfinite(ratio)
        if np.any(big):
            out = np.where(big, (alpha + lam) ** theta, out)
        return out


def inverse_shifted_power(alpha, theta, y):
    """Solve (alpha + lam)^theta - alpha^theta = y for lam >= 0."""
    y = np.asarray(y, dtype=float)
    with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
        if alpha == 0.0:
            return y ** (1.0 / theta)
        a_t = alpha**theta
        ratio = y / a_t
        out = alpha * np.expm1(np.log1p(ratio) / theta)
        big = ~np.isfinite(ratio)
        if np.any(big):
            out = np.where(big, (a_t + y) ** (1.0 / theta) - alpha, out)
        return out
