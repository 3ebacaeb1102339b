"""Baseline distributions on [0, inf) and their odds/hazard calculus.

Concrete families: exponential, gamma (shape/scale), Weibull (shape/scale)
and the standard log-logistic x / (x + 1).  Every distribution object is an
immutable value; cdf/pdf/sf/quantile accept scalars or numpy arrays and all
derived quantities (odds, odds rate, hazard, reversed hazard) come from one
shared implementation.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ValidationError
from .special import (gamma_unit_isf, gamma_unit_quantile, log_gamma,
                      reg_lower_gamma, reg_upper_gamma)


def _as_array(x):
    return np.asarray(x, dtype=float)


def _match(out, x_in):
    """Return a float when the input was scalar, else the array itself."""
    if np.isscalar(x_in) or (isinstance(x_in, np.ndarray) and x_in.ndim == 0):
        return float(out)
    return out


@dataclass(frozen=True)
class ProfilePoint:
    """Snapshot of the distribution calculus at one abscissa."""

    x: float
    cdf: float
    pdf: float
    survival: float
    hazard: float
    reversed_hazard: float
    odds: float
    odds_rate: float


class DistributionBase:
    """Shared odds/hazard calculus for any law exposing cdf/pdf/sf/quantile."""

    support_lower = 0.0

    def cdf(self, x):
        raise NotImplementedError

    def pdf(self, x):
        raise NotImplementedError

    def sf(self, x):
        """Survival function, evaluated directly (not as 1 - cdf) where possible."""
        raise NotImplementedError

    def quantile(self, u):
        u_arr = _as_array(u)
        if np.any((u_arr <= 0.0) | (u_arr >= 1.0)):
            raise DomainError("quantile requires u in (0, 1)")
        return _match(self._quantile(u_arr), u)

    def _quantile(self, u):
        raise NotImplementedError

    def quantile_sf(self, s):
        """Abscissa whose survival equals s; accurate deep into the tail."""
        s_arr = _as_array(s)
        if np.any((s_arr <= 0.0) | (s_arr > 1.0)):
            raise DomainError("quantile_sf requires s in (0, 1]")
        return _match(self._quantile_sf(s_arr), s)

    def _quantile_sf(self, s):
        return self._quantile(1.0 - s)

    def odds(self, x):
        """Odds function cdf / survival = 1 / survival - 1."""
        x_arr = _as_array(x)
        with np.errstate(divide="ignore", over="ignore"):
            out = self.cdf(x_arr) / self.sf(x_arr)
        return _match(out, x)

    def odds_rate(self, x):
        """Growth rate of the odds function, pdf / survival^2."""
        x_arr = _as_array(x)
        with np.errstate(divide="ignore", over="ignore"):
            out = self.pdf(x_arr) / self.sf(x_arr) ** 2
        return _match(out, x)

    def hazard(self, x):
        x_arr = _as_array(x)
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            out = self.pdf(x_arr) / self.sf(x_arr)
        return _match(out, x)

    def reversed_hazard(self, x):
        x_arr = _as_array(x)
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            out = self.pdf(x_arr) / self.cdf(x_arr)
        return _match(out, x)

    def profile(self, x):
        """All pointwise quantities at x; boundary hazards become inf."""
        c = float(self.cdf(x))
        p = float(self.pdf(x))
        s = float(self.sf(x))
        hazard = p / s if s > 0.0 else np.inf
        rev = p / c if c > 0.0 else np.inf
        odds = c / s if s > 0.0 else np.inf
        rate = p / s**2 if s > 0.0 else np.inf
        return ProfilePoint(float(x), c, p, s, hazard, rev, odds, rate)

    def sample(self, n, seed):
        """Inverse-transform samples from a seeded generator; deterministic."""
        if n < 1:
            raise ValidationError("sample size n must be >= 1")
        rng = np.random.default_rng(seed)
        u = rng.random(int(n))
        return self._quantile(u)

    def spec_string(self):
        raise NotImplementedError


class BaselineDistribution(DistributionBase):
    """Base class for the nonnegative-support baseline families."""

    family = ""


@dataclass(frozen=True)
class Exponential(BaselineDistribution):
    rate: float
    family = "exp"

    def __post_init__(self):
        if not self.rate > 0.0:
            raise ValidationError("rate must be > 0")

    def cdf(self, x):
        x_arr = _as_array(x)
        out = -np.expm1(-self.rate * np.maximum(x_arr, 0.0))
        return _match(out, x)

    def sf(self, x):
        x_arr = _as_array(x)
        out = np.exp(-self.rate * np.maximum(x_arr, 0.0))
        return _match(out, x)

    def pdf(self, x):
        x_arr = _as_array(x)
        out = np.where(x_arr < 0.0, 0.0, self.rate * np.exp(-self.rate * np.maximum(x_arr, 0.0)))
        return _match(out, x)

    def _quantile(self, u):
        return -np.log1p(-u) / self.rate

    def _quantile_sf(self, s):
        return -np.log(s) / self.rate

    def spec_string(self):
        return f"exp:{self.rate:g}"


@dataclass(frozen=True)
class Weibull(BaselineDistribution):
    shape: float
    scale: float
    family = "weibull"

    def __post_init__(self):
        if not self.shape > 0.0:
            raise ValidationError("shape must be > 0")
        if not self.scale > 0.0:
            raise ValidationError("scale must be > 0")

    def cdf(self, x):
        x_arr = _as_array(x)
        z = (np.maximum(x_arr, 0.0) / self.scale) ** self.shape
        return _match(-np.expm1(-z), x)

    def sf(self, x):
        x_arr = _as_array(x)
        z = (np.maximum(x_arr, 0.0) / self.scale) ** self.shape
        return _match(np.exp(-z), x)

    def pdf(self, x):
        x_arr = _as_array(x)
        xs = np.maximum(x_arr, 0.0) / self.scale
        with np.errstate(divide="ignore", invalid="ignore"):
            out = (self.shape / self.scale) * xs ** (self.shape - 1.0) * np.exp(-(xs**self.shape))
        if self.shape > 1.0:
            out = np.where(x_arr == 0.0, 0.0, out)
        out = np.where(x_arr < 0.0, 0.0, out)
        return _match(out, x)

    def _quantile(self, u):
        return self.scale * (-np.log1p(-u)) ** (1.0 / self.shape)

    def _quantile_sf(self, s):
        return self.scale * (-np.log(s)) ** (1.0 / self.shape)

    def spec_string(self):
        return f"weibull:{self.shape:g},{self.scale:g}"


@dataclass(frozen=True)
class Gamma(BaselineDistribution):
    shape: float
    scale: float
    family = "gamma"

    def __post_init__(self):
        if not self.shape > 0.0:
            raise ValidationError("shape must be > 0")
        if not self.scale > 0.0:
            raise ValidationError("scale must be > 0")

    def cdf(self, x):
        x_arr = _as_array(x)
        out = reg_lower_gamma(self.shape, np.maximum(x_arr, 0.0) / self.scale)
        return _match(out, x)

    def sf(self, x):
        x_arr = _as_array(x)
        out = reg_upper_gamma(self.shape, np.maximum(x_arr, 0.0) / self.scale)
        return _match(out, x)

    def pdf(self, x):
        x_arr = _as_array(x)
        z = np.maximum(x_arr, 0.0) / self.scale
        with np.errstate(divide="ignore", invalid="ignore"):
            log_pdf = (self.shape - 1.0) * np.log(z) - z - log_gamma(np.array(self.shape))
            out = np.exp(log_pdf) / self.scale
        if self.shape > 1.0:
            out = np.where(x_arr == 0.0, 0.0, out)
        elif self.shape == 1.0:
            out = np.where(x_arr == 0.0, 1.0 / self.scale, out)
        else:
            out = np.where(x_arr == 0.0, np.inf, out)
        out = np.where(x_arr < 0.0, 0.0, out)
        return _match(out, x)

    def _quantile(self, u):
        return self.scale * gamma_unit_quantile(self.shape, u)

    def _quantile_sf(self, s):
        return self.scale * gamma_unit_isf(self.shape, s)

    def spec_string(self):
        return f"gamma:{self.shape:g},{self.scale:g}"


@dataclass(frozen=True)
class StandardLogLogistic(BaselineDistribution):
    """Distribution function x / (x + 1); constant odds rate 1."""

    family = "loglogistic"

    def cdf(self, x):
        x_arr = _as_array(x)
        xp = np.maximum(x_arr, 0.0)
        return _match(xp / (xp + 1.0), x)

    def sf(self, x):
        x_arr = _as_array(x)
        xp = np.maximum(x_arr, 0.0)
        return _match(1.0 / (xp + 1.0), x)

    def pdf(self, x):
        x_arr = _as_array(x)
        xp = np.maximum(x_arr, 0.0)
        out = np.where(x_arr < 0.0, 0.0, 1.0 / (xp + 1.0) ** 2)
        return _match(out, x)

    def _quantile(self, u):
        return u / (1.0 - u)

    def _quantile_sf(self, s):
        return (1.0 - s) / s

    def spec_string(self):
        return "loglogistic"


_FAMILIES = {
    "exp": (Exponential, ("rate",)),
    "gamma": (Gamma, ("shape", "scale")),
    "weibull": (Weibull, ("shape", "scale")),
    "loglogistic": (StandardLogLogistic, ()),
}


def make_baseline(family, *params):
    """Build a validated baseline distribution from a family tag and parameters.

    `gammarate:shape,rate` is accepted as an alias for a gamma law whose second
    parameter is a rate rather than a scale.
    """
    from .errors import ParseError

    if family == "gammarate":
        if len(params) != 2:
            raise ValidationError("gammarate requires (shape, rate)")
        shape, rate = params
        if not rate > 0.0:
            raise ValidationError("rate must be > 0")
        return Gamma(shape=float(shape), scale=1.0 / float(rate))
    if family not in _FAMILIES:
        raise ParseError(f"unknown distribution family {family!r}")
    cls, names = _FAMILIES[family]
    if len(params) != len(names):
        raise ValidationError(
            f"{family} requires {len(names)} parameter(s) {names}, got {len(params)}"
        )
    return cls(*(float(p) for p in params))
