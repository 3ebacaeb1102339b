"""Enlarged log-logistic family, closed form throughout.

Distribution function on x >= 0:

    K(x) = 1 - 1 / ((x/beta + alpha^theta)^(1/theta) + 1 - alpha)

alpha = 0 recovers the log-logistic with scale beta and shape 1/theta,
alpha = 1 the Pareto family.  Its quantile function is exactly the odds
distortion used by the distorted Marshall-Olkin family, which is what
`compose_odds` verifies.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .baseline import DistributionBase, _as_array, _match
from .errors import DomainError
from .params import ParamTriple, inverse_shifted_power, shifted_power_diff


@dataclass(frozen=True)
class EnlargedLogLogistic(DistributionBase):
    params: ParamTriple

    def _shifted_odds(self, x_arr):
        """Odds function (x/beta + alpha^theta)^(1/theta) - alpha, cancellation safe."""
        a, b, t = self.params.as_tuple()
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            return inverse_shifted_power(a, t, np.maximum(x_arr, 0.0) / b)

    def odds(self, x):
        x_arr = _as_array(x)
        return _match(self._shifted_odds(x_arr), x)

    def cdf(self, x):
        x_arr = _as_array(x)
        s = self._shifted_odds(x_arr)
        with np.errstate(invalid="ignore"):
            out = np.where(np.isinf(s), 1.0, s / (1.0 + s))
        out = np.clip(out, 0.0, 1.0)
        return _match(out, x)

    def sf(self, x):
        x_arr = _as_array(x)
        s = self._shifted_odds(x_arr)
        out = np.where(np.isinf(s), 0.0, 1.0 / (1.0 + s))
        return _match(out, x)

    def pdf(self, x):
        x_arr = _as_array(x)
        a, b, t = self.params.as_tuple()
        base = np.maximum(x_arr, 0.0) / b + a**t
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            out = np.power(base, 1.0 / t - 1.0) / (b * t * (base ** (1.0 / t) + 1.0 - a) ** 2)
        out = np.where(x_arr < 0.0, 0.0, out)
        return _match(out, x)

    def hazard(self, x):
        x_arr = _as_array(x)
        a, b, t = self.params.as_tuple()
        base = np.maximum(x_arr, 0.0) / b + a**t
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            out = np.power(base, 1.0 / t - 1.0) / (b * t * (base ** (1.0 / t) + 1.0 - a))
        out = np.where(x_arr < 0.0, 0.0, out)
        return _match(out, x)

    def odds_rate(self, x):
        """(1 / (beta theta)) (x/beta + alpha^theta)^(1/theta - 1)."""
        x_arr = _as_array(x)
        a, b, t = self.params.as_tuple()
        base = np.maximum(x_arr, 0.0) / b + a**t
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            out = np.power(base, 1.0 / t - 1.0) / (b * t)
        return _match(out, x)

    def quantile(self, u):
        """Closed-form quantile beta ((1/(1-u) + alpha - 1)^theta - alpha^theta).

        u = 0 is allowed (returns 0); u >= 1 is rejected.
        """
        u_arr = _as_array(u)
        if np.any((u_arr < 0.0) | (u_arr >= 1.0)):
            raise DomainError("quantile requires u in [0, 1)")
        return _match(self._quantile(u_arr), u)

    def _quantile(self, u):
        a, b, t = self.params.as_tuple()
        lam = u / (1.0 - u)
        return b * shifted_power_diff(a, t, lam)

    def spec_string(self):
        a, b, t = self.params.as_tuple()
        return f"ell:{a:g},{b:g},{t:g}"


def make_ell(alpha, beta, theta):
    return EnlargedLogLogistic(ParamTriple(float(alpha), float(beta), float(theta)))


def compose_odds(ell: EnlargedLogLogistic, baseline, x):
    """Quantile-of-cdf composition; equals the distorted family's odds function.

    For the same parameter triple, ell.quantile(baseline.cdf(x)) and
    DistortedOdds(baseline, triple).odds(x) are two routes to one quantity.
    """
    x_arr = _as_array(x)
    u = baseline.cdf(x_arr)
    out = ell._quantile(u)
    return _match(out, x)
