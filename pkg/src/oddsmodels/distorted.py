"""Distorted odds Marshall-Olkin family over an arbitrary baseline.

The law is defined through its odds function,

    odds_G(x) = beta * ((alpha + odds_F(x))^theta - alpha^theta),

which contains the plain odds Marshall-Olkin family (alpha = 0), the
classical Marshall-Olkin family (alpha = 0, theta = 1) and the proportional
hazards family (alpha = beta = 1) as special cases.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .baseline import BaselineDistribution, DistributionBase, _as_array, _match
from .params import ParamTriple, inverse_shifted_power, shifted_power_diff


def t_factor(params: ParamTriple, lam):
    """Hazard transfer factor t(lam) with hazard_G = beta*theta*h_F*t(odds_F).

    t(lam) = (alpha + lam)^(theta-1) (lam + 1) / (1 + beta((alpha+lam)^theta - alpha^theta)).
    At lam = 0 this is alpha^(theta-1), read as a limit when alpha = 0.
    """
    a, b, t = params.as_tuple()
    lam_arr = _as_array(lam)
    with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
        out = np.power(a + lam_arr, t - 1.0) * (lam_arr + 1.0) / (
            1.0 + b * shifted_power_diff(a, t, lam_arr)
        )
    return _match(out, lam)


def d_polynomial(params: ParamTriple, x):
    """Sign driver of the hazard-factor monotonicity analysis.

    d(x) = beta (1-alpha) (alpha+x)^theta + (beta alpha^theta - 1)(theta x + alpha + theta - 1),
    so d(0) = alpha^theta beta theta - alpha - (theta - 1).
    """
    a, b, t = params.as_tuple()
    x_arr = _as_array(x)
    out = b * (1.0 - a) * (a + x_arr) ** t + (b * a**t - 1.0) * (t * x_arr + a + t - 1.0)
    return _match(out, x)


@dataclass(frozen=True)
class DistortedOdds(DistributionBase):
    """A distorted odds Marshall-Olkin law: baseline plus parameter triple."""

    baseline: BaselineDistribution
    params: ParamTriple

    def odds(self, x):
        x_arr = _as_array(x)
        _, lam_g, _ = self._odds_parts(x_arr)
        return _match(lam_g, x)

    def _odds_parts(self, x_arr):
        a, b, t = self.params.as_tuple()
        f_cdf = self.baseline.cdf(x_arr)
        f_sf = self.baseline.sf(x_arr)
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            lam_f = f_cdf / f_sf
            lam_g = b * shifted_power_diff(a, t, lam_f)
        return lam_f, lam_g, f_sf

    def cdf(self, x):
        x_arr = _as_array(x)
        _, lam_g, _ = self._odds_parts(x_arr)
        with np.errstate(invalid="ignore"):
            out = np.where(np.isinf(lam_g), 1.0, lam_g / (1.0 + lam_g))
        return _match(out, x)

    def sf(self, x):
        x_arr = _as_array(x)
        _, lam_g, _ = self._odds_parts(x_arr)
        out = np.where(np.isinf(lam_g), 0.0, 1.0 / (1.0 + lam_g))
        return _match(out, x)

    def pdf(self, x):
        x_arr = _as_array(x)
        a, b, t = self.params.as_tuple()
        lam_f, lam_g, f_sf = self._odds_parts(x_arr)
        f_pdf = self.baseline.pdf(x_arr)
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            sf_g = 1.0 / (1.0 + lam_g)
            out = b * t * np.power(a + lam_f, t - 1.0) * sf_g**2 * f_pdf / f_sf**2
        out = self._boundary_repair(out, x_arr, lam_f, f_pdf)
        out = np.where((f_sf == 0.0) | np.isinf(lam_g), 0.0, out)
        return _match(out, x)

    def _boundary_repair(self, out, x_arr, lam_f, f_pdf):
        """Resolve 0*inf forms at the support start.

        With alpha = 0 and theta < 1 the odds-power factor diverges at the
        left boundary; the convention is a +inf sentinel there.  Elsewhere a
        vanishing baseline density wins.
        """
        a, _, t = self.params.as_tuple()
        out = np.where(x_arr < 0.0, 0.0, out)
        nan_form = np.isnan(out) & (f_pdf == 0.0)
        if a == 0.0 and t < 1.0:
            start = nan_form & (lam_f == 0.0)
            out = np.where(start, np.inf, out)
            nan_form = nan_form & ~start
        return np.where(nan_form, 0.0, out)

    def hazard(self, x):
        x_arr = _as_array(x)
        a, b, t = self.params.as_tuple()
        lam_f, lam_g, f_sf = self._odds_parts(x_arr)
        f_pdf = self.baseline.pdf(x_arr)
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            h_f = f_pdf / f_sf
            out = b * t * np.power(a + lam_f, t - 1.0) * (lam_f + 1.0) / (1.0 + lam_g) * h_f
        out = self._boundary_repair(out, x_arr, lam_f, f_pdf)
        return _match(out, x)

    def odds_rate(self, x):
        x_arr = _as_array(x)
        a, b, t = self.params.as_tuple()
        lam_f, _, f_sf = self._odds_parts(x_arr)
        f_pdf = self.baseline.pdf(x_arr)
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            out = b * t * np.power(a + lam_f, t - 1.0) * f_pdf / f_sf**2
        out = self._boundary_repair(out, x_arr, lam_f, f_pdf)
        return _match(out, x)

    def _quantile(self, u):
        a, b, t = self.params.as_tuple()
        lam_target = u / (1.0 - u)
        lam_f = inverse_shifted_power(a, t, lam_target / b)
        # Work on the survival side once the baseline level is deep in the
        # tail; lam_f / (1 + lam_f) saturates to 1.0 in doubles long before
        # the survival level 1 / (1 + lam_f) loses precision.
        v = lam_f / (1.0 + lam_f)
        s = 1.0 / (1.0 + lam_f)
        deep = v > 0.5
        if np.ndim(v) == 0:
            return self.baseline._quantile_sf(s) if deep else self.baseline._quantile(v)
        out = np.empty_like(np.asarray(v, dtype=float))
        if np.any(deep):
            out[deep] = self.baseline._quantile_sf(s[deep])
        if np.any(~deep):
            out[~deep] = self.baseline._quantile(v[~deep])
        return out

    def spec_string(self):
        a, b, t = self.params.as_tuple()
        return f"domo:{a:g},{b:g},{t:g}@{self.baseline.spec_string()}"


def make_domo(baseline, params):
    """Distorted odds Marshall-Olkin law over `baseline`."""
    if not isinstance(params, ParamTriple):
        params = ParamTriple(*params)
    return DistortedOdds(baseline=baseline, params=params)


def make_omo(baseline, beta, theta):
    """Odds Marshall-Olkin law, the alpha = 0 slice of the distorted family."""
    return make_domo(baseline, ParamTriple(alpha=0.0, beta=float(beta), theta=float(theta)))
