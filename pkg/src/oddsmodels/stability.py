"""Monte Carlo check of geometric extreme stability.

Take a geometric number N of i.i.d. draws from a distorted-odds law with
parameters (alpha, beta, theta).  The minimum of the group follows the same
family with beta replaced by beta / p, the maximum with beta replaced by
beta * p.  The experiment samples many groups and compares the empirical
extremes against those two predicted laws with a Kolmogorov-Smirnov distance.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .distorted import DistortedOdds, make_domo
from .errors import DomainError, ValidationError
from .params import ParamTriple

GROUP_SIZE_CAP = 10_000_000

# Asymptotic 1% critical value for the one-sample KS statistic.
KS_CRITICAL_COEFF = 1.63


@dataclass(frozen=True)
class StabilityReport:
    params: ParamTriple
    p: float
    n: int
    seed: int
    ks_min: float
    ks_max: float
    critical: float
    min_law_ok: bool
    max_law_ok: bool
    mean_group_size: float
    cap_hits: int


def ks_distance(samples, cdf):
    """Kolmogorov-Smirnov distance between sorted samples and a cdf callable."""
    xs = np.asarray(samples, dtype=float)
    if xs.size == 0:
        raise ValidationError("ks_distance needs at least one sample")
    if np.any(np.diff(xs) < 0):
        xs = np.sort(xs)
    n = xs.size
    values = np.asarray(cdf(xs), dtype=float)
    upper = np.arange(1, n + 1) / n - values
    lower = values - np.arange(0, n) / n
    return float(np.max(np.maximum(np.abs(upper), np.abs(lower))))


def _geometric_counts(rng, p, n):
    """Group sizes with P(N=k) = p (1-p)^(k-1), k >= 1, capped."""
    if p == 1.0:
        return np.ones(n, dtype=np.int64), 0
    u = rng.random(n)
    u = np.where(u == 0.0, np.nextafter(0.0, 1.0), u)
    raw = np.ceil(np.log(u) / np.log1p(-p))
    raw = np.maximum(raw, 1.0)
    cap_hits = int(np.sum(raw > GROUP_SIZE_CAP))
    counts = np.minimum(raw, GROUP_SIZE_CAP).astype(np.int64)
    return counts, cap_hits


def geometric_extreme_experiment(d: DistortedOdds, p, n, seed) -> StabilityReport:
    """Draw n geometric-size groups from d and KS-test both predicted extremes."""
    if not isinstance(d, DistortedOdds):
        raise DomainError("geometric stability needs a distorted-odds law")
    if not (0.0 < p <= 1.0):
        raise DomainError("p must be in (0, 1]")
    if n < 100:
        raise DomainError("need at least 100 groups")
    n = int(n)
    rng = np.random.default_rng(seed)
    counts, cap_hits = _geometric_counts(rng, float(p), n)
    total = int(counts.sum())
    draws = d._quantile(rng.random(total))
    offsets = np.concatenate([[0], np.cumsum(counts)[:-1]])
    mins = np.minimum.reduceat(draws, offsets)
    maxs = np.maximum.reduceat(draws, offsets)

    a, b, t = d.params.as_tuple()
    min_law = make_domo(d.baseline, ParamTriple(a, b / float(p), t))
    max_law = make_domo(d.baseline, ParamTriple(a, b * float(p), t))
    ks_min = ks_distance(np.sort(mins), min_law.cdf)
    ks_max = ks_distance(np.sort(maxs), max_law.cdf)
    critical = KS_CRITICAL_COEFF / np.sqrt(n)
    return StabilityReport(
        params=d.params,
        p=float(p),
        n=n,
        seed=int(seed),
        ks_min=ks_min,
        ks_max=ks_max,
        critical=float(critical),
        min_law_ok=ks_min < critical,
        max_law_ok=ks_max < critical,
        mean_group_size=float(counts.mean()),
        cap_hits=cap_hits,
    )
