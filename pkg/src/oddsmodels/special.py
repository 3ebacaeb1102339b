"""Vectorized special functions needed by the gamma baseline.

Everything here accepts scalars or numpy arrays and is pure numpy, so the
grid and sweep code can evaluate thousands of points per call without a
Python-level loop per point.
"""
from __future__ import annotations

import numpy as np

_MAX_ITER = 600
_EPS = np.finfo(float).eps

# Lanczos coefficients, g = 7, n = 9 (double precision quality).
_LANCZOS_G = 7.0
_LANCZOS = np.array([
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
])


def log_gamma(x):
    """log Gamma(x) for x > 0 via the Lanczos approximation."""
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0.0):
        raise ValueError("log_gamma requires x > 0")
    # Recurrence keeps the core approximation on x >= 0.5.
    small = x < 0.5
    z = np.where(small, x + 1.0, x)
    acc = np.full_like(z, _LANCZOS[0])
    for k in range(1, 9):
        acc = acc + _LANCZOS[k] / (z - 1.0 + k)
    t = z - 0.5 + _LANCZOS_G
    out = 0.5 * np.log(2.0 * np.pi) + (z - 0.5) * np.log(t) - t + np.log(acc)
    out = np.where(small, out - np.log(np.where(small, x, 1.0)), out)
    return out


def _lower_series(s, x):
    """Regularized lower incomplete gamma by power series; use for x < s + 1."""
    s = np.asarray(s, dtype=float)
    x = np.asarray(x, dtype=float)
    # total accumulates sum_k x^k / (s (s+1) ... (s+k)).
    term = np.ones_like(x) / s
    total = term.copy()
    denom = s.astype(float).copy()
    active = x > 0.0
    for _ in range(_MAX_ITER):
        if not np.any(active):
            break
        denom = np.where(active, denom + 1.0, denom)
        term = np.where(active, term * x / denom, term)
        total = np.where(active, total + term, total)
        active = active & (np.abs(term) > np.abs(total) * _EPS)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        log_pref = s * np.log(x) - x - log_gamma(s)
        out = total * np.exp(log_pref)
    return np.where(x <= 0.0, 0.0, out)


def _upper_cf(s, x, raw=False):
    """Regularized upper incomplete gamma via Lentz continued fraction; x >= s + 1.

    With raw=True, return just the continued-fraction factor h, where
    Q(s, x) = x^s e^{-x} / Gamma(s) * h; callers needing log Q in the deep
    tail combine the pieces without underflow.
    """
    s = np.asarray(s, dtype=float)
    x = np.asarray(x, dtype=float)
    tiny = 1e-300
    b = x + 1.0 - s
    c = np.full_like(x, 1.0 / tiny)
    d = 1.0 / np.where(b == 0.0, tiny, b)
    h = d.copy()
    active = np.ones_like(x, dtype=bool)
    for i in range(1, _MAX_ITER + 1):
        if not np.any(active):
            break
        an = -i * (i - s)
        b = b + 2.0
        d_new = an * d + b
        d_new = np.where(np.abs(d_new) < tiny, tiny, d_new)
        c_new = b + an / c
        c_new = np.where(np.abs(c_new) < tiny, tiny, c_new)
        d_new = 1.0 / d_new
        delta = d_new * c_new
        h_new = h * delta
        d = np.where(active, d_new, d)
        c = np.where(active, c_new, c)
        h = np.where(active, h_new, h)
        active = active & (np.abs(delta - 1.0) > _EPS)
    if raw:
        return h
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        log_pref = s * np.log(x) - x - log_gamma(s)
        out = np.exp(log_pref) * h
    return out


def reg_lower_gamma(s, x):
    """Regularized lower incomplete gamma P(s, x), accurate to ~1e-14 relative.

    Series for x < s + 1, continued fraction for the complement otherwise,
    which keeps both tails fully accurate.
    """
    s_arr, x_arr = np.broadcast_arrays(
        np.asarray(s, dtype=float), np.asarray(x, dtype=float)
    )
    out = np.zeros_like(x_arr)
    pos = x_arr > 0.0
    use_series = pos & (x_arr < s_arr + 1.0)
    use_cf = pos & ~use_series
    if np.any(use_series):
        out[use_series] = _lower_series(s_arr[use_series], x_arr[use_series])
    if np.any(use_cf):
        out[use_cf] = 1.0 - _upper_cf(s_arr[use_cf], x_arr[use_cf])
    out = np.clip(out, 0.0, 1.0)
    if np.isscalar(s) and np.isscalar(x):
        return float(out)
    return out


def reg_upper_gamma(s, x):
    """Regularized upper incomplete gamma Q(s, x) = 1 - P(s, x), tail-safe."""
    s_arr, x_arr = np.broadcast_arrays(
        np.asarray(s, dtype=float), np.asarray(x, dtype=float)
    )
    out = np.ones_like(x_arr)
    pos = x_arr > 0.0
    use_cf = pos & (x_arr >= s_arr + 1.0)
    use_series = pos & ~use_cf
    if np.any(use_cf):
        out[use_cf] = _upper_cf(s_arr[use_cf], x_arr[use_cf])
    if np.any(use_series):
        out[use_series] = 1.0 - _lower_series(s_arr[use_series], x_arr[use_series])
    out = np.clip(out, 0.0, 1.0)
    if np.isscalar(s) and np.isscalar(x):
        return float(out)
    return out


# Acklam's rational approximation to the standard normal quantile.  Only used
# to seed Newton iterations, so ~1e-9 accuracy is plenty.
_A = (-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
      1.383577518672690e+02, -3.066479806614716e+01, 2.506628277459239e+00)
_B = (-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
      6.680131188771972e+01, -1.328068155288572e+01)
_C = (-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
      -2.549732539343734e+00, 4.374664141464968e+00, 2.938163982698783e+00)
_D = (7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
      3.754408661907416e+00)


def normal_quantile_seed(u):
    u = np.asarray(u, dtype=float)
    out = np.empty_like(u)
    plow, phigh = 0.02425, 1.0 - 0.02425
    lo = u < plow
    hi = u > phigh
    mid = ~(lo | hi)
    if np.any(mid):
        q = u[mid] - 0.5
        r = q * q
        num = ((((_A[0] * r + _A[1]) * r + _A[2]) * r + _A[3]) * r + _A[4]) * r + _A[5]
        den = ((((_B[0] * r + _B[1]) * r + _B[2]) * r + _B[3]) * r + _B[4]) * r + 1.0
        out[mid] = q * num / den
    if np.any(lo):
        q = np.sqrt(-2.0 * np.log(u[lo]))
        num = ((((_C[0] * q + _C[1]) * q + _C[2]) * q + _C[3]) * q + _C[4]) * q + _C[5]
        den = (((_D[0] * q + _D[1]) * q + _D[2]) * q + _D[3]) * q + 1.0
        out[lo] = num / den
    if np.any(hi):
        q = np.sqrt(-2.0 * np.log(1.0 - u[hi]))
        num = ((((_C[0] * q + _C[1]) * q + _C[2]) * q + _C[3]) * q + _C[4]) * q + _C[5]
        den = (((_D[0] * q + _D[1]) * q + _D[2]) * q + _D[3]) * q + 1.0
        out[hi] = -num / den
    return out


def gamma_unit_quantile(s, u):
    """Solve P(s, y) = u for y (unit scale), vectorized Newton with bracketing.

    Wilson-Hilferty seeds the iteration; a maintained bracket catches any
    Newton step that escapes, so convergence is unconditional for u in (0, 1).
    Converges to |P(s, y) - u| <~ 1e-14.
    """
    u = np.asarray(u, dtype=float)
    if np.any((u < 0.0) | (u >= 1.0)):
        raise ValueError("u must be in [0, 1)")
    scalar_in = u.ndim == 0
    u = np.atleast_1d(u).astype(float)
    s_arr = np.broadcast_to(np.asarray(s, dtype=float), u.shape).copy()

    d = 1.0 / (9.0 * s_arr)
    z = normal_quantile_seed(np.clip(u, 1e-300, 1.0 - 1e-16))
    y = s_arr * (1.0 - d + z * np.sqrt(d)) ** 3
    # Left-tail series inversion P(s, y) ~ y^s / Gamma(s+1) rescues the seed
    # where the Wilson-Hilferty cube goes nonpositive or tiny.
    with np.errstate(divide="ignore"):
        y_small = np.exp((np.log(np.clip(u, 1e-300, None)) + log_gamma(s_arr + 1.0)) / s_arr)
    y = np.where(y < y_small, y_small, y)
    y = np.clip(y, 1e-300, None)

    lo = np.zeros_like(y)
    hi = np.full_like(y, np.inf)
    log_gamma_s = log_gamma(s_arr)
    for _ in range(120):
        p = reg_lower_gamma(s_arr, y)
        err = p - u
        too_low = err < 0.0
        lo = np.where(too_low, np.maximum(lo, y), lo)
        hi = np.where(~too_low, np.minimum(hi, y), hi)
        if np.all(np.abs(err) <= 1e-14 * np.maximum(u, 1e-8) + 1e-300):
            break
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            log_pdf = (s_arr - 1.0) * np.log(y) - y - log_gamma_s
            step = err / np.exp(log_pdf)
        step = np.where(np.isfinite(step), step, 0.0)
        y_new = y - step
        # When Newton escapes the bracket, bisect: geometric mean once both
        # ends are finite and positive (the bracket can span many decades),
        # otherwise grow/shrink multiplicatively.
        bad = (y_new <= lo) | (y_new >= hi) | ~np.isfinite(y_new)
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            mid = np.where(
                np.isinf(hi),
                10.0 * np.maximum(lo, 1.0),
                np.where(lo > 0.0, np.sqrt(lo * hi), 0.1 * hi),
            )
        y = np.where(bad, mid, y_new)
        y = np.clip(y, 1e-300, None)
    y = np.where(u == 0.0, 0.0, y)
    if scalar_in:
        return float(y[0])
    return y


def gamma_unit_isf(s, q):
    """Solve Q(s, y) = q for y (unit scale), accurate for q down to ~1e-290.

    Newton runs on log Q, whose derivative is -pdf/Q, so the deep right tail
    stays well conditioned where P = 1 - q is unrepresentable.
    """
    q = np.asarray(q, dtype=float)
    if np.any((q <= 0.0) | (q > 1.0)):
        raise ValueError("q must be in (0, 1]")
    scalar_in = q.ndim == 0
    q = np.atleast_1d(q).astype(float)
    s_arr = np.broadcast_to(np.asarray(s, dtype=float), q.shape).copy()
    out = np.empty_like(q)

    # The continued-fraction path needs y >= s + 1, so anything with a larger
    # upper tail than Q(s+1) inverts the lower function instead.
    q_switch = reg_upper_gamma(s_arr, s_arr + 1.0)
    easy = q >= np.asarray(q_switch)
    if np.any(easy):
        out[easy] = gamma_unit_quantile(s_arr[easy], 1.0 - q[easy])
    hard = ~easy
    if not np.any(hard):
        return float(out[0]) if scalar_in else out
    sh = s_arr[hard]
    log_q = np.log(q[hard])
    lg = log_gamma(sh)
    # Asymptotic seed: log Q ~ (s-1) log y - y - log Gamma(s).
    y = -log_q + lg
    y = np.maximum(y, sh + 1.5)
    for _ in range(80):
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            h_cf = _upper_cf(sh, y, raw=True)
            log_upper = sh * np.log(y) - y - lg + np.log(h_cf)
            log_pdf = (sh - 1.0) * np.log(y) - y - lg
        err = log_upper - log_q
        if np.all(np.abs(err) <= 1e-13):
            break
        step = err * np.exp(log_upper - log_pdf)
        step = np.where(np.isfinite(step), step, 0.0)
        y = np.maximum(y + step, np.maximum(sh + 1.0, y * 0.25))
    out[hard] = y
    return float(out[0]) if scalar_in else out
