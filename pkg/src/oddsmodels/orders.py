"""Numeric checkers for stochastic orders and hazard/odds shape classes.

Verdict semantics are grid-based: "holds" means no violation beyond slack was
found at the working resolution, "crosses" means violations beyond slack were
found in both directions, and every verdict records the grid it was computed
on.  Pointwise relations (st, hr, rh, lr) are evaluated on the union of the
two quantile images; quantile-composition relations (convex transform,
dispersive) are evaluated along shared probability levels, which samples the
transform F2^-1 o F1 exactly at the first law's quantile abscissas.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import CapabilityError, ValidationError

RELATIONS = ("st", "hr", "rh", "lr", "c", "disp")

_DENSITY_FLOOR = 1e-300


@dataclass(frozen=True)
class GridSpec:
    """Resolution and tolerance of a numeric order check."""

    count: int = 2049
    p_lo: float = 1e-4
    p_hi: float = 1.0 - 1e-4
    slack: float = 1e-9

    def __post_init__(self):
        if self.count < 16:
            raise ValidationError("grid count must be >= 16")
        if not (0.0 < self.p_lo < self.p_hi < 1.0):
            raise ValidationError("need 0 < p_lo < p_hi < 1")
        if not self.slack > 0.0:
            raise ValidationError("slack must be > 0")

    def levels(self):
        return np.linspace(self.p_lo, self.p_hi, self.count)


@dataclass(frozen=True)
class OrderVerdict:
    relation: str
    status: str  # holds | reversed | crosses | inconclusive
    equal: bool
    witness: Optional[float]
    max_violation: float
    points: int
    spec: GridSpec
    note: str = ""

    @property
    def holds(self):
        return self.status == "holds" or self.equal

    @property
    def reversed_(self):
        return self.status == "reversed" or self.equal


@dataclass(frozen=True)
class ShapeReport:
    ihr: bool
    dhr: bool
    ior: bool
    dor: bool
    cdf_convex: bool
    cdf_concave: bool
    note: str = ""


def build_grid(d1, d2, spec: GridSpec = GridSpec()):
    """Sorted, deduplicated union of both quantile images over the level set."""
    for d in (d1, d2):
        if not hasattr(d, "quantile"):
            raise CapabilityError("build_grid requires distributions with a quantile")
    levels = spec.levels()
    xs = np.sort(np.concatenate([np.asarray(d1.quantile(levels), dtype=float),
                                 np.asarray(d2.quantile(levels), dtype=float)]))
    keep = np.empty(xs.shape, dtype=bool)
    keep[0] = True
    keep[1:] = np.diff(xs) > 1e-12 * np.maximum(1.0, np.abs(xs[1:]))
    return xs[keep]


def _first_flip(xs, signed):
    """Abscissa of the first sign change among the beyond-slack points."""
    idx = np.flatnonzero(signed != 0)
    signs = signed[idx]
    flips = np.flatnonzero(signs[1:] != signs[:-1])
    if flips.size == 0:
        return None
    return float(xs[idx[flips[0] + 1]])


def _verdict(relation, spec, xs, defects, slacks, note=""):
    """Classify a defect profile: positive defects support the relation."""
    defects = np.asarray(defects, dtype=float)
    slacks = np.asarray(slacks, dtype=float)
    finite = np.isfinite(defects)
    defects = defects[finite]
    slacks = slacks[finite] if slacks.shape == finite.shape else slacks
    xs_f = np.asarray(xs, dtype=float)[finite]
    if defects.size == 0:
        return OrderVerdict(relation, "inconclusive", False, None, np.nan,
                            xs_f.size, spec, note + " no finite comparison points")
    signed = np.where(defects > slacks, 1, np.where(defects < -slacks, -1, 0))
    pos = bool(np.any(signed > 0))
    neg = bool(np.any(signed < 0))
    worst = float(defects[np.argmax(np.abs(defects))])
    if pos and neg:
        return OrderVerdict(relation, "crosses", False, _first_flip(xs_f, signed),
                            worst, xs_f.size, spec, note)
    if pos:
        return OrderVerdict(relation, "holds", False, None, worst, xs_f.size, spec, note)
    if neg:
        return OrderVerdict(relation, "reversed", False, None, worst, xs_f.size, spec, note)
    # Everything inside slack: equality unless noise pushes both ways above
    # a tenth of the slack, which is the noise-dominated band.
    floor = 0.1 * slacks
    if np.any(defects > floor) and np.any(defects < -floor):
        return OrderVerdict(relation, "inconclusive", False, None, worst,
                            xs_f.size, spec, note + " sub-slack noise in both directions")
    return OrderVerdict(relation, "holds", True, None, worst, xs_f.size, spec, note)


def _monotone_defects(values, sign):
    """Consecutive increments oriented so that positive = monotone as claimed."""
    v = np.asarray(values, dtype=float)
    return sign * (v[1:] - v[:-1])


def _require(d, attr, relation):
    if not hasattr(d, attr):
        raise CapabilityError(f"relation {relation!r} needs distributions with {attr!r}")


def check_order(relation, d1, d2, spec: GridSpec = GridSpec()):
    """Numeric verdict for `d1 <= d2` under the named stochastic order.

    st compares survivals (odds comparison cross-checks it), hr and rh compare
    hazard and reversed-hazard rates, lr checks monotonicity of the density
    ratio, c convexity of the quantile transform, disp the spread of the
    quantile transform.
    """
    if relation not in RELATIONS:
        raise ValidationError(f"unknown relation {relation!r}")
    tol = spec.slack
    note = f"union quantile grid on [{spec.p_lo:g}, {spec.p_hi:g}]"

    if relation in ("st", "hr", "rh", "lr"):
        if relation in ("hr", "rh", "lr"):
            _require(d1, "pdf", relation)
            _require(d2, "pdf", relation)
        xs = build_grid(d1, d2, spec)
        if relation == "st":
            sf1 = np.asarray(d1.sf(xs)); sf2 = np.asarray(d2.sf(xs))
            defects = sf2 - sf1
            slacks = tol * (1.0 + np.abs(sf1) + np.abs(sf2))
            primary = _verdict(relation, spec, xs, defects, slacks, note)
            with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
                o1 = np.asarray(d1.odds(xs)); o2 = np.asarray(d2.odds(xs))
            odds_defects = o1 - o2
            odds_slacks = tol * (1.0 + np.abs(o1) + np.abs(o2))
            secondary = _verdict(relation, spec, xs, odds_defects, odds_slacks, note)
            if secondary.status != primary.status and not (primary.equal or secondary.equal):
                return OrderVerdict(relation, "inconclusive", False, None,
                                    primary.max_violation, xs.size, spec,
                                    note + " survival and odds checks disagree")
            return primary
        if relation == "hr":
            h1 = np.asarray(d1.hazard(xs)); h2 = np.asarray(d2.hazard(xs))
            defects = h1 - h2
            slacks = tol * (1.0 + np.abs(h1) + np.abs(h2))
            return _verdict(relation, spec, xs, defects, slacks, note)
        if relation == "rh":
            r1 = np.asarray(d1.reversed_hazard(xs)); r2 = np.asarray(d2.reversed_hazard(xs))
            defects = r2 - r1
            slacks = tol * (1.0 + np.abs(r1) + np.abs(r2))
            return _verdict(relation, spec, xs, defects, slacks, note)
        # lr: density ratio f2/f1 must increase where both densities live.
        f1 = np.asarray(d1.pdf(xs)); f2 = np.asarray(d2.pdf(xs))
        ok = (f1 > _DENSITY_FLOOR) & (f2 > _DENSITY_FLOOR) & np.isfinite(f1) & np.isfinite(f2)
        xs, f1, f2 = xs[ok], f1[ok], f2[ok]
        if xs.size < 3:
            return OrderVerdict(relation, "inconclusive", False, None, np.nan,
                                xs.size, spec, note + " densities vanish on grid")
        ratio = f2 / f1
        defects = _monotone_defects(ratio, +1.0)
        slacks = tol * (1.0 + np.abs(ratio[:-1]) + np.abs(ratio[1:]))
        return _verdict(relation, spec, xs[1:], defects, slacks, note)

    # Quantile-composition relations along shared probability levels.
    _require(d1, "quantile", relation)
    _require(d2, "quantile", relation)
    levels = spec.levels()
    xs = np.asarray(d1.quantile(levels), dtype=float)
    ys = np.asarray(d2.quantile(levels), dtype=float)
    note = f"quantile levels on [{spec.p_lo:g}, {spec.p_hi:g}]"
    if relation == "disp":
        phi = ys - xs
        defects = _monotone_defects(phi, +1.0)
        slacks = tol * (1.0 + np.abs(phi[:-1]) + np.abs(phi[1:])
                        + np.abs(xs[:-1]) + np.abs(xs[1:]))
        return _verdict(relation, spec, xs[1:], defects, slacks, note)
    # c: slopes of F2^-1 o F1 must be nondecreasing.
    dx = np.diff(xs)
    good = dx > 0
    slopes = np.diff(ys)[good] / dx[good]
    mids = xs[1:][good]
    if slopes.size < 2:
        return OrderVerdict(relation, "inconclusive", False, None, np.nan,
                            int(mids.size), spec, note + " degenerate abscissas")
    defects = _monotone_defects(slopes, +1.0)
    amp = np.maximum(np.abs(ys).max(), 1.0)
    gaps = mids[1:] - mids[:-1]
    slacks = tol * (1.0 + np.abs(slopes[:-1]) + np.abs(slopes[1:])) \
        + tol * amp * 1e-3 / np.maximum(gaps, 1e-300)
    return _verdict(relation, spec, mids[1:], defects, slacks, note)


def classify_shape(d, spec: GridSpec = GridSpec()):
    """Monotonicity flags for hazard and odds rate plus cdf curvature."""
    _require(d, "pdf", "classify")
    _require(d, "quantile", "classify")
    xs = np.asarray(d.quantile(spec.levels()), dtype=float)
    xs = xs[np.concatenate([[True], np.diff(xs) > 0])]
    tol = spec.slack

    def monotone(values, sign):
        v = np.asarray(values, dtype=float)
        ok = np.isfinite(v)
        v = v[ok]
        if v.size < 3:
            return False
        defects = sign * (v[1:] - v[:-1])
        slacks = tol * (1.0 + np.abs(v[1:]) + np.abs(v[:-1]))
        return bool(np.all(defects >= -slacks))

    h = np.asarray(d.hazard(xs))
    lam = np.asarray(d.odds_rate(xs)) if hasattr(d, "odds_rate") \
        else np.asarray(d.pdf(xs)) / np.asarray(d.sf(xs)) ** 2
    ihr, dhr = monotone(h, +1.0), monotone(h, -1.0)
    ior, dor = monotone(lam, +1.0), monotone(lam, -1.0)

    cdf = np.asarray(d.cdf(xs))
    slopes = np.diff(cdf) / np.diff(xs)
    sl_slack = tol * (1.0 + np.abs(slopes[:-1]) + np.abs(slopes[1:]))
    convex = bool(np.all(slopes[1:] - slopes[:-1] >= -sl_slack))
    concave = bool(np.all(slopes[:-1] - slopes[1:] >= -sl_slack))

    notes = []
    if ihr and dhr:
        notes.append("constant hazard")
    if ior and dor:
        notes.append("constant odds rate")
    return ShapeReport(ihr, dhr, ior, dor, convex, concave, "; ".join(notes))
