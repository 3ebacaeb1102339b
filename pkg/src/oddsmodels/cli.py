"""Command-line surface: curve evaluation, shape/order checks, sweeps.

Exit codes: 0 success (for `order`: relation holds), 1 reversed, 2 crosses,
3 inconclusive, 64 parse/usage errors, 65 capability errors.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .baseline import make_baseline
from .distorted import make_domo
from .ell import make_ell
from .errors import CapabilityError, DomainError, ParseError, ValidationError
from .orders import GridSpec, check_order, classify_shape
from .params import ParamTriple
from .stability import geometric_extreme_experiment
from .theorems import SweepConfig, run_sweep

EXIT_PARSE = 64
EXIT_CAPABILITY = 65

_ORDER_EXIT = {"holds": 0, "reversed": 1, "crosses": 2, "inconclusive": 3}


def parse_dist_spec(text, offset=0):
    """Parse a distribution spec string; errors carry the failing position.

    Grammar: exp:<rate> | gamma:<shape>,<scale> | gammarate:<shape>,<rate>
    | weibull:<shape>,<scale> | loglogistic | ell:<a>,<b>,<t>
    | domo:<a>,<b>,<t>@<baseline-spec>
    """
    text = text.strip()
    if not text:
        raise ParseError(f"empty distribution spec at position {offset}")
    head, sep, rest = text.partition(":")
    if head == "loglogistic" and not sep:
        return make_baseline("loglogistic")
    if not sep:
        raise ParseError(
            f"expected ':' after family name at position {offset + len(head)} in {text!r}")

    def numbers(chunk, chunk_offset, expected):
        parts = chunk.split(",")
        if len(parts) != expected:
            raise ParseError(
                f"expected {expected} comma-separated value(s) at position "
                f"{chunk_offset} in {text!r}, got {len(parts)}")
        out = []
        pos = chunk_offset
        for part in parts:
            try:
                out.append(float(part))
            except ValueError:
                raise ParseError(
                    f"bad number {part!r} at position {pos} in {text!r}") from None
            pos += len(part) + 1
        return out

    body_offset = offset + len(head) + 1
    if head == "exp":
        return make_baseline("exp", *numbers(rest, body_offset, 1))
    if head in ("gamma", "gammarate", "weibull"):
        return make_baseline(head, *numbers(rest, body_offset, 2))
    if head == "ell":
        return make_ell(*numbers(rest, body_offset, 3))
    if head == "domo":
        triple, sep2, base_text = rest.partition("@")
        if not sep2:
            raise ParseError(
                f"domo spec needs '@<baseline>' at position "
                f"{body_offset + len(triple)} in {text!r}")
        a, b, t = numbers(triple, body_offset, 3)
        baseline = parse_dist_spec(base_text, offset=body_offset + len(triple) + 1)
        return make_domo(baseline, ParamTriple(a, b, t))
    raise ParseError(f"unknown family {head!r} at position {offset} in {text!r}")


def _fmt(value):
    return f"{value:.12g}"


def _write_csv(path, header, rows):
    lines = [",".join(header)]
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    payload = "\n".join(lines) + "\n"
    if path == "-":
        sys.stdout.write(payload)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(payload)


def _cmd_eval(args):
    dist = parse_dist_spec(args.dist)
    if args.points < 1:
        raise ParseError("--points must be >= 1")
    if not (0.0 < args.plo <= args.phi < 1.0):
        raise ParseError("need 0 < plo <= phi < 1")
    levels = np.linspace(args.plo, args.phi, args.points)
    xs = np.asarray(dist.quantile(levels), dtype=float)
    rows = []
    with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
        cdf = np.asarray(dist.cdf(xs))
        pdf = np.asarray(dist.pdf(xs))
        sf = np.asarray(dist.sf(xs))
        haz = np.asarray(dist.hazard(xs))
        odds = np.asarray(dist.odds(xs))
        rate = np.asarray(dist.odds_rate(xs))
    for i in range(xs.size):
        rows.append((xs[i], cdf[i], pdf[i], sf[i], haz[i], odds[i], rate[i]))
    _write_csv(args.out, ["x", "cdf", "pdf", "survival", "hazard", "odds", "odds_rate"], rows)
    return 0


def _cmd_classify(args):
    dist = parse_dist_spec(args.dist)
    rep = classify_shape(dist, GridSpec(count=args.grid_count))
    for key in ("ihr", "dhr", "ior", "dor", "cdf_convex", "cdf_concave"):
        print(f"{key}={'true' if getattr(rep, key) else 'false'}")
    print(f"note={rep.note}")
    return 0


def _cmd_order(args):
    left = parse_dist_spec(args.left)
    right = parse_dist_spec(args.right)
    v = check_order(args.relation, left, right, GridSpec(count=args.grid_count))
    print(f"relation={v.relation}")
    print(f"status={v.status}")
    print(f"equal={'true' if v.equal else 'false'}")
    print(f"witness={_fmt(v.witness) if v.witness is not None else 'none'}")
    print(f"max_violation={_fmt(v.max_violation)}")
    print(f"points={v.points}")
    print(f"note={v.note}")
    return _ORDER_EXIT[v.status]


def _cmd_verify(args):
    cfg = SweepConfig(trials=args.trials, seed=args.seed,
                      grid=GridSpec(count=args.grid_count))
    rep = run_sweep(cfg)
    doc = json.dumps(rep.to_dict(), sort_keys=True, indent=2) + "\n"
    if args.out == "-":
        sys.stdout.write(doc)
    else:
        with open(args.out, "w", newline="") as fh:
            fh.write(doc)
    worst = 0
    for case in rep.cases:
        dis = len(case["disagreements"])
        tag = "FLAGGED" if case["flagged"] else ("ok" if dis == 0 else "DISAGREE")
        line = (f"{case['id']}: applicable={case['trials_applicable']} "
                f"agreements={case['agreements']} disagreements={dis} [{tag}]")
        if case["flagged"] and "readings" in case:
            parts = ", ".join(
                f"{name}: {r['applicable']} applicable / {len(r['disagreements'])} disagree"
                for name, r in case["readings"].items())
            line += f" readings({parts})"
        print(line, file=sys.stderr)
        if not case["flagged"]:
            worst = max(worst, dis)
    return 0 if worst == 0 else 1


def _cmd_stability(args):
    dist = parse_dist_spec(args.dist)
    from .distorted import DistortedOdds

    if not isinstance(dist, DistortedOdds):
        raise CapabilityError("stability requires a domo:... distribution spec")
    rep = geometric_extreme_experiment(dist, args.p, args.n, args.seed)
    print(f"params={rep.params.alpha:.12g},{rep.params.beta:.12g},{rep.params.theta:.12g}")
    print(f"p={_fmt(rep.p)}")
    print(f"n={rep.n}")
    print(f"seed={rep.seed}")
    print(f"ks_min={_fmt(rep.ks_min)}")
    print(f"ks_max={_fmt(rep.ks_max)}")
    print(f"critical={_fmt(rep.critical)}")
    print(f"min_law_ok={'true' if rep.min_law_ok else 'false'}")
    print(f"max_law_ok={'true' if rep.max_law_ok else 'false'}")
    print(f"mean_group_size={_fmt(rep.mean_group_size)}")
    print(f"cap_hits={rep.cap_hits}")
    return 0 if (rep.min_law_ok and rep.max_law_ok) else 1


def _cmd_prentice(args):
    baseline = make_baseline("gamma", 1.13, 116.6)
    fitted = make_domo(baseline, ParamTriple(0.0, 4.4324, 0.6822))
    xs = np.linspace(0.0, 1000.0, 1001)
    with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
        base_pdf = np.asarray(baseline.pdf(xs))
        domo_pdf = np.asarray(fitted.pdf(xs))
    rows = [(xs[i], base_pdf[i], domo_pdf[i]) for i in range(xs.size)]
    _write_csv(args.out, ["x", "baseline_pdf", "domo_pdf"], rows)
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def build_parser():
    parser = _Parser(prog="oddsmodels",
                     description="Distorted proportional-odds families and order checks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="write curve CSV at quantile-spaced abscissas")
    p.add_argument("--dist", required=True)
    p.add_argument("--points", type=int, default=201)
    p.add_argument("--plo", type=float, default=1e-4)
    p.add_argument("--phi", type=float, default=1.0 - 1e-4)
    p.add_argument("--out", default="-")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("classify", help="print hazard/odds shape flags")
    p.add_argument("--dist", required=True)
    p.add_argument("--grid-count", type=int, default=2049)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("order", help="check a stochastic order between two laws")
    p.add_argument("--relation", required=True, choices=["st", "hr", "rh", "lr", "c", "disp"])
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--grid-count", type=int, default=2049)
    p.set_defaults(func=_cmd_order)

    p = sub.add_parser("verify", help="run the theorem sweep and write a JSON report")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--grid-count", type=int, default=513)
    p.add_argument("--out", default="-")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("stability", help="geometric extreme stability experiment")
    p.add_argument("--dist", required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=_cmd_stability)

    p = sub.add_parser("prentice", help="lung-trial example densities as CSV")
    p.add_argument("--out", default="-")
    p.set_defaults(func=_cmd_prentice)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except (ParseError, ValidationError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapabilityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY


if __name__ == "__main__":
    sys.exit(main())
