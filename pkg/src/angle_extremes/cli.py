"""Command-line interface.

Exit codes: 0 success, 1 theorem violation, 2 input or usage error,
3 geometric domain error.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys

from . import analysis, hyperbolic
from .errors import DomainError, TheoremViolation
from .euclidean import regular_ngon
from .io import SchemaError, read_config, write_config
from .optimizer import DEFAULT_BUDGET, DEFAULT_RESTARTS, optimize

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_DOMAIN = 0, 1, 2, 3


def fmt(x: float) -> str:
    return format(x, ".12g")


def _bound_label(n):
    return f"pi/{n}"


def cmd_min_angle(args):
    cfg = read_config(args.input)
    rep = analysis.min_angle(cfg)
    bound = math.pi / cfg.n
    meets = rep.min_angle <= bound + analysis.BOUND_SLACK
    if args.json:
        print(json.dumps({
            "geometry": cfg.geometry,
            "n": cfg.n,
            "min_angle": rep.min_angle,
            "min_angle_degrees": rep.min_angle_degrees,
            "witness": list(rep.witness),
            "bound": bound,
            "meets_bound": meets,
            "triples_scanned": rep.total_triples_scanned,
        }, indent=2))
        return EXIT_OK
    print(f"geometry = {cfg.geometry}, n = {cfg.n}")
    print(f"min_angle = {fmt(rep.min_angle)} rad ({fmt(rep.min_angle_degrees)} deg)")
    print(f"witness = {rep.witness} (angle at index {rep.witness[1]})")
    print(f"bound = {fmt(bound)} ({_bound_label(cfg.n)})")
    print(f"meets_bound = {str(meets).lower()}")
    return EXIT_OK


def cmd_witness(args):
    cfg = read_config(args.input)
    cert = analysis.constructive_witness(cfg)
    print(json.dumps(cert.to_dict(), indent=2))
    return EXIT_OK


def cmd_ngon(args):
    if args.geometry == "euclidean":
        if args.area_eps is not None:
            raise _Usage("--area-eps only applies to --geometry hyperbolic")
        cfg = regular_ngon(args.n, 1.0 if args.circumradius is None else args.circumradius)
        write_config(args.out, cfg)
        print(f"wrote regular {args.n}-gon to {args.out}")
        return EXIT_OK
    if args.circumradius is not None:
        raise _Usage("--circumradius only applies to --geometry euclidean")
    if args.area_eps is None:
        raise _Usage("--geometry hyperbolic requires --area-eps")
    cfg = hyperbolic.inscribed_regular_ngon(args.n, args.area_eps)
    write_config(args.out, cfg)
    print(json.dumps(hyperbolic.validate_ngon(cfg, args.area_eps).to_dict(), indent=2))
    return EXIT_OK


def cmd_verify(args):
    summary = analysis.verify_theorem(
        args.geometry, args.n, args.trials, sampler=args.sampler, seed=args.seed,
        radius=args.radius, threads=args.threads, raise_on_violation=False,
    )
    print(json.dumps(summary.to_dict(), indent=2))
    bad = summary.violations or summary.witness_failures
    return EXIT_VIOLATION if bad else EXIT_OK


def cmd_optimize(args):
    res = optimize(args.geometry, args.n, budget=args.budget, seed=args.seed,
                   restarts=args.restarts, threads=args.threads)
    if args.trace:
        res.write_trace(args.trace)
    print(json.dumps(res.summary(), indent=2))
    return EXIT_OK


def cmd_hist(args):
    cfg = read_config(args.input)
    edges, counts = analysis.angle_histogram(cfg, args.bins)
    with open(args.out, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["bin_lo", "bin_hi", "count"])
        for lo, hi, c in zip(edges[:-1], edges[1:], counts):
            w.writerow([repr(float(lo)), repr(float(hi)), int(c)])
    print(f"wrote {args.bins} bins ({int(counts.sum())} angles) to {args.out}")
    return EXIT_OK


class _Usage(Exception):
    pass


def _positive_int(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="angle-extremes",
        description="Minimum angles of point configurations in the Euclidean and hyperbolic planes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("min-angle", help="smallest angle over all triples")
    p.add_argument("--input", required=True)
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_min_angle)

    p = sub.add_parser("witness", help="certificate triple with angle <= pi/n")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("ngon", help="write a regular n-gon configuration")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--geometry", choices=["euclidean", "hyperbolic"], required=True)
    p.add_argument("--area-eps", type=float, help="hyperbolic: area of the circumscribed disk")
    p.add_argument("--circumradius", type=float, help="euclidean circumradius (default 1)")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_ngon)

    def add_threads(p):
        p.add_argument("--threads", type=_positive_int, default=None,
                       help="worker processes (default: $ANGLE_EXTREMES_THREADS or CPU count)")

    p = sub.add_parser("verify", help="Monte-Carlo check of the pi/n statement")
    p.add_argument("--geometry", choices=["euclidean", "hyperbolic"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=_positive_int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sampler", choices=["uniform-square", "hyperbolic-uniform"])
    p.add_argument("--radius", type=float, default=1.0,
                   help="hyperbolic sampling disk radius (default 1)")
    add_threads(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("optimize", help="search for a maxi-min configuration")
    p.add_argument("--geometry", choices=["euclidean", "hyperbolic"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--budget", type=_positive_int, default=DEFAULT_BUDGET)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=_positive_int, default=DEFAULT_RESTARTS)
    p.add_argument("--trace", help="CSV path for the best-so-far trace")
    add_threads(p)
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("hist", help="histogram of all triple angles over [0, pi]")
    p.add_argument("--input", required=True)
    p.add_argument("--bins", type=_positive_int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_hist)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Usage as e:
        parser.error(str(e))  # exits with status 2
    except (SchemaError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except TheoremViolation as e:
        print(f"theorem violation: {e}", file=sys.stderr)
        return EXIT_VIOLATION
    except DomainError as e:
        print(f"domain error: {e}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
