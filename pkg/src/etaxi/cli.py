"""Command-line front end: ``etaxi verify`` and ``etaxi sample``.

Exit codes: 0 success, 1 a verification check failed, 2 usage or
configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from contextlib import contextmanager

import numpy as np

from . import contour as ct
from .covering import AlgebraVector
from .embeddings import q_imaginary, q_real
from .errors import EtaXiError
from .flows import FlowSpec, flow_apply
from .group import IDENTITY, make_point
from .suites import SUITES, VerifyConfig, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def fmt(x: float) -> str:
    """17 significant digits: enough to round-trip any double."""
    return format(float(x), ".17g")


def parse_complex(text: str) -> complex:
    try:
        return complex(text.strip().replace(" ", "").replace("i", "j"))
    except ValueError:
        raise UsageError(f"not a complex number: {text!r}") from None


def parse_pair(text: str) -> tuple[complex, complex]:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"expected two comma-separated components, got {text!r}")
    return parse_complex(parts[0]), parse_complex(parts[1])


@contextmanager
def open_out(path: str):
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


# -- verify ----------------------------------------------------------------


def cmd_verify(args) -> int:
    if args.samples is not None and args.samples < 1:
        raise UsageError("--samples must be >= 1")
    if args.tol is not None and not (args.tol >= 0 and math.isfinite(args.tol)):
        raise UsageError("--tol must be a finite non-negative number")
    if not (args.h > 0 and math.isfinite(args.h)):
        raise UsageError("--h must be positive")
    if args.n_contour < 2:
        raise UsageError("--n-contour must be >= 2")
    cfg = VerifyConfig(
        seed=args.seed,
        samples=args.samples,
        tol=args.tol,
        h=args.h,
        mu_probe=args.mu_probe,
        n_contour=args.n_contour,
    )
    report = run_suite(args.suite, cfg)
    with open_out(args.out) as fh:
        fh.write(json.dumps(report, indent=2, allow_nan=False))
        fh.write("\n")
    if args.out != "-":
        for c in report["checks"]:
            flag = "PASS" if c["pass"] else "FAIL"
            print(f"{flag} {c['check_id']}: {c['max_residual']} <= {c['tolerance']}", file=sys.stderr)
    return EXIT_OK if report["pass"] else EXIT_FAIL


# -- sample ----------------------------------------------------------------


def _point_cols(p) -> list[float]:
    return [p.eta.real, p.eta.imag, p.xi.real, p.xi.imag]


POINT_COLUMNS = ["eta_re", "eta_im", "xi_re", "xi_im"]


def sample_rows(args) -> tuple[list[str], list[list[float]], dict]:
    """Build (columns, rows, params) for a ``sample`` invocation."""
    kind = args.kind
    if kind in ("contour", "cylinder"):
        n = args.n if args.n is not None else ct.DEFAULT_SAMPLES
        path = ct.build_time_path(args.F, args.beta, n)
        params = {"F": args.F, "beta": args.beta, "x1": args.x1, "n": n,
                  "segment_order": list(ct.SEGMENT_ORDER)}
        cyl = ct.map_to_cylinder(path, args.x1)
        if kind == "cylinder":
            rows = [[s, *c.as_tuple()] for s, c in zip(path.s, cyl.points)]
            return ["s", "u0", "v0", "u1", "v1"], rows, params
        v0 = ct.map_to_v0(path, args.x1)
        rows = [
            [s, z.real, z.imag, c.v0, *_point_cols(p)]
            for s, z, c, p in zip(path.s, path.polyline, cyl.points, v0.points)
        ]
        return ["s", "t", "sigma", "v0", *POINT_COLUMNS], rows, params

    if kind == "embedding":
        n = args.n if args.n is not None else 100
        if n < 1:
            raise UsageError("--n must be >= 1")
        if args.slice == "imaginary":
            taus = 2 * math.pi * np.arange(n) / n
            rows = [[tau, args.x1, *_point_cols(q_imaginary(args.t, tau, args.x1))] for tau in taus]
            params = {"slice": "imaginary", "t": args.t, "x1": args.x1, "n": n}
            return ["tau", "x1", *POINT_COLUMNS], rows, params
        ts = np.linspace(args.t_min, args.t_max, n)
        rows = [[t, args.x1, *_point_cols(q_real(args.tau, t, args.x1))] for t in ts]
        params = {"slice": "real", "tau": args.tau, "x1": args.x1, "t_min": args.t_min, "t_max": args.t_max, "n": n}
        return ["t", "x1", *POINT_COLUMNS], rows, params

    # orbit
    n = args.n if args.n is not None else 101
    if n < 1:
        raise UsageError("--n must be >= 1")
    v = AlgebraVector(*parse_pair(args.v))
    start = IDENTITY if args.p is None else make_point(*parse_pair(args.p))
    mus = np.linspace(args.mu_min, args.mu_max, n)
    rows = [[mu, *_point_cols(flow_apply(FlowSpec(v, mu), start))] for mu in mus]
    params = {"v": args.v, "p": args.p or "0,1", "mu_min": args.mu_min, "mu_max": args.mu_max, "n": n}
    return ["mu", *POINT_COLUMNS], rows, params


def write_csv(fh, columns, rows) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([fmt(x) for x in r])


def cmd_sample(args) -> int:
    columns, rows, params = sample_rows(args)
    with open_out(args.out) as fh:
        if args.format == "csv":
            write_csv(fh, columns, rows)
        else:
            doc = {"kind": args.kind, "params": params, "columns": columns,
                   "rows": [[float(x) for x in r] for r in rows]}
            fh.write(json.dumps(doc, allow_nan=False))
            fh.write("\n")
    return EXIT_OK


def read_csv(text: str) -> tuple[list[str], np.ndarray]:
    """Parse a file written by ``etaxi sample --format csv``."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    return header, np.array([[float(x) for x in row] for row in reader])


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="etaxi", description="Numerical checks for the eta-xi space-time group V0.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite and write a JSON report")
    v.add_argument("--suite", choices=("all", *SUITES), default="all")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, default=None, help="sample count for every randomized check")
    v.add_argument("--tol", type=float, default=None, help="tolerance applied to every check")
    v.add_argument("--h", type=float, default=1e-6, help="finite-difference step")
    v.add_argument("--mu-probe", type=float, default=0.3)
    v.add_argument("--n-contour", type=int, default=ct.DEFAULT_SAMPLES)
    v.add_argument("--out", default="-", help="output path, '-' for stdout")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("sample", help="export sampled contours, slices or orbits")
    s.add_argument("kind", choices=("contour", "cylinder", "embedding", "orbit"))
    s.add_argument("--F", type=float, default=1.0)
    s.add_argument("--beta", type=float, default=ct.DEFAULT_BETA)
    s.add_argument("--x1", type=float, default=0.0)
    s.add_argument("--n", type=int, default=None)
    s.add_argument("--kind", dest="slice", choices=("imaginary", "real"), default="imaginary",
                   help="embedding slice family")
    s.add_argument("--t", type=float, default=0.0, help="fixed t for the imaginary slice")
    s.add_argument("--tau", type=float, default=0.0, help="fixed angle for the real slice")
    s.add_argument("--t-min", type=float, default=-2.0)
    s.add_argument("--t-max", type=float, default=2.0)
    s.add_argument("--v", default="1,0", help="algebra vector 'a,b' for orbits")
    s.add_argument("--p", default=None, help="orbit start point 'eta,xi' (default identity)")
    s.add_argument("--mu-min", type=float, default=-1.0)
    s.add_argument("--mu-max", type=float, default=1.0)
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.add_argument("--out", default="-")
    s.set_defaults(func=cmd_sample)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, EtaXiError) as exc:
        print(f"etaxi: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
