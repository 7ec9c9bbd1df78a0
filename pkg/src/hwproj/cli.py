"""Command-line entry point: ``hwproj {project,sweep-precision,sweep-scaling,verify}``."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import core, experiments
from .fixed import FixedPointFormat, quantize
from .hw import HwProjectionConfig, hw_project_pp, hw_project_simplex


def _parse_dims(text: str) -> list[int]:
    dims: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if "-" in part:
            lo, hi = part.split("-")
            dims.extend(range(int(lo), int(hi) + 1))
        elif part:
            dims.append(int(part))
    return dims


def _read_vectors(args) -> np.ndarray:
    if args.file:
        text = Path(args.file).read_text() if args.file != "-" else sys.stdin.read()
        rows = [list(map(float, ln.split())) for ln in text.splitlines() if ln.strip()]
        if len({len(r) for r in rows}) > 1:
            raise SystemExit("all vectors in the input file must have the same length")
        return np.array(rows, dtype=float)
    if not args.values:
        raise SystemExit("give vector components as arguments or --file")
    return np.array([args.values], dtype=float)


def _emit(text: str, out: str | None) -> None:
    if out and out != "-":
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_project(args) -> int:
    x = _read_vectors(args)
    if args.format:
        f_in = FixedPointFormat.parse(args.format)
        f_out = FixedPointFormat.parse(args.output_format) if args.output_format else f_in
        cfg = HwProjectionConfig(x.shape[1], f_in, f_out, args.guard_bits)
        q = quantize(x, f_in, args.quantize_mode)
        if args.target == "pp":
            y = hw_project_pp(q, cfg).value
        elif args.target == "simplex":
            y = hw_project_simplex(q, cfg).value
        else:
            raise SystemExit(f"--format supports targets pp and simplex, not {args.target}")
    else:
        y = {
            "pp": core.project_parity_polytope,
            "simplex": core.project_simplex,
            "cube": core.project_unit_cube,
            "l1": lambda v: core.project_l1_ball(v, args.radius),
        }[args.target](x)
    for row in np.atleast_2d(y):
        print(" ".join(f"{c:.{args.digits}g}" for c in row))
    return 0


def cmd_sweep_precision(args) -> int:
    widths = _parse_dims(args.widths) if args.widths else None
    formats = experiments.parse_formats(args.formats, widths)
    if args.dist == "cube":
        x = experiments.gen_uniform_cube(args.dim, args.trials, args.seed)
    else:
        x = experiments.gen_gaussian(args.dim, args.trials, args.seed, args.variance)
    records = experiments.precision_sweep(
        args.target, args.dim, x, formats, args.quantize_mode, args.output_integer_bits, args.guard_bits
    )
    meta = {"target": args.target, "dim": args.dim, "dist": args.dist, "trials": args.trials,
            "seed": args.seed, "quantize": args.quantize_mode}
    if args.dist == "gaussian":
        meta["variance"] = args.variance
    if args.guard_bits is not None:
        meta["guard_bits"] = args.guard_bits
    _emit(experiments.precision_csv(records, meta), args.out)
    return 0


def cmd_sweep_scaling(args) -> int:
    reports = experiments.scaling_sweep(_parse_dims(args.dims), args.mode)
    _emit(experiments.scaling_csv(reports), args.out)
    return 0


def cmd_verify(args) -> int:
    from . import verify

    ok = verify.run_all(trials=args.trials, seed=args.seed, echo=print)
    print("ALL PASS" if ok else "FAILURES")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hwproj", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    pr = sub.add_parser("project", help="project one or more vectors")
    pr.add_argument("values", nargs="*", type=float)
    pr.add_argument("--file", help="whitespace-separated vectors, one per line ('-' for stdin)")
    pr.add_argument("--target", choices=["pp", "simplex", "cube", "l1"], default="pp")
    pr.add_argument("--radius", type=float, default=1.0, help="l1-ball radius")
    pr.add_argument("--format", help="run the fixed-point circuit with this input format, e.g. s1.6")
    pr.add_argument("--output-format", help="fixed-point output format (default: input format)")
    pr.add_argument("--guard-bits", type=int, default=None, help="reciprocal guard bits")
    pr.add_argument("--quantize-mode", choices=["round_nearest_even", "truncate"], default="round_nearest_even")
    pr.add_argument("--digits", type=int, default=10)
    pr.set_defaults(func=cmd_project)

    sp = sub.add_parser("sweep-precision", help="fixed-point error vs width (CSV)")
    sp.add_argument("--target", choices=["pp", "simplex"], default="pp")
    sp.add_argument("--dim", type=int, default=3)
    sp.add_argument("--trials", type=int, default=10_000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--formats", default="s0.*",
                    help="comma list of formats, or families like 's2.*' (all widths up to 16)")
    sp.add_argument("--widths", help="restrict families to these widths, e.g. 4-12")
    sp.add_argument("--dist", choices=["cube", "gaussian"], default="cube")
    sp.add_argument("--variance", type=float, default=16.0)
    sp.add_argument("--output-integer-bits", type=int, default=None)
    sp.add_argument("--guard-bits", type=int, default=None)
    sp.add_argument("--quantize-mode", choices=["round_nearest_even", "truncate"], default="round_nearest_even")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_sweep_precision)

    ss = sub.add_parser("sweep-scaling", help="area/delay proxies vs dimension (CSV)")
    ss.add_argument("--dims", default="2-64", help="e.g. 2-64 or 8,16,32")
    ss.add_argument("--mode", choices=["pp", "simplex", "sort", "all"], default="all")
    ss.add_argument("--out")
    ss.set_defaults(func=cmd_sweep_scaling)

    vf = sub.add_parser("verify", help="oracle agreement and zero-one sorting checks")
    vf.add_argument("--trials", type=int, default=2000)
    vf.add_argument("--seed", type=int, default=0)
    vf.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
