"""Command-line front end.

Subcommands: gen, validate, distance, eccentricity, center-check, witness,
antipode, periodize, quartet, heatmap. Reports go to stdout as structured
text, or JSON with --json; --out redirects the report (or, for the
matrix-producing commands gen/antipode/periodize, the CSV matrix) to a file.

Exit codes: 0 success, 1 domain errors (failed validation, non-center input,
missing witness square), 2 I/O, format, and usage errors.

CSV orientation: file row r is y-index r (bottom-up), file column c is
x-index c. Rectangles are reported both in cell units (x0, w, y0, h) and in
normalized [0,1] coordinates.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from . import __version__
from .core import (
    GridPermuton,
    make_identity,
    make_reverse,
    make_two_diagonal,
    make_uniform,
    from_permutation,
    periodize,
    random_sinkhorn,
    validate,
)
from .chebyshev import center_check, eccentricity
from .errors import FormatError, IoError, PermutonError
from .io import format_csv, parse_permuton_file, write_permuton_csv, write_text
from .metric import _prefix, distance, distance_naive, distance_toric, quartet_differences
from .rects import GridRect
from .witness import antipode, trivial_witness_square, witness_report


def _rect_json(rect: GridRect, n: int) -> dict:
    out = {"x0": rect.x0, "y0": rect.y0, "w": rect.w, "h": rect.h}
    out.update(rect.normalized(n))
    return out


def _emit(report: dict, args) -> None:
    if getattr(args, "json", False):
        text = json.dumps(report, indent=2) + "\n"
    else:
        lines = [f"{k}: {_plain(v)}" for k, v in report.items()]
        text = "\n".join(lines) + "\n"
    out = getattr(args, "out", None)
    if out:
        write_text(text, out)
    else:
        sys.stdout.write(text)


def _plain(v) -> str:
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}={_plain(x)}" for k, x in v.items()) + "}"
    if isinstance(v, float):
        return f"{v:.17g}"
    if isinstance(v, list):
        return "[" + ", ".join(_plain(x) for x in v) + "]"
    return str(v)


def _parse_rect(text: str) -> GridRect:
    try:
        x0, w, y0, h = (int(tok) for tok in text.split(","))
    except ValueError:
        raise FormatError(f"rect must be 'x0,w,y0,h', got {text!r}")
    return GridRect(x0, w, y0, h)


def _write_matrix(mu: GridPermuton, args) -> None:
    if args.out:
        write_permuton_csv(mu, args.out)
    else:
        sys.stdout.write(format_csv(mu))


# --- subcommand handlers -------------------------------------------------

GEN_KINDS = ("uniform", "identity", "reverse", "two-diagonal", "from-perm", "sinkhorn")


def _cmd_gen(args) -> int:
    if args.kind == "from-perm":
        if args.perm is None:
            raise FormatError("--perm is required for --kind from-perm")
        mu = from_permutation(int(tok) for tok in args.perm.split())
    else:
        if args.n is None:
            raise FormatError("--n is required for this kind")
        if args.kind == "uniform":
            mu = make_uniform(args.n)
        elif args.kind == "identity":
            mu = make_identity(args.n)
        elif args.kind == "reverse":
            mu = make_reverse(args.n)
        elif args.kind == "two-diagonal":
            mu = make_two_diagonal(args.n)
        else:
            mu = random_sinkhorn(args.n, seed=args.seed)
    _write_matrix(mu, args)
    return 0


def _cmd_validate(args) -> int:
    t0 = time.perf_counter()
    try:
        mu = parse_permuton_file(args.file)
        report = validate(mu.cells)
    except FormatError as exc:
        # malformed shape/content stays exit 2; marginal failures report as exit 1
        if "not a grid permuton" not in str(exc):
            raise
        _emit({"command": "validate", "file": args.file, "ok": False,
               "violations": [str(exc)]}, args)
        return 1
    _emit(
        {
            "command": "validate",
            "file": args.file,
            "n": mu.n,
            "ok": report.ok,
            "violations": report.violations,
            "timing_ms": (time.perf_counter() - t0) * 1e3,
        },
        args,
    )
    return 0 if report.ok else 1


def _cmd_distance(args) -> int:
    mu = parse_permuton_file(args.mu)
    nu = parse_permuton_file(args.nu)
    algo = {"naive": distance_naive, "band": distance, "toric": distance_toric}[args.algo]
    t0 = time.perf_counter()
    result = algo(mu, nu)
    _emit(
        {
            "command": "distance",
            "mu": args.mu,
            "nu": args.nu,
            "n": mu.n,
            "algo": args.algo,
            "distance": result.value,
            "argmax": _rect_json(result.argmax, mu.n),
            "timing_ms": (time.perf_counter() - t0) * 1e3,
        },
        args,
    )
    return 0


def _cmd_eccentricity(args) -> int:
    mu = parse_permuton_file(args.mu)
    t0 = time.perf_counter()
    result = eccentricity(mu)
    if args.attaining_out:
        write_permuton_csv(result.attaining, args.attaining_out)
    _emit(
        {
            "command": "eccentricity",
            "mu": args.mu,
            "n": mu.n,
            "eccentricity": result.value,
            "argmax": _rect_json(result.argmax_rect, mu.n),
            "side": result.side,
            "attaining_out": args.attaining_out or "",
            "timing_ms": (time.perf_counter() - t0) * 1e3,
        },
        args,
    )
    return 0


def _cmd_center_check(args) -> int:
    mu = parse_permuton_file(args.mu)
    t0 = time.perf_counter()
    verdict = center_check(mu)
    report = {
        "command": "center-check",
        "mu": args.mu,
        "n": mu.n,
        "is_center": verdict.is_center,
        "half_periodic": verdict.half_periodic,
        "eccentricity": verdict.eccentricity,
    }
    if verdict.violation is not None:
        rect, adversary_mu = verdict.violation
        report["violating_rect"] = _rect_json(rect, mu.n)
        if args.adversary_out:
            write_permuton_csv(adversary_mu, args.adversary_out)
            report["adversary_out"] = args.adversary_out
    report["timing_ms"] = (time.perf_counter() - t0) * 1e3
    _emit(report, args)
    return 0 if verdict.is_center else 1


def _cmd_witness(args) -> int:
    mu = parse_permuton_file(args.mu)
    nu = parse_permuton_file(args.nu)
    t0 = time.perf_counter()
    report = witness_report(mu, nu)
    _emit(
        {
            "command": "witness",
            "mu": args.mu,
            "nu": args.nu,
            "n": mu.n,
            "is_extremal": report.is_extremal,
            "witness_rect": _rect_json(report.witness_rect, mu.n)
            if report.witness_rect
            else None,
            "trivial": report.trivial,
            "timing_ms": (time.perf_counter() - t0) * 1e3,
        },
        args,
    )
    return 0


def _cmd_antipode(args) -> int:
    nu = parse_permuton_file(args.nu)
    if args.square:
        square = _parse_rect(args.square)
    else:
        square = trivial_witness_square(nu)
        if square is None:
            raise PermutonError(f"{args.nu}: no half-square with mass 1/2 found")
    _write_matrix(antipode(nu, square), args)
    return 0


def _cmd_periodize(args) -> int:
    mu = parse_permuton_file(args.mu)
    _write_matrix(periodize(mu), args)
    return 0


def _cmd_quartet(args) -> int:
    mu = parse_permuton_file(args.mu)
    nu = parse_permuton_file(args.nu)
    rect = _parse_rect(args.rect)
    t0 = time.perf_counter()
    diffs = quartet_differences(mu, nu, rect)
    _emit(
        {
            "command": "quartet",
            "mu": args.mu,
            "nu": args.nu,
            "rect": _rect_json(rect, mu.n),
            "differences": {f"R{i}{j}": v for (i, j), v in sorted(diffs.items())},
            "timing_ms": (time.perf_counter() - t0) * 1e3,
        },
        args,
    )
    return 0


def _band_maxima(mu: GridPermuton, nu: GridPermuton) -> np.ndarray:
    """out[y0, h-1] = max over standard x-intervals of |(mu-nu)(R)| in that band."""
    n = mu.n
    p = _prefix(mu.cells - nu.cells)
    out = np.zeros((n, n))
    for y0 in range(n):
        for h in range(1, n - y0 + 1):
            strip = p[:, y0 + h] - p[:, y0]
            out[y0, h - 1] = strip.max() - strip.min()
    return out


def _matrix_csv(matrix: np.ndarray) -> str:
    return "\n".join(",".join(f"{v:.17g}" for v in row) for row in matrix) + "\n"


def _cmd_heatmap(args) -> int:
    mu = parse_permuton_file(args.mu)
    density = _matrix_csv(mu.cells.T)  # same orientation as permuton CSV files
    if args.out:
        write_text(density, args.out + "_density.csv")
    else:
        sys.stdout.write(density)
    if args.nu:
        nu = parse_permuton_file(args.nu)
        band = _matrix_csv(_band_maxima(mu, nu))
        if args.out:
            write_text(band, args.out + "_bandmax.csv")
        else:
            sys.stdout.write(band)
    return 0


# --- argument parsing -----------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rectperm",
        description="Grid permutons, the rectangular distance, and Chebyshev diagnostics. "
        "CSV files: row r = y-index r (bottom-up), column c = x-index c.",
    )
    parser.add_argument("--version", action="version", version=f"rectperm {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, out_help="write the report to this file"):
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.add_argument("--out", help=out_help)
        p.add_argument("--threads", type=int, default=1,
                       help="worker threads for the scan kernels (output-invariant)")

    p = sub.add_parser("gen", help="generate a permuton CSV")
    p.add_argument("--kind", choices=GEN_KINDS, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--perm", help="space-separated 0-based indices (from-perm)")
    p.add_argument("--seed", type=int, default=0, help="RNG seed (sinkhorn)")
    p.add_argument("--out", help="write the CSV matrix to this file")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("validate", help="check the permuton invariants of a file")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("distance", help="rectangular distance between two permutons")
    p.add_argument("mu")
    p.add_argument("nu")
    p.add_argument("--algo", choices=("naive", "band", "toric"), default="band")
    common(p)
    p.set_defaults(func=_cmd_distance)

    p = sub.add_parser("eccentricity", help="worst-case distance over all permutons")
    p.add_argument("mu")
    p.add_argument("--attaining-out", help="write the attaining permuton CSV here")
    common(p)
    p.set_defaults(func=_cmd_eccentricity)

    p = sub.add_parser("center-check", help="Chebyshev-center verdict (exit 1 if not a center)")
    p.add_argument("mu")
    p.add_argument("--adversary-out", help="write the adversary permuton CSV here")
    common(p)
    p.set_defaults(func=_cmd_center_check)

    p = sub.add_parser("witness", help="extremal-witness report for a center mu and a nu")
    p.add_argument("mu")
    p.add_argument("nu")
    common(p)
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("antipode", help="permuton at distance 1/2 from a trivially-witnessed nu")
    p.add_argument("nu")
    p.add_argument("--square", help="witness square as 'x0,w,y0,h' (default: search)")
    p.add_argument("--out", help="write the CSV matrix to this file")
    p.set_defaults(func=_cmd_antipode)

    p = sub.add_parser("periodize", help="average the four half-shifts")
    p.add_argument("mu")
    p.add_argument("--out", help="write the CSV matrix to this file")
    p.set_defaults(func=_cmd_periodize)

    p = sub.add_parser("quartet", help="the four signed quartet differences at a rect")
    p.add_argument("mu")
    p.add_argument("nu")
    p.add_argument("--rect", required=True, help="'x0,w,y0,h'")
    common(p)
    p.set_defaults(func=_cmd_quartet)

    p = sub.add_parser("heatmap", help="cell densities (and band maxima vs nu) as CSV")
    p.add_argument("mu")
    p.add_argument("nu", nargs="?")
    p.add_argument("--out", help="output prefix: writes <out>_density.csv and <out>_bandmax.csv")
    p.set_defaults(func=_cmd_heatmap)

    return parser


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except (IoError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PermutonError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
