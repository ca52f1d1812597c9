"""Command-line front end.

Subcommands: ``eval`` (one curve point), ``sample`` (CSV discretization),
``analyze`` (JSON verification report), ``render`` (SVG), ``verify``
(full check suite).  Exit codes: 0 success, 2 argument or domain error,
3 I/O error, 4 verification failure.

All serialization is locale-independent and deterministic: CSV and JSON
numbers carry 12 significant digits, files end lines with LF, and JSON
keys are sorted.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import checks, kernels
from .analysis import find_extrema, region_areas
from .core import InvalidSpec, NonFinite, OutOfUnitInterval, TaijiError, TooFewSamples, clamp_unit
from .curve import chord_at, landmarks, lever_interpolate, s_curve_derivative, s_curve_y
from .core import EndpointSingularity
from .render import DiagramSpec, render_construction, render_diagram

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_VERIFY = 4


def _fmt12g(v: float) -> str:
    return format(v, ".12g")


def _json_dumps(obj, indent: int = 0) -> str:
    """Minimal JSON writer with sorted keys and 12-significant-digit floats."""
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = (
            f'{inner}"{key}": {_json_dumps(obj[key], indent + 1)}' for key in sorted(obj)
        )
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, list):
        if not obj:
            return "[]"
        items = (f"{inner}{_json_dumps(v, indent + 1)}" for v in obj)
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt12g(obj)
    return '"' + str(obj).replace("\\", "\\\\").replace('"', '\\"') + '"'


def cmd_eval(args: argparse.Namespace) -> int:
    x = clamp_unit(args.x)
    chord = chord_at(x)
    lines = [
        f"x={x:.12f}",
        f"y={s_curve_y(x):.12f}",
        f"y_lever={lever_interpolate(x, chord):.12f}",
        f"y1={chord.y1:.12f}",
        f"y2={chord.y2:.12f}",
    ]
    try:
        lines.append(f"derivative={s_curve_derivative(x):.12f}")
    except EndpointSingularity:
        lines.append("derivative=undefined at endpoint")
    print("\n".join(lines))
    return EXIT_OK


def cmd_sample(args: argparse.Namespace) -> int:
    n = args.n
    if n < 2:
        raise TooFewSamples(f"need at least 2 samples, got {n}")
    xs = np.arange(n) / (n - 1)
    ys = kernels.s_curve_values(xs)
    y1, y2 = kernels.chord_values(xs)
    rows = ["x,y,y1,y2"]
    rows.extend(
        f"{_fmt12g(xs[i])},{_fmt12g(ys[i])},{_fmt12g(y1[i])},{_fmt12g(y2[i])}"
        for i in range(n)
    )
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(rows) + "\n")
    return EXIT_OK


def _landmarks_doc() -> dict:
    lm = landmarks()
    return {
        "x_max": lm.x_max,
        "x_min": lm.x_min,
        "y_max": lm.y_max,
        "y_min": lm.y_min,
        "eye_left": {"x": lm.eye_left.x, "y": lm.eye_left.y},
        "eye_right": {"x": lm.eye_right.x, "y": lm.eye_right.y},
    }


def cmd_analyze(args: argparse.Namespace) -> int:
    areas = region_areas()
    extrema = find_extrema()
    identity = checks.identity_checks()
    doc = {
        "landmarks": _landmarks_doc(),
        "areas": {
            "area_below_curve_in_disk": areas.area_below_curve_in_disk,
            "area_above_curve_in_disk": areas.area_above_curve_in_disk,
            "disk_area": areas.disk_area,
            "integral_of_curve_over_unit_interval": areas.integral_of_curve_over_unit_interval,
            "quadrature_error_estimate": areas.quadrature_error_estimate,
        },
        "extrema": {
            "x_at_max": extrema.x_at_max,
            "y_at_max": extrema.y_at_max,
            "x_at_min": extrema.x_at_min,
            "y_at_min": extrema.y_at_min,
            "residual": extrema.residual,
        },
        "identity_checks": [
            {
                "name": c.name,
                "max_abs_residual": c.max_abs_residual,
                "tolerance": c.tolerance,
                "passed": c.passed,
            }
            for c in identity
        ],
    }
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(_json_dumps(doc) + "\n")
    if not all(c.passed for c in identity):
        return EXIT_VERIFY
    return EXIT_OK


def cmd_render(args: argparse.Namespace) -> int:
    spec = DiagramSpec(
        canvas_px=args.size,
        samples=args.samples,
        eye_radius=args.eye_radius,
        dark_below=not args.swap_colors,
        include_square=args.square or args.construction,
        include_line=args.line or args.construction,
    )
    svg = render_construction(spec) if args.construction else render_diagram(spec)
    with open(args.out, "wb") as fh:
        fh.write(svg)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    results = checks.run_checks()
    return report_results(results)


def report_results(results: list[checks.CheckResult]) -> int:
    """Print one PASS/FAIL line per check; exit 4 on any failure."""
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} {r.name:<28} residual={r.max_abs_residual:.3e} tol={r.tolerance:.1e}")
    failed = sum(1 for r in results if not r.passed)
    if failed:
        print(f"{failed} of {len(results)} checks FAILED")
        return EXIT_VERIFY
    print(f"all {len(results)} checks passed")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="taiji",
        description="Compute, verify, and render the yin-yang double-fish figure.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate the curve at one abscissa")
    p_eval.add_argument("--x", type=float, required=True, help="abscissa in [0, 1]")
    p_eval.set_defaults(func=cmd_eval)

    p_sample = sub.add_parser("sample", help="write a CSV discretization of the curve")
    p_sample.add_argument("--n", type=int, required=True, help="number of samples (>= 2)")
    p_sample.add_argument("--out", required=True, help="output CSV path")
    p_sample.set_defaults(func=cmd_sample)

    p_analyze = sub.add_parser("analyze", help="write the JSON verification report")
    p_analyze.add_argument("--out", required=True, help="output JSON path")
    p_analyze.set_defaults(func=cmd_analyze)

    p_render = sub.add_parser("render", help="write the figure as SVG")
    p_render.add_argument("--construction", action="store_true",
                          help="render the line-to-curve construction overlay instead")
    p_render.add_argument("--size", type=int, default=512, help="canvas side in pixels")
    p_render.add_argument("--samples", type=int, default=256, help="curve discretization")
    p_render.add_argument("--eye-radius", type=float, default=1.0 / 24.0,
                          help="fish-eye radius in unit coordinates")
    p_render.add_argument("--swap-colors", action="store_true",
                          help="fill the region above the curve dark instead")
    p_render.add_argument("--square", action="store_true", help="draw the unit square")
    p_render.add_argument("--line", action="store_true", help="overlay the segment x + y = 1")
    p_render.add_argument("--out", required=True, help="output SVG path")
    p_render.set_defaults(func=cmd_render)

    p_verify = sub.add_parser("verify", help="run every invariant check")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OutOfUnitInterval, NonFinite, TooFewSamples, InvalidSpec) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except TaijiError as exc:
        # remaining domain errors (quadrature depth, brackets) count as
        # verification failures
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
