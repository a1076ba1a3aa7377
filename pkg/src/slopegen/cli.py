"""``slopegen`` command line: generate, verify, matrix, paper-examples."""
from __future__ import annotations

import argparse
import json
import math
import re
import sys
from pathlib import Path

import numpy as np

from . import audit
from .cases import SlopeCase
from .curves import builtin, registry
from .errors import SlopegenError
from .mesh import FORMATS, FORMS, build_mesh, generate, render
from .rotation import case_rotor, closed_form_matrix, rotation_matrix
from .slope_surfaces import XI_OVERRIDES, SurfaceSpec, evaluate, verify, xi

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_PI_EXPR = re.compile(r"^\s*(?:([-+]?[0-9.]+(?:[eE][-+]?\d+)?)\s*\*?\s*)?pi(?:\s*/\s*([0-9.]+(?:[eE][-+]?\d+)?))?\s*$")


def parse_real(text: str) -> float:
    """A float, or a multiple of pi such as ``pi/4`` or ``0.5*pi``."""
    try:
        return float(text)
    except ValueError:
        pass
    m = _PI_EXPR.match(text)
    if not m:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    factor = float(m.group(1)) if m.group(1) else 1.0
    denom = float(m.group(2)) if m.group(2) else 1.0
    return factor * math.pi / denom


def parse_param(text: str) -> tuple[str, float]:
    key, sep, value = text.partition("=")
    if not sep or not key:
        raise argparse.ArgumentTypeError(f"expected key=value, got {text!r}")
    return key.strip(), parse_real(value)


def _add_surface_flags(p: argparse.ArgumentParser, grid: bool = True) -> None:
    p.add_argument("--case", required=True, choices=[c.value for c in SlopeCase])
    p.add_argument("--theta", required=True, type=parse_real, help="radians; 'pi/4' style accepted")
    p.add_argument("--curve", required=True, choices=registry())
    p.add_argument("--param", action="append", type=parse_param, default=[], metavar="K=V",
                   help="curve parameter, repeatable")
    if grid:
        p.add_argument("--u-min", type=parse_real, default=0.5)
        p.add_argument("--u-max", type=parse_real, default=3.0)
        p.add_argument("--u-steps", type=int, default=40)
        p.add_argument("--v-min", type=parse_real, default=-2.0)
        p.add_argument("--v-max", type=parse_real, default=2.0)
        p.add_argument("--v-steps", type=int, default=40)


def _spec_from(args, xi_override=None) -> SurfaceSpec:
    curve = builtin(args.curve, dict(args.param))
    return SurfaceSpec(
        case=SlopeCase(args.case),
        theta=args.theta,
        curve=curve,
        u_range=(args.u_min, args.u_max),
        v_range=(args.v_min, args.v_max),
        nu=args.u_steps,
        nv=args.v_steps,
        xi_override=xi_override,
    )


def _header(spec: SurfaceSpec, form: str) -> str:
    return (
        f"slopegen {spec.case.value} theta={spec.theta!r} curve={spec.curve.describe()}\n"
        f"form={form} grid={spec.nu}x{spec.nv} u=[{spec.u_range[0]!r}, {spec.u_range[1]!r}] "
        f"v=[{spec.v_range[0]!r}, {spec.v_range[1]!r}]"
    )


def cmd_generate(args) -> int:
    spec = _spec_from(args)
    if args.out is None:
        sys.stdout.write(render(build_mesh(spec, args.form), args.format, _header(spec, args.form)))
    else:
        mesh = generate(spec, args.form, args.format, args.out, _header(spec, args.form))
        print(f"wrote {mesh.nu * mesh.nv} vertices, {len(mesh.faces)} faces to {args.out}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    spec = _spec_from(args, xi_override=args.xi_override)
    report = verify(spec)
    print(json.dumps(report.to_dict(), indent=2))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_matrix(args) -> int:
    if not args.u > 0:
        raise SystemExit(EXIT_USAGE)
    case = SlopeCase(args.case)
    curve = builtin(args.curve, dict(args.param))
    spec = SurfaceSpec(case, args.theta, curve, (args.u, args.u + 1.0), (args.v, args.v + 1.0), 2, 2)
    angle = xi(case, spec.theta, args.u)
    axis = curve.derivative(args.v)
    m = rotation_matrix(case_rotor(case, angle, axis).q)
    if args.json:
        out = {"matrix": m.to_list(), "xi": angle, "u": args.u, "v": args.v}
        if args.compare_closed_form:
            dev = audit.entry_deviation(closed_form_matrix(case, angle, axis), m)
            out["closed_form_deviation"] = dev.ravel().tolist()
        print(json.dumps(out))
        return EXIT_OK
    print(m.format_text())
    if args.compare_closed_form:
        dev = audit.entry_deviation(closed_form_matrix(case, angle, axis), m)
        print("closed-form deviation |printed - sandwich| / (1 + |sandwich|):")
        for row in dev:
            print("  ".join(f"{x: .3e}" for x in row))
        bad = int(np.count_nonzero(dev > audit.CONFIRM_TOL))
        print(f"{9 - bad}/9 entries confirmed at {audit.CONFIRM_TOL:g}")
    return EXIT_OK


def paper_examples(out_dir: str | Path, nu: int = 96, nv: int = 96,
                   u_range=(0.25, 3.0), v_range=(-2.0, 2.0)) -> dict:
    """Meshes, verification reports and the matrix audit for the three worked examples."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    summary = {"examples": {}, "grid": [nu, nv], "u_range": list(u_range), "v_range": list(v_range)}
    all_pass = True
    for key, ex in audit.EXAMPLES.items():
        spec = SurfaceSpec(ex.case, ex.theta, ex.curve, tuple(u_range), tuple(v_range), nu, nv)
        mesh_path = out / f"{key}.obj"
        generate(spec, "direct", "obj", mesh_path, _header(spec, "direct"))
        report = verify(spec)
        report_path = out / f"{key}.report.json"
        report_path.write_text(json.dumps(report.to_dict(), indent=2) + "\n", encoding="utf-8")
        u, v = spec.grid_points()
        closed = audit.surface_deviation(ex, u, v, evaluate(spec, u, v))
        summary["examples"][key] = {
            "label": ex.label,
            "mesh": mesh_path.name,
            "report": report_path.name,
            "pass": report.passed,
            "slope_cosine": report.slope_cosine_mean,
            "printed_surface_deviation": closed,
            "printed_uses_shortcut": ex.approximate,
        }
        all_pass &= report.passed
    mat = audit.matrix_audit()
    (out / "matrix_audit.json").write_text(json.dumps(mat.to_dict(), indent=2) + "\n", encoding="utf-8")
    (out / "matrix_audit.txt").write_text(mat.format_table() + "\n", encoding="utf-8")
    summary["matrix_audit"] = {
        "pass": mat.passed,
        "discrepancies": [f"{e.source} ({e.row},{e.col})" for e in mat.discrepancies],
    }
    summary["pass"] = bool(all_pass and mat.passed)
    (out / "summary.json").write_text(json.dumps(summary, indent=2) + "\n", encoding="utf-8")
    return summary


def cmd_paper_examples(args) -> int:
    summary = paper_examples(args.out, args.u_steps, args.v_steps)
    for key, item in summary["examples"].items():
        print(f"{'PASS' if item['pass'] else 'FAIL'}  {item['label']}  slope={item['slope_cosine']!r}")
    mat = summary["matrix_audit"]
    print(f"{'PASS' if mat['pass'] else 'FAIL'}  matrix audit, {len(mat['discrepancies'])} printed entries disagree")
    for d in mat["discrepancies"]:
        print(f"      {d}")
    return EXIT_OK if summary["pass"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slopegen",
        description="Generate and verify timelike constant slope surfaces in Minkowski 3-space.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a surface mesh")
    _add_surface_flags(p)
    p.add_argument("--form", choices=FORMS, default="direct")
    p.add_argument("--format", choices=FORMATS, default="obj")
    p.add_argument("--out", help="output path (stdout when omitted)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="run the invariant suite and print a JSON report")
    _add_surface_flags(p)
    p.add_argument("--xi-override", choices=sorted(XI_OVERRIDES), help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("matrix", help="print the rotation matrix at one surface point")
    _add_surface_flags(p, grid=False)
    p.add_argument("--u", type=parse_real, required=True)
    p.add_argument("--v", type=parse_real, required=True)
    p.add_argument("--compare-closed-form", action="store_true")
    p.add_argument("--json", action="store_true", help="row-major 9-element array")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("paper-examples", help="reproduce the three worked examples")
    p.add_argument("--out", default="paper-examples")
    p.add_argument("--u-steps", type=int, default=96)
    p.add_argument("--v-steps", type=int, default=96)
    p.set_defaults(func=cmd_paper_examples)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except SlopegenError as exc:
        print(f"slopegen: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        return int(exc.code or 0)
    except OSError as exc:
        print(f"slopegen: error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
