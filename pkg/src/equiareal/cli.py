"""Command-line front end: ``equiareal <command> [options]``.

Exit codes: 0 success, 1 verification failure, 2 invalid or degenerate input.
"""
import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from equiareal import known
from equiareal.algebra import as_rational, rational_str
from equiareal.elliptic import (
    SingularCurveError,
    SpecializationError,
    curve_from_solution,
    family_curve,
    family_points,
    generator_formulas,
    specialize,
    torsion_classify,
)
from equiareal.heights import (
    NORMALIZATIONS,
    HeightContext,
    RelationSet,
    basis_analysis,
    default_precision,
    gusic_tadic_check,
    regulator,
    relation_signs,
    starred_generators,
)
from equiareal.octic import FAMILIES, DegenerateSolutionError, NotATriangleError, triangle_pair
from equiareal.suites import SUITES, e2_data, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
FORMATS = ("json", "csv", "text")
CSV_COLUMNS = ("t", "family", "A4", "valid_triangle", "regulator", "independent", "notes")
INPUT_ERRORS = (DegenerateSolutionError, NotATriangleError, SpecializationError, SingularCurveError, ValueError, ZeroDivisionError)


class InputError(Exception):
    """Bad or degenerate input; maps to exit code 2."""


@dataclass(frozen=True)
class RunConfig:
    precision: int
    normalization: str
    fmt: str
    out: str = None

    def __post_init__(self):
        if self.precision < 128:
            raise InputError("precision must be at least 128 bits")
        if self.fmt not in FORMATS:
            raise InputError(f"format must be one of {FORMATS}")


def parse_t(text):
    try:
        return as_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"cannot parse t = {text!r} as a rational") from exc


def _curve_and_points(family, t):
    if family == "et":
        return family_curve(t), family_points(t)
    sol = FAMILIES[family](t)
    if sol.degenerate:
        raise DegenerateSolutionError(f"{family} is degenerate at t = {rational_str(t)}")
    return curve_from_solution(sol)


# -- commands --------------------------------------------------------------


def cmd_verify(args, cfg):
    checks = run_suite(args.suite)
    failed = [c for c in checks if not c.passed]
    result = {"suite": args.suite, "checks": [c.to_json() for c in checks], "count": len(checks)}
    if failed:
        result["first_failure"] = failed[0].name
    return result, not failed


def cmd_triangles(args, cfg):
    family = args.family or "sol1"
    if family not in FAMILIES:
        raise InputError("triangles needs --family sol1 or sol2")
    pair = triangle_pair(family, parse_t(args.t))
    return {"family": family, "t": rational_str(parse_t(args.t)), "valid_triangle": True, **pair.to_json()}, True


def cmd_curve(args, cfg):
    family = args.family or "et"
    t = parse_t(args.t)
    curve, pts = _curve_and_points(family, t)
    return {
        "family": family,
        "t": rational_str(t),
        "a4": rational_str(curve.a4),
        "a6": rational_str(curve.a6),
        "points": [p.to_json() for p in pts],
        "torsion": torsion_classify(curve),
    }, True


def cmd_regulator(args, cfg):
    family = args.family or "et"
    t = parse_t(args.t)
    curve, pts = _curve_and_points(family, t)
    ctx = HeightContext(curve, cfg.precision, cfg.normalization)
    report = regulator(ctx, pts)
    return {"family": family, "t": rational_str(t), "model": ctx.describe(), **report.to_json()}, True


def cmd_generators(args, cfg):
    t = parse_t(args.t if args.t is not None else "2")
    g1, g2 = (specialize(g, t) for g in generator_formulas())
    pts = family_points(t)
    p2s, p4s, p5s = starred_generators(pts, g1, g2)
    result = {
        "t": rational_str(t),
        "G1": g1.to_json(),
        "G2": g2.to_json(),
        "basis": {"P1": pts[0].to_json(), "P2*": p2s.to_json(), "P3": pts[2].to_json(), "P4*": p4s.to_json(), "P5*": p5s.to_json()},
    }
    ok = True
    if t == 2:
        _, P, G = e2_data()
        rel = RelationSet.from_rows(known.E2_RELATIONS)
        starred = RelationSet.from_rows(known.E2_STARRED_RELATIONS)
        s1 = relation_signs(rel, G, P)
        q2, q4, q5 = starred_generators(P, G[0], G[1])
        s2 = relation_signs(starred, G, [P[0], q2, P[2], q4, q5])
        result["relations"] = [s == "+" for s in s1]
        result["starred_relations"] = [s == "+" for s in s2]
        result["relation_matrix"] = basis_analysis(rel).to_json()
        result["starred_matrix"] = basis_analysis(starred).to_json()
        result["specialized_G1_sign"] = "+" if g1 == G[0] else ("-" if g1 == -G[0] else None)
        ok = all(result["relations"]) and all(result["starred_relations"]) and basis_analysis(starred).unimodular
    return result, ok


def cmd_gtcheck(args, cfg):
    report = gusic_tadic_check(parse_t(args.t), include_content=not args.primitive_only)
    return report.to_json(), report.passed


def _scan_row(family, t, prec, normalization):
    row = {"t": rational_str(t), "family": family, "A4": "", "valid_triangle": "", "regulator": "", "independent": "", "notes": ""}
    try:
        curve, pts = _curve_and_points(family, t)
        row["A4"] = rational_str(curve.a4)
        if family in FAMILIES:
            try:
                triangle_pair(family, t)
                row["valid_triangle"] = "true"
            except (NotATriangleError, DegenerateSolutionError) as exc:
                row["valid_triangle"] = "false"
                row["notes"] = str(exc)
        report = regulator(HeightContext(curve, prec, normalization), pts)
        row["regulator"] = report.to_json()["regulator"]
        row["independent"] = "true" if report.independent else "false"
    except (SpecializationError, SingularCurveError, DegenerateSolutionError) as exc:
        row["notes"] = f"skipped: {exc}"
    except ArithmeticError as exc:
        row["notes"] = f"error: {exc}"
    return row


def default_grid():
    return [t for ts in known.HIGH_RANK_T.values() for t in ts]


def cmd_scan(args, cfg):
    family = args.family or "et"
    if args.grid is None:
        grid = default_grid()
    else:
        grid = [parse_t(s) for s in args.grid.split(",") if s.strip()]
    jobs = max(1, args.jobs)
    call = [(family, t, cfg.precision, cfg.normalization) for t in grid]
    if jobs > 1 and len(grid) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            rows = list(pool.map(_scan_row, *zip(*call)))
    else:
        rows = [_scan_row(*c) for c in call]
    return {"family": family, "rows": rows}, True


COMMANDS = {
    "verify": cmd_verify,
    "triangles": cmd_triangles,
    "curve": cmd_curve,
    "regulator": cmd_regulator,
    "generators": cmd_generators,
    "gtcheck": cmd_gtcheck,
    "scan": cmd_scan,
}


# -- output ----------------------------------------------------------------


def dump_json(report):
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def _flatten(prefix, value, out):
    if isinstance(value, dict):
        for k in sorted(value):
            _flatten(f"{prefix}.{k}" if prefix else str(k), value[k], out)
    elif isinstance(value, list):
        for i, v in enumerate(value):
            _flatten(f"{prefix}[{i}]", v, out)
    else:
        out.append((prefix, value))


def render(report, fmt):
    if fmt == "json":
        return dump_json(report)
    result = report.get("result", {})
    buf = io.StringIO()
    if fmt == "csv":
        if isinstance(result, dict) and "rows" in result:
            w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
            w.writeheader()
            for row in result["rows"]:
                w.writerow(row)
        else:
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(("key", "value"))
            flat = []
            _flatten("", report, flat)
            w.writerows(flat)
        return buf.getvalue()
    flat = []
    _flatten("", report, flat)
    return "".join(f"{k}: {v}\n" for k, v in flat)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", choices=("sol1", "sol2", "et"))
    common.add_argument("--t", help='rational parameter, "a/b" or "a"')
    common.add_argument("--precision", type=int, default=None, help="working precision in bits (default 192, env EQUIAREAL_PRECISION)")
    common.add_argument("--normalization", choices=NORMALIZATIONS, default="unhalved")
    common.add_argument("--format", choices=FORMATS, default="json", dest="fmt")
    common.add_argument("--out", help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(prog="equiareal", description="Equiareal squared-side triangles and the associated elliptic curves.")
    sub = parser.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", parents=[common], help="run the exact identity suites")
    v.add_argument("suite", nargs="?", choices=(*SUITES, "all"), default="all")
    sub.add_parser("triangles", parents=[common], help="equiareal triangles with square sides")
    sub.add_parser("curve", parents=[common], help="curve coefficients, points and torsion")
    sub.add_parser("regulator", parents=[common], help="canonical heights and regulator of the five points")
    sub.add_parser("generators", parents=[common], help="G1, G2 and the starred basis; relation checks at t = 2")
    g = sub.add_parser("gtcheck", parents=[common], help="Gusic-Tadic square test")
    g.add_argument("--primitive-only", action="store_true", help="only +-1 times products of irreducible factors")
    s = sub.add_parser("scan", parents=[common], help="regulator table over a grid of t")
    s.add_argument("--grid", help="comma-separated rationals (default: the high-rank table)")
    s.add_argument("--jobs", type=int, default=1)
    return parser


def _glue_values(argv):
    """Attach values to --t/--grid so negative rationals like -1/4 are not read as options."""
    out, it = [], iter(argv)
    for arg in it:
        if arg in ("--t", "--grid"):
            value = next(it, None)
            out.append(arg if value is None else f"{arg}={value}")
        else:
            out.append(arg)
    return out


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(_glue_values(sys.argv[1:] if argv is None else list(argv)))
    needs_t = {"triangles", "curve", "regulator", "gtcheck"}
    if args.command in needs_t and args.t is None:
        parser.error(f"{args.command} needs --t")
    start = time.perf_counter()
    try:
        cfg = RunConfig(args.precision or default_precision(), args.normalization, args.fmt, args.out)
        result, ok = COMMANDS[args.command](args, cfg)
        code = EXIT_OK if ok else EXIT_FAIL
        report = {"command": args.command, "passed": ok, "result": result}
    except InputError as exc:
        code, report = EXIT_INPUT, {"command": args.command, "passed": False, "error": str(exc)}
    except INPUT_ERRORS as exc:
        code, report = EXIT_INPUT, {"command": args.command, "passed": False, "error": f"{type(exc).__name__}: {exc}"}
    report["config"] = {
        "precision_bits": args.precision or default_precision(),
        "normalization": args.normalization,
        "format": args.fmt,
        "t": args.t,
        "family": args.family,
    }
    report["timing_seconds"] = round(time.perf_counter() - start, 6)
    text = render(report, args.fmt)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if code == EXIT_INPUT and "error" in report:
        print(report["error"], file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
