"""Batch command-line front end.

Subcommands: coeffs, moments, weights, cfrac, szego, verify.  Rationals
cross this boundary as "num/den" strings, never floats, so exact values
survive formatting; JSON output is canonical (sorted keys) and CSV uses a
header row, making runs byte-stable for identical configurations.  Exit
status: 0 on success (and all checks passing), 1 when a verification
fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

from .exactnum import format_rational, parse_rational
from .lbp import (
    FamilySpec,
    associated_family,
    exact_moments,
    hermite_family,
    stieltjes_carlitz_family,
)
from .suite import run_suite, suite_names
from .szego import WeightKind, reflection_params, symmetric_S, weight
from .verify import tfraction_convergent
from .elliptic import complete_triple


def _parse_family(text: str) -> FamilySpec:
    if text == "hermite":
        return hermite_family()
    if text.startswith("associated:"):
        return associated_family(int(text.split(":", 1)[1]))
    if text.startswith("stieltjes-carlitz:"):
        return stieltjes_carlitz_family(parse_rational(text.split(":", 1)[1]))
    raise argparse.ArgumentTypeError(
        f"unknown family {text!r}; use hermite, associated:J or stieltjes-carlitz:P2"
    )


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _cmd_coeffs(args) -> int:
    family = args.family
    rows = family.coefficient_rows(args.n_max)
    if args.format == "csv":
        text = _csv_text(
            ["n", "b_n", "d_n"],
            [[n, format_rational(b), format_rational(d)] for n, b, d in rows],
        )
    else:
        text = _json_dumps(
            {
                "family": family.kind,
                "n_max": args.n_max,
                "b": {str(n): format_rational(b) for n, b, _ in rows},
                "d": {
                    str(n): format_rational(family.d(n)) for n in range(args.n_max + 1)
                },
            }
        )
    _emit(text, args.output)
    return 0


def _cmd_moments(args) -> int:
    table = exact_moments(args.family, args.n_max)
    if args.format == "csv":
        text = _csv_text(
            ["s", "c_s"], [[s, format_rational(c)] for s, c in table.rows()]
        )
    else:
        text = _json_dumps({"c": table.to_json()})
    _emit(text, args.output)
    return 0


def _cmd_weights(args) -> int:
    kind = WeightKind(args.kind)
    n = args.grid_points
    circle = kind in (WeightKind.CIRCLE_RHO, WeightKind.CIRCLE_RHO_TILDE)
    if circle:
        points = [2.0 * math.pi * (i + 0.5) / n for i in range(n)]
    else:
        points = [-2.0 + 4.0 * (i + 0.5) / n for i in range(n)]
    values = [weight(kind, p) for p in points]
    label = "theta" if circle else "x"
    if kind is WeightKind.CIRCLE_RHO:
        header = [label, "re", "im"]
        rows = [[repr(p), repr(v.real), repr(v.imag)] for p, v in zip(points, values)]
    else:
        header = [label, "value"]
        rows = [[repr(p), repr(v)] for p, v in zip(points, values)]
    if args.format == "json":
        text = _json_dumps(
            {"kind": kind.value, "points": [dict(zip(header, r)) for r in rows]}
        )
    else:
        text = _csv_text(header, rows)
    _emit(text, args.output)
    return 0


def _cmd_cfrac(args) -> int:
    z_text = args.z
    exact = "/" in z_text or z_text.lstrip("+-").isdigit()
    z: Fraction | float = parse_rational(z_text) if exact else float(z_text)
    value = tfraction_convergent(args.n, z)
    payload: dict = {"n": args.n, "z": z_text}
    payload["convergent"] = format_rational(value) if exact else repr(value)
    zf = float(z)
    if 0.0 < zf < 1.0:
        t = complete_triple(math.sqrt(zf))
        payload["reference_J_over_K"] = repr(t.J / t.K)
        payload["abs_err"] = repr(abs(float(value) - t.J / t.K))
    _emit(_json_dumps(payload), args.output)
    return 0


def _cmd_szego(args) -> int:
    refl = reflection_params(args.j, args.n_max)
    fam = hermite_family() if args.j == 0 else associated_family(args.j)
    sym = symmetric_S(fam, args.n_max)
    if args.format == "csv":
        rows = [
            [n, format_rational(refl[n]), format_rational(sym.u[n + 1])]
            for n in range(args.n_max)
        ]
        text = _csv_text(["n", "a_n", "u_{n+1}"], rows)
    else:
        text = _json_dumps(
            {
                "j": args.j,
                "n_max": args.n_max,
                "a": [format_rational(a) for a in refl.a],
                "u": [format_rational(sym.u[n]) for n in range(1, args.n_max + 1)],
            }
        )
    _emit(text, args.output)
    return 0


def _cmd_verify(args) -> int:
    names = [s.strip() for s in args.suite.split(",")] if args.suite else ["all"]
    try:
        results = run_suite(names, quad_nodes=args.quad_nodes, tol=args.tol)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return 2
    all_pass = all(r.passed for r in results)
    if args.format == "json":
        text = _json_dumps(
            {
                "suites": [r.to_json() for r in results],
                "pass": all_pass,
                "tol": args.tol,
                "quad_nodes": args.quad_nodes,
            }
        )
    else:
        lines = []
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            detail = f"  [{r.detail}]" if r.detail else ""
            lines.append(f"{status}  {r.suite}: {r.name}{detail}")
        lines.append(f"{'PASS' if all_pass else 'FAIL'}  overall")
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return 0 if all_pass else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ellbp",
        description="Elliptic Laurent biorthogonal polynomials: tables, weights, "
        "continued fractions and the verification suite.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, family=False):
        p.add_argument("--n-max", type=int, default=20)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--output", help="write to this path instead of stdout")
        if family:
            p.add_argument(
                "--family",
                type=_parse_family,
                default="hermite",
                help="hermite | associated:J | stieltjes-carlitz:P2 (P2 as num/den)",
            )

    p = sub.add_parser("coeffs", help="recurrence coefficient table (n, b_n, d_n)")
    add_common(p, family=True)
    p.set_defaults(func=_cmd_coeffs)

    p = sub.add_parser("moments", help="two-sided exact moment table c_s")
    add_common(p, family=True)
    p.set_defaults(func=_cmd_moments)

    p = sub.add_parser("weights", help="sample a weight function on a uniform grid")
    p.add_argument(
        "--kind",
        choices=[k.value for k in WeightKind],
        default=WeightKind.INTERVAL_W.value,
    )
    p.add_argument("--grid-points", type=int, default=256)
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    p.add_argument("--output")
    p.set_defaults(func=_cmd_weights)

    p = sub.add_parser("cfrac", help="T-fraction convergent; exact at rational z")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--z", required=True, help='rational "num/den" or float literal')
    p.add_argument("--output")
    p.set_defaults(func=_cmd_cfrac)

    p = sub.add_parser("szego", help="reflection parameters and interval u_n")
    p.add_argument("--j", type=int, default=0)
    add_common(p)
    p.set_defaults(func=_cmd_szego)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument(
        "--suite",
        default="all",
        help=f"comma-separated: all or any of {', '.join(suite_names())}",
    )
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--quad-nodes", type=int, default=1024)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--output")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if isinstance(getattr(args, "family", None), str):
        args.family = _parse_family(args.family)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
