"""Command-line front end: ``wprm <subcommand> ...``.

Exit codes: 0 on success, 1 when an internal cross-check fails, 2 on a usage
or parameter error (one-line diagnostic on stderr).
"""

from __future__ import annotations

import argparse
import json
import sys

from .code import (
    MODES,
    TABLE_COLUMNS,
    build_generator_matrix,
    code_params,
    default_budget,
    export_genmat,
    format_rows,
    table_rows,
)
from .errors import OracleDisagreement, WPRMError
from .ff import field_make
from .gpoly import format_poly, GradedPolynomial, monomial_basis
from .hilbert import a_invariant, hilbert_values, regularity_set, series_numerator
from .ideal import verify_all
from .sweep import CHECKS, run_sweep
from .wps import enumerate_points, space_make


def _weights(args) -> tuple[int, ...]:
    if getattr(args, "weights", None):
        try:
            return tuple(int(w) for w in args.weights.split(","))
        except ValueError:
            raise WPRMError(f"cannot parse weights {args.weights!r}") from None
    return (1, args.a, args.b)


def _emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _nonneg(name: str, value: int) -> None:
    if value < 0:
        raise WPRMError(f"--{name} must be non-negative, got {value}")


def cmd_points(args) -> int:
    F = field_make(args.q)
    pts = enumerate_points(space_make(_weights(args)), F)
    if args.format == "json":
        _emit(args, pts.to_json())
    else:
        _emit(args, "".join(":".join(map(str, p)) + "\n" for p in pts) or "\n")
    return 0


def cmd_basis(args) -> int:
    _nonneg("d", args.d)
    F = field_make(args.q)
    S = space_make(_weights(args))
    basis = monomial_basis(S, args.d)
    if args.format == "json":
        _emit(args, json.dumps([list(m) for m in basis]))
    else:
        _emit(args, "".join(format_poly(GradedPolynomial.monomial(S, F, m)) + "\n" for m in basis) or "\n")
    return 0


def cmd_hilbert(args) -> int:
    _nonneg("d-max", args.d_max)
    field_make(args.q)
    weights = (1, args.a, args.b)
    needs_points = args.mode in ("oracle", "all")
    pts = enumerate_points(space_make(weights), field_make(args.q)) if needs_points else None
    if args.mode == "all":
        routes = ["series", "oracle"] + (["closed"] if args.a == 1 and (args.b >= 2 or args.q <= args.b) else [])
        values = {m: hilbert_values(args.q, args.a, args.b, args.d_max, m, pts) for m in routes}
        ref = values["series"]
        for m, v in values.items():
            if v != ref:
                d = next(i for i, (x, y) in enumerate(zip(v, ref)) if x != y)
                raise OracleDisagreement(f"{m} route gives H({d}) = {v[d]}, series gives {ref[d]}")
    else:
        ref = hilbert_values(args.q, args.a, args.b, args.d_max, args.mode, pts)
    rows = [{"d": d, "H": h} for d, h in enumerate(ref)]
    _emit(args, format_rows(rows, ("d", "H"), args.format))
    return 0


def cmd_series(args) -> int:
    field_make(args.q)
    s = series_numerator(args.q, args.a, args.b)
    doc = {
        "numerator": [[e, c] for e, c in s.numerator],
        "denominator_weights": list(s.denom_weights),
        "a_invariant": a_invariant(args.q, args.a, args.b),
    }
    _emit(args, json.dumps(doc))
    return 0


def cmd_regset(args) -> int:
    field_make(args.q)
    rs = regularity_set(args.q, args.b)
    _emit(args, json.dumps({"first": rs.first, "step": rs.step, "predicate": rs.describe()}))
    return 0


def cmd_params(args) -> int:
    _nonneg("d", args.d)
    field_make(args.q)
    cp = code_params(args.q, args.b, args.d, mode=args.mode, budget=args.budget)
    _emit(args, json.dumps(cp.to_dict()))
    return 0


def cmd_mindist(args) -> int:
    if args.d < 1:
        raise WPRMError(f"--d must be at least 1, got {args.d}")
    field_make(args.q)
    cp = code_params(args.q, args.b, args.d, mode=args.mode, budget=args.budget)
    _emit(args, str(cp.delta))
    return 0


def cmd_genmat(args) -> int:
    _nonneg("d", args.d)
    F = field_make(args.q)
    pts = enumerate_points(space_make((1, 1, args.b)), F)
    G = build_generator_matrix(pts.space, F, args.d, pts)
    _emit(args, export_genmat(G, args.format))
    return 0


def cmd_verify(args) -> int:
    field_make(args.q)
    rep = verify_all(args.q, args.a, args.b, args.d_max)
    _emit(args, rep.to_json())
    return 0 if rep.ok else 1


def cmd_table(args) -> int:
    _nonneg("d-min", args.d_min)
    if args.d_max < args.d_min:
        raise WPRMError(f"--d-max {args.d_max} is below --d-min {args.d_min}")
    field_make(args.q)
    rows = table_rows(args.q, args.b, range(args.d_min, args.d_max + 1), mode=args.mode, budget=args.budget)
    _emit(args, format_rows(rows, TABLE_COLUMNS, args.format))
    return 0


def cmd_sweep(args) -> int:
    checks = args.checks.split(",") if args.checks else None
    for name in checks or ():
        if name not in CHECKS:
            raise WPRMError(f"unknown check {name!r}; choose from {', '.join(CHECKS)}")
    rep = run_sweep(checks)
    doc = {"ok": rep.ok, "summary": rep.summary(), "failures": rep.failures()}
    _emit(args, json.dumps(doc))
    return 0 if rep.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wprm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, *, weights=False, a=False, b=True, d=None, d_max=None, fmt=None, mode=None, budget=False):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        p.add_argument("--output", help="write to this file instead of stdout")
        if name != "sweep":
            p.add_argument("--q", type=int, required=True, help="field size (a prime power)")
        if a:
            p.add_argument("--a", type=int, default=1, help="middle weight (default 1)")
        if b:
            p.add_argument("--b", type=int, required=not weights, default=None if not weights else 1, help="last weight")
        if weights:
            p.add_argument("--weights", help="comma-separated weights, overriding --a/--b")
        if d is not None:
            p.add_argument("--d", type=int, required=True, help="degree")
        if d_max is not None:
            p.add_argument("--d-max", type=int, required=d_max == "required", default=None, help="largest degree")
        if fmt:
            p.add_argument("--format", choices=fmt, default=fmt[0])
        if mode:
            p.add_argument("--mode", choices=mode[0], default=mode[1])
        if budget:
            p.add_argument("--budget", type=int, default=None, help="oracle codeword budget (default $WPRM_BUDGET or 2^24)")
        return p

    add("points", cmd_points, "list canonical rational points", weights=True, a=True, fmt=("text", "json"))
    add("basis", cmd_basis, "list the degree-d monomial basis", weights=True, a=True, d=True, fmt=("text", "json"))
    add("hilbert", cmd_hilbert, "Hilbert function rows (d, H)", a=True, d_max="required",
        fmt=("csv", "json"), mode=(("closed", "series", "oracle", "all"), "all"))
    add("series", cmd_series, "Hilbert series numerator and a-invariant", a=True)
    add("regset", cmd_regset, "regularity set of P(1,1,b)(F_q)")
    add("params", cmd_params, "code parameters [N, K, delta] as JSON", d=True, mode=(MODES, "formula"), budget=True)
    add("mindist", cmd_mindist, "minimum distance", d=True, mode=(MODES, "both"), budget=True)
    add("genmat", cmd_genmat, "generator matrix of C_{d,Y}", d=True, fmt=("plain", "csv", "json"))
    add("verify", cmd_verify, "check the resolution and generators as a JSON report", a=True, d_max="optional")
    p = add("table", cmd_table, "table of code parameters by degree", d_max="required",
            fmt=("csv", "json"), mode=(MODES, "both"), budget=True)
    p.add_argument("--d-min", type=int, default=2)
    p = add("sweep", cmd_sweep, "run the cross-validation grid", b=False)
    p.add_argument("--checks", help=f"comma-separated subset of: {', '.join(CHECKS)}")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "budget", None) is None and hasattr(args, "budget"):
        args.budget = default_budget()
    try:
        return args.func(args)
    except OracleDisagreement as exc:
        print(f"wprm: cross-check failed: {exc}", file=sys.stderr)
        return 1
    except (WPRMError, ValueError, OSError) as exc:
        print(f"wprm: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
