"""Command-line front end.

Subcommands::

    list                      show the identity catalog
    verify                    verify one registered identity or a user identity
    verify-all                verify the whole catalog
    expand                    print the t-coefficients of a DSL expression
    prove-modular             replay the degree-3 / degree-5 equation goals
    check-param               series-level cross-check of a parametrization

Reports go to stdout (one line per report in text mode, one JSON object per
line with ``--json``); diagnostics go to stderr.  Exit codes: 0 all checks
verified/proved, 1 at least one falsified, 2 usage or parse error, 3 internal
precondition violation (including reports with status ``error``).

Text output contains no timestamps or timings, so identical invocations
produce byte-identical stdout; JSON mode carries timing in the clearly marked
``elapsed_ms`` field.  The default order is 200 and may be overridden with
the ``PIQCHECK_ORDER`` environment variable; an explicit ``--order`` wins.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import catalog, modular
from .catalog import MIN_ORDER, VerifyReport
from .dsl import ParseError, parse
from .field import FieldError
from .modular import ModularError, ParamSeriesReport, ProofReport
from .series import SeriesError

EXIT_OK = 0
EXIT_FALSIFIED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

ENV_ORDER = "PIQCHECK_ORDER"


def _default_order() -> int:
    raw = os.environ.get(ENV_ORDER)
    if raw is None:
        return catalog.DEFAULT_ORDER
    try:
        return int(raw)
    except ValueError:
        print(f"warning: ignoring non-integer {ENV_ORDER}={raw!r}", file=sys.stderr)
        return catalog.DEFAULT_ORDER


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="piqcheck",
        description="Exact verification of Pi_q / theta identities and modular-equation goals.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, order: bool = True) -> None:
        if order:
            p.add_argument(
                "--order", type=int, default=None,
                help=f"t-order for series comparisons (default {catalog.DEFAULT_ORDER}, "
                f"env {ENV_ORDER}; minimum {MIN_ORDER})",
            )
        p.add_argument("--json", action="store_true", help="one JSON object per report")
        p.add_argument("--quiet", action="store_true", help="suppress per-report output")

    p = sub.add_parser("list", help="list the identity catalog")
    add_common(p, order=False)

    p = sub.add_parser("verify", help="verify one identity")
    p.add_argument("--id", dest="ident", help="registered identity id, e.g. EQ1-1")
    p.add_argument("--expr", help="user identity of the form 'LHS = RHS'")
    p.add_argument("--expr-file", help="file with one 'LHS = RHS' identity per line")
    add_common(p)

    p = sub.add_parser("verify-all", help="verify the whole catalog")
    add_common(p)

    p = sub.add_parser("expand", help="expand a DSL expression into t-coefficients")
    p.add_argument("--expr", required=True, help="a DSL expression, e.g. 'Pi(q)'")
    add_common(p)

    p = sub.add_parser("prove-modular", help="replay modular-equation goals")
    p.add_argument("--degree", type=int, choices=(3, 5), help="equation family")
    p.add_argument("--theorem", choices=("2.2", "3.2"), help="alias: 2.2 = degree 3, 3.2 = degree 5")
    p.add_argument("--eq", help="single equation id, e.g. 4-2 or 2-5")
    add_common(p, order=False)

    p = sub.add_parser("check-param", help="series-level parametrization check")
    p.add_argument("--degree", type=int, choices=(3, 5), required=True)
    add_common(p)

    return ap


# ----------------------------------------------------------------------
# report rendering


def _frac_str(x: Fraction | None) -> str | None:
    return None if x is None else str(x)


def _verify_json(r: VerifyReport) -> dict:
    failure = None
    if r.first_failure is not None:
        failure = {
            "exponent": r.first_failure.exponent,
            "lhs": _frac_str(r.first_failure.lhs),
            "rhs": _frac_str(r.first_failure.rhs),
        }
    return {
        "id": r.id,
        "status": r.status,
        "order": r.order,
        "valid_order": r.valid_order,
        "first_failure": failure,
        "paper_form_match": None,
        "elapsed_ms": round(r.elapsed * 1000.0, 3),
        "error": r.error,
    }


def _verify_text(r: VerifyReport) -> str:
    if r.status == "verified":
        return f"{r.id} verified order={r.order} valid_order={r.valid_order}"
    if r.status == "falsified":
        f = r.first_failure
        return (
            f"{r.id} falsified at t^{f.exponent}: lhs={f.lhs} rhs={f.rhs} "
            f"diff={f.lhs - f.rhs}"
        )
    return f"{r.id} error: {r.error}"


def _proof_json(r: ProofReport) -> dict:
    return {
        "id": r.eq_id,
        "status": "proved" if r.sides_equal else "falsified",
        "order": None,
        "valid_order": None,
        "first_failure": None,
        "paper_form_match": r.paper_form_match,
        "elapsed_ms": None,
        "degree": r.degree,
        "computed_form": None if r.paper_form_match else r.computed_form,
        "reference_form": None if r.paper_form_match else r.reference_form,
    }


def _proof_text(r: ProofReport) -> str:
    line = f"{r.eq_id} {'proved' if r.sides_equal else 'FAILED'}"
    if r.paper_form_match is not None:
        line += f" paper_form={'match' if r.paper_form_match else 'mismatch'}"
    return line


def _param_json(r: ParamSeriesReport) -> dict:
    failures = [c.first_failure_exponent for c in r.checks if not c.holds]
    return {
        "id": f"param-degree-{r.degree}",
        "status": "verified" if r.verified else "falsified",
        "order": r.order,
        "valid_order": None,
        "first_failure": (
            None if r.verified else {"exponent": min(failures), "lhs": None, "rhs": None}
        ),
        "paper_form_match": None,
        "elapsed_ms": None,
        "checks": [
            {"name": c.name, "holds": c.holds, "first_failure_exponent": c.first_failure_exponent}
            for c in r.checks
        ],
    }


def _param_text(r: ParamSeriesReport) -> str:
    if r.verified:
        return f"degree-{r.degree} parametrization verified order={r.order} checks={len(r.checks)}"
    failing = [c for c in r.checks if not c.holds]
    spots = ", ".join(f"{c.name} at t^{c.first_failure_exponent}" for c in failing)
    return f"degree-{r.degree} parametrization FALSIFIED order={r.order}: {spots}"


def _emit(lines: list[str], quiet: bool) -> None:
    if quiet:
        return
    for line in lines:
        print(line)


# ----------------------------------------------------------------------
# commands


def _resolve_order(args) -> int:
    order = args.order if getattr(args, "order", None) is not None else _default_order()
    if order < MIN_ORDER:
        raise _Usage(f"--order must be at least {MIN_ORDER}")
    return order


class _Usage(Exception):
    pass


def _cmd_list(args) -> int:
    lines = []
    for rec in catalog.list_identities():
        if args.json:
            lines.append(json.dumps({
                "id": rec.id,
                "label": rec.label,
                "sign_variant": rec.sign_variant,
                "lhs": rec.lhs_text,
                "rhs": rec.rhs_text,
            }))
        else:
            lines.append(f"{rec.id}\t{rec.lhs_text} = {rec.rhs_text}")
    _emit(lines, args.quiet)
    return EXIT_OK


def _split_identity(text: str) -> tuple:
    if text.count("=") != 1:
        raise _Usage("a user identity must contain exactly one '=' separating LHS and RHS")
    lhs_text, rhs_text = text.split("=")
    return parse(lhs_text), parse(rhs_text)


def _reports_exit(reports: list[VerifyReport]) -> int:
    if any(r.status == "error" for r in reports):
        return EXIT_INTERNAL
    if any(r.status == "falsified" for r in reports):
        return EXIT_FALSIFIED
    return EXIT_OK


def _cmd_verify(args) -> int:
    order = _resolve_order(args)
    sources = [s for s in (args.ident, args.expr, args.expr_file) if s]
    if len(sources) != 1:
        raise _Usage("verify needs exactly one of --id, --expr, --expr-file")
    reports: list[VerifyReport] = []
    if args.ident:
        try:
            reports.append(catalog.verify(args.ident, order))
        except catalog.UnknownIdentity:
            raise _Usage(
                f"unknown identity {args.ident!r}; see 'piqcheck list'"
            ) from None
    elif args.expr:
        lhs, rhs = _split_identity(args.expr)
        reports.append(catalog.verify_expressions(lhs, rhs, order, ident="user"))
    else:
        with open(args.expr_file, "r", encoding="utf-8") as fh:
            for i, line in enumerate(fh, start=1):
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                lhs, rhs = _split_identity(line)
                reports.append(
                    catalog.verify_expressions(lhs, rhs, order, ident=f"line-{i}")
                )
    lines = [
        json.dumps(_verify_json(r)) if args.json else _verify_text(r) for r in reports
    ]
    _emit(lines, args.quiet)
    return _reports_exit(reports)


def _cmd_verify_all(args) -> int:
    order = _resolve_order(args)
    reports = catalog.verify_all(order)
    lines = [
        json.dumps(_verify_json(r)) if args.json else _verify_text(r) for r in reports
    ]
    _emit(lines, args.quiet)
    return _reports_exit(reports)


def _cmd_expand(args) -> int:
    order = _resolve_order(args)
    series = catalog.evaluate(parse(args.expr), order)
    if args.json:
        payload = {
            "expr": args.expr,
            "valuation": None if series.is_zero else series.valuation,
            "order": series.order,
            "coefficients": [
                {"exponent": series.valuation + i, "value": str(c)}
                for i, c in enumerate(series.coeffs)
                if c != 0
            ],
        }
        _emit([json.dumps(payload)], args.quiet)
    else:
        lines = [
            f"t^{series.valuation + i}: {c}"
            for i, c in enumerate(series.coeffs)
            if c != 0
        ]
        lines.append(
            f"# valuation={'-' if series.is_zero else series.valuation} "
            f"order={series.order} nonzero_terms={len(lines)}"
        )
        _emit(lines, args.quiet)
    return EXIT_OK


def _cmd_prove_modular(args) -> int:
    degree = args.degree
    if args.theorem is not None:
        mapped = 3 if args.theorem == "2.2" else 5
        if degree is not None and degree != mapped:
            raise _Usage("--degree and --theorem disagree")
        degree = mapped
    if degree is None and args.eq is not None:
        if args.eq in modular.DEGREE3_EQUATIONS:
            degree = 3
        elif args.eq in modular.DEGREE5_EQUATIONS:
            degree = 5
        else:
            raise _Usage(f"unknown equation id {args.eq!r}")
    reports: list[ProofReport] = []
    degrees = (degree,) if degree is not None else (3, 5)
    for d in degrees:
        if args.eq is not None:
            prove = modular.prove_degree3 if d == 3 else modular.prove_degree5
            known = modular.DEGREE3_EQUATIONS if d == 3 else modular.DEGREE5_EQUATIONS
            if args.eq not in known:
                raise _Usage(f"equation {args.eq!r} is not a degree-{d} goal")
            reports.append(prove(args.eq))
        else:
            reports.extend(modular.prove_all(d))
    lines = [
        json.dumps(_proof_json(r)) if args.json else _proof_text(r) for r in reports
    ]
    _emit(lines, args.quiet)
    return EXIT_OK if all(r.sides_equal for r in reports) else EXIT_FALSIFIED


def _cmd_check_param(args) -> int:
    order = _resolve_order(args)
    report = modular.check_param_series(args.degree, order)
    line = json.dumps(_param_json(report)) if args.json else _param_text(report)
    _emit([line], args.quiet)
    return EXIT_OK if report.verified else EXIT_FALSIFIED


_COMMANDS = {
    "list": _cmd_list,
    "verify": _cmd_verify,
    "verify-all": _cmd_verify_all,
    "expand": _cmd_expand,
    "prove-modular": _cmd_prove_modular,
    "check-param": _cmd_check_param,
}


def main(argv: list | None = None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        # argparse reports usage errors on stderr and exits 2 already
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except _Usage as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SeriesError, FieldError, ModularError, ValueError) as exc:
        print(f"internal precondition violation: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    raise SystemExit(main())
