"""Command-line front end.

Exit codes: 0 on success or a passing verification, 1 when a verification
fails, 2 on usage errors.  Exact numbers are written as integers or
``num/den`` strings; only predictions carry floats, in scientific notation.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import constants
from .bessel import DEFAULT_PRECISION, predict
from .moments import crank_moments, diff_table, rank_moments
from .verify import (
    DEFAULT_N_LIST,
    VerdictReport,
    combine,
    convergence_report,
    format_float,
    verify_constants,
    verify_exact_identities,
    verify_inequality,
    verify_pde,
)

KINDS = ("crank", "rank", "diff")


class UsageError(Exception):
    pass


def _n_list(text: str) -> list[int]:
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def _precision(text: str) -> int:
    value = int(text)
    if value < 64:
        raise argparse.ArgumentTypeError("precision must be at least 64 bits")
    return value


def _output_flags(p: argparse.ArgumentParser, default_format: str) -> None:
    p.add_argument("--format", choices=("csv", "json"), default=default_format)
    p.add_argument("--out", help="output path (default: standard output)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rankcrank",
        description="Exact rank/crank moments, asymptotic constants and Bessel predictions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("moments", help="exact moment table M_2k, N_2k or D_2k for n <= n-max")
    p.add_argument("--kind", choices=KINDS, default="crank")
    p.add_argument("--k", type=_non_negative, required=True, help="moment order is 2k")
    p.add_argument("--n-max", type=_non_negative, default=500)
    p.add_argument("--route", choices=("recurrence", "bivariate", "oracle"), default=None)
    _output_flags(p, "csv")

    p = sub.add_parser("constants", help="exact asymptotic constants for k <= k-max")
    p.add_argument("--k-max", type=_non_negative, default=10)
    _output_flags(p, "json")

    p = sub.add_parser("predict", help="one- or two-term Bessel predictions")
    p.add_argument("--kind", choices=KINDS + ("partition",), default="crank")
    p.add_argument("--k", type=_non_negative, default=1)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int)
    group.add_argument("--n-list", type=_n_list)
    p.add_argument(
        "--terms", type=int, choices=(1, 2), default=None,
        help="default: 2 for crank/rank, 1 for diff/partition",
    )
    p.add_argument("--precision-bits", type=_precision, default=DEFAULT_PRECISION)
    _output_flags(p, "csv")

    p = sub.add_parser("table", help="exact values beside predictions")
    p.add_argument("--kind", choices=KINDS + ("partition",), default="crank")
    p.add_argument("--k", type=_non_negative, default=1)
    p.add_argument("--n-list", type=_n_list, default=list(DEFAULT_N_LIST))
    p.add_argument("--precision-bits", type=_precision, default=DEFAULT_PRECISION)
    _output_flags(p, "csv")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument(
        "suite", choices=("pde", "inequality", "identities", "constants", "convergence")
    )
    p.add_argument("--kind", choices=KINDS + ("partition",), default="crank")
    p.add_argument("--k", type=_non_negative, default=1)
    p.add_argument("--k-max", type=_non_negative, default=None)
    p.add_argument("--n-max", type=_non_negative, default=None)
    p.add_argument("--n-list", type=_n_list, default=list(DEFAULT_N_LIST))
    p.add_argument("--precision-bits", type=_precision, default=DEFAULT_PRECISION)
    _output_flags(p, "json")
    return parser


def _csv(header: Sequence[str], rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, allow_nan=False, ensure_ascii=False, separators=(",", ":")) + "\n"


def _cmd_moments(args) -> tuple[str, int]:
    if args.kind == "diff":
        if args.k < 1:
            raise UsageError("--kind diff needs --k >= 1")
        if args.route not in (None, "recurrence"):
            raise UsageError("--kind diff always uses the recurrence and bivariate routes")
        table = diff_table(args.k, args.n_max)
    elif args.kind == "crank":
        table = crank_moments(args.k, args.n_max, args.route or "recurrence")
    else:
        if args.route == "recurrence":
            raise UsageError("rank moments have no recurrence route")
        table = rank_moments(args.k, args.n_max, args.route or "bivariate")
    if args.format == "csv":
        return _csv(("n", "moment"), enumerate(table.values)), 0
    payload = {
        "kind": table.kind,
        "k": args.k,
        "order": table.order,
        "provenance": table.provenance,
        "values": list(table.values),
    }
    return _json(payload), 0


_CONSTANT_FIELDS = ("k", "xi", "xi_prime", "xi_tilde", "lambda_tilde", "alpha", "beta_coeff")


def _cmd_constants(args) -> tuple[str, int]:
    rows = []
    for k in range(args.k_max + 1):
        full = constants.constant_set(k).as_strings()
        rows.append({name: full[name] for name in _CONSTANT_FIELDS})
    if args.format == "json":
        return _json(rows), 0
    body = [["" if r[f] is None else r[f] for f in _CONSTANT_FIELDS] for r in rows]
    return _csv(_CONSTANT_FIELDS, body), 0


def _cmd_predict(args) -> tuple[str, int]:
    ns = [args.n] if args.n is not None else args.n_list
    if any(n < 1 for n in ns):
        raise UsageError("n must be at least 1")
    terms = args.terms
    if terms is None:
        terms = 2 if args.kind in ("crank", "rank") else 1
    preds = [predict(args.kind, args.k, n, terms, args.precision_bits) for n in ns]
    rows = [
        (p.n, p.kind, p.k, p.term_count, format_float(p.value, args.precision_bits)) for p in preds
    ]
    if args.format == "csv":
        return _csv(("n", "kind", "k", "terms", "value"), rows), 0
    keys = ("n", "kind", "k", "terms", "value")
    return _json([dict(zip(keys, r)) for r in rows]), 0


_TABLE_FIELDS = ("n", "exact", "pred1", "pred2", "rel_err", "scaled_remainder")


def _cmd_table(args) -> tuple[str, int]:
    report = convergence_report(args.kind, args.k, args.n_list, args.precision_bits)
    rows = report.to_dict()["metrics"]
    if args.format == "csv":
        body = [["" if r[f] is None else r[f] for f in _TABLE_FIELDS] for r in rows]
        return _csv(_TABLE_FIELDS, body), 0
    return _json([{f: r[f] for f in _TABLE_FIELDS} for r in rows]), 0


def _run_suite(args) -> VerdictReport:
    if args.suite == "pde":
        k_max = 5 if args.k_max is None else args.k_max
        n_max = 200 if args.n_max is None else args.n_max
        if k_max < 1:
            raise UsageError("--k-max must be at least 1")
        parts = [verify_pde(k, n_max) for k in range(1, k_max + 1)]
        return combine("pde", parts, {"k_max": k_max, "n_max": n_max})
    if args.suite == "inequality":
        k_max = 5 if args.k_max is None else args.k_max
        if k_max < 1:
            raise UsageError("--k-max must be at least 1")
        return verify_inequality(k_max, 500 if args.n_max is None else args.n_max)
    if args.suite == "identities":
        n_max = 500 if args.n_max is None else args.n_max
        return verify_exact_identities(n_max, odd_order=min(n_max, 300))
    if args.suite == "constants":
        return verify_constants(20 if args.k_max is None else args.k_max)
    return convergence_report(args.kind, args.k, args.n_list, args.precision_bits)


def _cmd_verify(args) -> tuple[str, int]:
    report = _run_suite(args)
    code = 0 if report.passed else 1
    if args.format == "json":
        return _json(report.to_dict()), code
    return _csv(("check_name", "status", "witnesses"), [(report.check_name, report.status, len(report.witnesses))]), code


COMMANDS = {
    "moments": _cmd_moments,
    "constants": _cmd_constants,
    "predict": _cmd_predict,
    "table": _cmd_table,
    "verify": _cmd_verify,
}


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, code = COMMANDS[args.command](args)
    except (UsageError, ValueError) as exc:
        parser.print_usage(sys.stderr)
        print(f"rankcrank: error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
