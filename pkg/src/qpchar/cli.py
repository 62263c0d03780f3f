"""Command-line front end.

Usage:
    qpchar char verma --order 10
    qpchar char standard --k0 2 --k1 1 --method all --format json
    qpchar list --verma --max-exponent 3
    qpchar verify grr --l 2 --s 1 --r 2 --order 100
    qpchar verify all --order 40 --format json

Exit codes: 0 success / all checks match, 1 a verification mismatch,
2 a usage error.  Tables go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from typing import Callable, Sequence

from . import characters as ch
from .cache import SeriesCache, resolve_cache_dir
from .combinat import VERMA, HighestWeight, ModuleSpec, basis_enumerate, qp_enumerate_counts
from .qseries import TruncatedSeries
from .verify import (
    SuiteConfig,
    VerificationReport,
    andrews_section8_check,
    complement_check,
    compare,
    module_reports,
    oracle_report,
    run_suite,
)

__all__ = ["main", "build_parser"]

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2
DEFAULT_ORDER = 60
DEFAULT_LIST_LIMIT = 24
ORACLE_ORDER = 25
METHODS = ("product", "sum", "enumerate")

log = logging.getLogger("qpchar")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits 2 as well; keep the prefix uniform
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"qpchar: error: {message}\n")


def _common(parser: argparse.ArgumentParser, order: int | None = DEFAULT_ORDER) -> None:
    if order is not None:
        parser.add_argument("--order", type=int, default=order, help=f"truncation order (default {order})")
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    parser.add_argument("--cache-dir", default=None, help="series cache directory (env QPCHAR_CACHE)")
    parser.add_argument("--oracle", action="store_true", help="force brute-force cross-checks")
    parser.add_argument("--timings", action="store_true", help="include wall-clock timings in reports")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qpchar", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_char = sub.add_parser("char", help="principally specialized characters")
    p_char.add_argument("target", choices=("verma", "standard"))
    p_char.add_argument("--k0", type=int)
    p_char.add_argument("--k1", type=int)
    p_char.add_argument("--method", choices=METHODS + ("all",), default="product")
    _common(p_char)

    p_list = sub.add_parser("list", help="list basis monomials")
    p_list.add_argument("--verma", action="store_true")
    p_list.add_argument("--k0", type=int)
    p_list.add_argument("--k1", type=int)
    p_list.add_argument("--max-exponent", type=int, required=True)
    p_list.add_argument("--limit", type=int, default=DEFAULT_LIST_LIMIT,
                        help=f"largest accepted --max-exponent (default {DEFAULT_LIST_LIMIT})")
    _common(p_list, order=None)

    p_ver = sub.add_parser("verify", help="run identity checks")
    p_ver.add_argument("selector", choices=("grr", "module", "complement", "section8", "liealg", "all"))
    p_ver.add_argument("--l", type=int)
    p_ver.add_argument("--s", type=int)
    p_ver.add_argument("--r", type=int)
    p_ver.add_argument("--k0", type=int)
    p_ver.add_argument("--k1", type=int)
    p_ver.add_argument("--max-level", type=int, default=7)
    p_ver.add_argument("--window", type=int, default=8)
    _common(p_ver)
    return parser


def _weight(args: argparse.Namespace) -> HighestWeight:
    if args.k0 is None or args.k1 is None:
        raise UsageError("both --k0 and --k1 are required")
    try:
        w = HighestWeight(args.k0, args.k1)
        w.require_standard()
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return w


def _check_order(order: int) -> None:
    if order < 0:
        raise UsageError(f"--order must be nonnegative, got {order}")


def _emit(text: str) -> None:
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


# --- char -----------------------------------------------------------------

def _routes(spec: ModuleSpec, N: int) -> dict[str, tuple[str, Callable[[], TruncatedSeries]]]:
    if isinstance(spec, HighestWeight):
        params = f"k0={spec.k0},k1={spec.k1}"
        return {
            "product": (params, lambda: ch.standard_char_product(spec, N)),
            "sum": (params, lambda: ch.standard_char_sum(spec, N)),
            "enumerate": (params, lambda: ch.standard_char_enumerated(spec, N)),
        }
    return {
        "product": ("", lambda: ch.verma_char(N)),
        "sum": ("", lambda: ch.verma_char_sum(N)),
        "enumerate": ("", lambda: ch.verma_char_enumerated(N)),
    }


def cmd_char(args: argparse.Namespace, cache: SeriesCache | None) -> int:
    _check_order(args.order)
    N = args.order
    spec: ModuleSpec = VERMA if args.target == "verma" else _weight(args)
    methods = METHODS if args.method == "all" else (args.method,)
    routes = _routes(spec, N)
    target = "verma" if spec is VERMA else f"standard {spec}"

    series: dict[str, TruncatedSeries] = {}
    for m in methods:
        params, compute = routes[m]
        op = f"{'verma' if spec is VERMA else 'standard'}_{m}"
        series[m] = cache.get_or_compute(op, params, N, compute) if cache else compute()

    reports: list[VerificationReport] = []
    if len(methods) > 1:
        first = series[methods[0]]
        reports += [compare(first, series[m], f"{target} {methods[0]}={m}") for m in methods[1:]]
    if args.oracle:
        D = min(N, ORACLE_ORDER)
        brute = ch.verma_char_enumerated(D, brute=True) if spec is VERMA else ch.standard_char_enumerated(spec, D, brute=True)
        for m, s in series.items():
            reports.append(compare(s.truncate(D), brute, f"{target} {m}=brute-force"))
    agree = all(r.ok for r in reports)

    if args.format == "json":
        out = {
            "target": target,
            "order": N,
            "series": {m: s.to_dict() for m, s in series.items()},
        }
        if reports:
            out["agree"] = agree
            out["reports"] = [r.to_dict(args.timings) for r in reports]
        _emit(_dump_json(out))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "coefficient"] if len(methods) == 1 else ["n", *methods])
        for n in range(N + 1):
            writer.writerow([n, *(str(series[m][n]) for m in methods)])
        _emit(buf.getvalue())
    else:
        lines = [f"{m}: {s.to_text()}" for m, s in series.items()]
        lines += [r.to_text(args.timings) for r in reports]
        if len(methods) > 1:
            lines.append(f"agreement: {'match' if agree else 'MISMATCH'}")
        _emit("\n".join(lines))
    return EXIT_OK if agree else EXIT_MISMATCH


# --- list -----------------------------------------------------------------

def cmd_list(args: argparse.Namespace, cache: SeriesCache | None) -> int:
    D = args.max_exponent
    if D < 0:
        raise UsageError(f"--max-exponent must be nonnegative, got {D}")
    if D > args.limit:
        raise UsageError(
            f"--max-exponent {D} exceeds the safety limit {args.limit}; the listing grows "
            f"roughly like the character coefficients. Pass --limit {D} to proceed, or use "
            f"`qpchar char` for counts only."
        )
    if args.verma and (args.k0 is not None or args.k1 is not None):
        raise UsageError("--verma cannot be combined with --k0/--k1")
    spec: ModuleSpec = VERMA if args.verma else _weight(args)
    monomials = basis_enumerate(spec, D)
    counts = [0] * (D + 1)
    for m in monomials:
        counts[m.exponent] += 1

    status = EXIT_OK
    oracle_line = None
    if args.oracle:
        expected = ch.verma_char(D) if spec is VERMA else ch.standard_char_product(spec, D)
        report = compare(TruncatedSeries(D, tuple(counts)), expected, "listing counts=product")
        oracle_line = report.to_text()
        if not report.ok:
            status = EXIT_MISMATCH

    module = "verma" if spec is VERMA else f"standard {spec}"
    if args.format == "json":
        out = {
            "module": module,
            "max_exponent": D,
            "monomials": [{"exponent": m.exponent, "text": str(m), **m.to_dict()} for m in monomials],
            "counts": counts,
        }
        _emit(_dump_json(out))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["exponent", "monomial"])
        for m in monomials:
            writer.writerow([m.exponent, str(m)])
        _emit(buf.getvalue())
    else:
        lines = [f"{m.exponent}\t{m}" for m in monomials]
        lines.append("counts: " + " ".join(str(c) for c in counts))
        if oracle_line:
            lines.append(oracle_line)
        _emit("\n".join(lines))
    return status


# --- verify ---------------------------------------------------------------

def _grr_params(args: argparse.Namespace) -> list[ch.GRRParams]:
    ls = [args.l] if args.l is not None else list(range(2, 6))
    ss = [args.s] if args.s is not None else [0, 1]
    out = []
    for l in ls:
        for s in ss:
            rs = [args.r] if args.r is not None else list(range(1, l))
            for r in rs:
                try:
                    out.append(ch.GRRParams(l, s, r))
                except ValueError as exc:
                    raise UsageError(str(exc)) from exc
    return out


def _weights_up_to(max_level: int) -> list[HighestWeight]:
    return [HighestWeight(k0, k - k0) for k in range(1, max_level + 1) for k0 in range(k, -1, -1)]


def _verify_reports(args: argparse.Namespace) -> list[VerificationReport]:
    N = args.order
    sel = args.selector
    if sel == "all":
        return run_suite(SuiteConfig(order=N, liealg_window=args.window,
                                     oracle_order=min(N, ORACLE_ORDER)))
    if sel == "grr":
        return run_suite(SuiteConfig(order=N, grr=tuple(_grr_params(args)), modules=(),
                                     verma=False, complements=(), section8=(),
                                     liealg_window=None, oracle_order=None))
    if sel == "module":
        if args.k0 is not None or args.k1 is not None:
            weights = [_weight(args)]
        else:
            if args.max_level < 1:
                raise UsageError("--max-level must be >= 1")
            weights = _weights_up_to(args.max_level)
        reports = [r for w in weights for r in module_reports(w, N)]
        if args.oracle:
            reports += [oracle_report(w, min(N, ORACLE_ORDER)) for w in weights]
        return reports
    if sel == "complement":
        if args.k0 is not None or args.k1 is not None:
            weights = [_weight(args)]
        else:
            weights = [HighestWeight(l + 1, l) for l in (1, 2, 3)]
        return [complement_check(w, N) for w in weights]
    if sel == "section8":
        ls = [args.l] if args.l is not None else [1, 2, 3, 4]
        if any(l < 1 for l in ls):
            raise UsageError("--l must be >= 1")
        return [andrews_section8_check(l, N) for l in ls]
    # liealg
    if args.window < 1:
        raise UsageError("--window must be >= 1")
    return run_suite(SuiteConfig(order=N, grr=(), modules=(), verma=False, complements=(),
                                 section8=(), liealg_window=args.window, oracle_order=None))


def cmd_verify(args: argparse.Namespace, cache: SeriesCache | None) -> int:
    _check_order(args.order)
    reports = _verify_reports(args)
    mismatches = sum(not r.ok for r in reports)
    if args.format == "json":
        out = {
            "selector": args.selector,
            "order": args.order,
            "reports": [r.to_dict(args.timings) for r in reports],
            "summary": {"total": len(reports), "mismatches": mismatches},
        }
        _emit(_dump_json(out))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        header = ["label", "status", "order", "first_mismatch", "lhs", "rhs", "detail"]
        if args.timings:
            header.append("ms")
        writer.writerow(header)
        for r in reports:
            d = r.to_dict(args.timings)
            writer.writerow(["" if d.get(h) is None else d.get(h) for h in header])
        _emit(buf.getvalue())
    else:
        lines = [r.to_text(args.timings) for r in reports]
        lines.append(f"{len(reports) - mismatches}/{len(reports)} checks match")
        _emit("\n".join(lines))
    return EXIT_OK if mismatches == 0 else EXIT_MISMATCH


COMMANDS = {"char": cmd_char, "list": cmd_list, "verify": cmd_verify}


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="qpchar: %(message)s", stream=sys.stderr)
    args = build_parser().parse_args(argv)
    cache_dir = resolve_cache_dir(args.cache_dir)
    cache = SeriesCache(cache_dir, oracle=args.oracle) if cache_dir else None
    try:
        return COMMANDS[args.command](args, cache)
    except UsageError as exc:
        print(f"qpchar: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
