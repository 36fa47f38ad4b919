"""QuasiCoin command-line entry point.

Subcommands: count, table, interpolate, decompose, frobenius, conjectures,
verify-appendix. Results go to stdout, diagnostics to stderr.

Exit codes: 0 success, 1 bad input, 2 a computed value disagrees with the
oracle or with golden data.
"""

from __future__ import annotations

import argparse
import json
import logging
import logging.config
import sys
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

from models.coin_set import CoinSet, coin_set_from_text
from models.errors import CliUsageError, GuardrailExceeded, QuasiCoinError
from models.records import ConjectureReport
from services import settings
from services.conjecture_lab import b_spread_report, batch_sweep, conjecture_report
from services.denumerant_oracle import count_change, count_range, frobenius
from services.golden_service import APPENDICES, verify_appendix
from services.quasi_poly import build_quasi_polynomial, decompose
from utils.exact_poly import ROUNDING_MODES, rational_to_text
from utils.file_utils import (
    count_table_to_json,
    decomposition_to_json,
    quasi_to_json,
    read_batch_file,
)
from utils.format_utils import (
    batch_to_csv,
    batch_to_text,
    count_table_to_csv,
    decomposition_to_text,
    emit_latex,
    quasi_to_text,
    report_to_text,
)

logger = logging.getLogger("quasicoin")

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


class _ArgumentParser(argparse.ArgumentParser):
    # exit status 2 belongs to verification mismatches
    def error(self, message: str) -> None:  # type: ignore[override]
        raise CliUsageError(f"{self.prog}: {message}")


def _check_guardrails(cs: CoinSet, *, needs_period: bool) -> CoinSet:
    if cs.L > settings.MAX_COINS:
        raise GuardrailExceeded("coin count", cs.L, settings.MAX_COINS)
    for a in cs.denoms:
        if a > settings.MAX_DENOMINATION:
            raise GuardrailExceeded("denomination", a, settings.MAX_DENOMINATION)
    if needs_period and cs.M > settings.MAX_PERIOD:
        raise GuardrailExceeded("period M", cs.M, settings.MAX_PERIOD)
    return cs


def _check_amount(name: str, value: int) -> int:
    if value > settings.MAX_AMOUNT:
        raise GuardrailExceeded(name, value, settings.MAX_AMOUNT)
    return value


def _coins(args: argparse.Namespace, *, needs_period: bool = False) -> CoinSet:
    return _check_guardrails(coin_set_from_text(args.coins), needs_period=needs_period)


def _extra_checks(args: argparse.Namespace) -> Optional[int]:
    value = args.extra_checks if args.extra_checks is not None else settings.EXTRA_CHECKS
    if value is not None and value < 0:
        raise CliUsageError("--extra-checks must be nonnegative")
    return value


def _bound(text: Optional[str]) -> Optional[Fraction]:
    if text is None:
        return None
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise CliUsageError(f"--bound expects a rational or decimal, got {text!r}") from None
    if value < 0:
        raise CliUsageError("--bound must be nonnegative")
    return value


def _cmd_count(args: argparse.Namespace) -> int:
    if args.n < 0:
        raise CliUsageError("--n must be nonnegative")
    cs = _coins(args)
    _check_amount("amount", args.n // cs.d)
    print(count_change(cs, args.n))
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    if args.max < 0:
        raise CliUsageError("--max must be nonnegative")
    table = count_range(_coins(args), _check_amount("table size", args.max))
    sys.stdout.write(count_table_to_json(table) if args.format == "json" else count_table_to_csv(table))
    return 0


def _cmd_interpolate(args: argparse.Namespace) -> int:
    q = build_quasi_polynomial(_coins(args, needs_period=True), _extra_checks(args))
    if args.format == "json":
        sys.stdout.write(quasi_to_json(q))
    elif args.format == "latex":
        sys.stdout.write(emit_latex(q))
    else:
        print(quasi_to_text(q))
    return 0


def _cmd_decompose(args: argparse.Namespace) -> int:
    cs = _coins(args, needs_period=True)
    dec = decompose(build_quasi_polynomial(cs, _extra_checks(args)))
    if args.format == "json":
        sys.stdout.write(decomposition_to_json(dec))
    elif args.format == "latex":
        sys.stdout.write(emit_latex(dec))
    else:
        report = b_spread_report(dec, cs, places=args.places, rounding=args.rounding)
        print(decomposition_to_text(dec, report))
    return 0


def _cmd_frobenius(args: argparse.Namespace) -> int:
    cs = _coins(args)
    if cs.d == 1:
        # the Frobenius number is below (a_1 - 1)(a_L - 1)
        _check_amount("frobenius scan", (cs.denoms[0] - 1) * (cs.denoms[-1] - 1))
    value = frobenius(cs)
    print("none" if value is None else value)
    return 0


def _report_json(rep: ConjectureReport) -> Dict[str, object]:
    return {
        "coins": list(rep.coins.denoms),
        "residues": rep.residue_count,
        "negative_constant": list(rep.negative_constant),
        "negative_nonconstant": [list(item) for item in rep.negative_nonconstant],
        "zero_nonconstant": [list(item) for item in rep.zero_nonconstant],
        "negative_linear": len(rep.negative_linear),
        "integrality_violations": [[r, k, rational_to_text(c)] for r, k, c in rep.integrality_violations],
        "factorial_integrality_violations": [
            [r, k, rational_to_text(c)] for r, k, c in rep.factorial_integrality_violations
        ],
        "b_min": rational_to_text(rep.b_min),
        "b_max": rational_to_text(rep.b_max),
        "b_spread": rational_to_text(rep.b_spread),
        "b_spread_decimal": rep.render(rep.b_spread),
        "rounding": rep.rounding,
        "within_bound": rep.within_bound,
    }


def _cmd_conjectures(args: argparse.Namespace) -> int:
    bound = _bound(args.bound)
    if args.batch:
        sets = [_check_guardrails(cs, needs_period=True) for cs in read_batch_file(args.batch)]
        workers = args.workers if args.workers is not None else settings.WORKERS
        summary = batch_sweep(
            sets, workers=workers, bound=bound, places=args.places,
            rounding=args.rounding, extra_checks=_extra_checks(args),
        )
        fmt = args.format or "csv"
        if fmt == "json":
            print(json.dumps([_report_json(rep) for rep in summary.reports], indent=2))
        elif fmt == "text":
            print(batch_to_text(summary))
        else:
            sys.stdout.write(batch_to_csv(summary))
        return 0

    q = build_quasi_polynomial(_coins(args, needs_period=True), _extra_checks(args))
    report = conjecture_report(q, bound=bound, places=args.places, rounding=args.rounding)
    if args.format == "json":
        print(json.dumps(_report_json(report), indent=2))
    else:
        print(report_to_text(report))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    targets: List[str] = list(APPENDICES) if args.which == "all" else [args.which]
    failed = False
    for which in targets:
        result = verify_appendix(which, strict=args.strict, golden_dir=args.golden_dir)
        print(result.summary)
        for note in result.errata:
            print(f"  erratum: {note}")
        for mismatch in result.mismatches:
            print(f"  MISMATCH {mismatch}")
        failed = failed or not result.ok
    return 2 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="quasicoin", description="Exact quasi-polynomials for coin-change counts.")
    parser.add_argument("--log-level", type=str.upper, choices=LOG_LEVELS, default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    def coins_arg(p: argparse.ArgumentParser) -> None:
        p.add_argument("--coins", required=True, help="Comma-separated denominations, e.g. 1,5,10,25.")

    def decimals_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--places", type=int, default=settings.DECIMAL_PLACES, help="Decimal places for b renderings.")
        p.add_argument("--rounding", choices=ROUNDING_MODES, default=settings.ROUNDING)

    p = sub.add_parser("count", help="Print CH(n).")
    coins_arg(p)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("table", help="CH(0..max) as CSV or JSON.")
    coins_arg(p)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("interpolate", help="Build and verify h_0 .. h_{M-1}.")
    coins_arg(p)
    p.add_argument("--extra-checks", type=int, default=None)
    p.add_argument("--format", choices=("json", "latex", "text"), default="text")
    p.set_defaults(handler=_cmd_interpolate)

    p = sub.add_parser("decompose", help="Shared parts h'_r and offsets b_r.")
    coins_arg(p)
    p.add_argument("--extra-checks", type=int, default=None)
    p.add_argument("--format", choices=("json", "latex", "text"), default="text")
    decimals_args(p)
    p.set_defaults(handler=_cmd_decompose)

    p = sub.add_parser("frobenius", help="Largest amount with no change.")
    coins_arg(p)
    p.set_defaults(handler=_cmd_frobenius)

    p = sub.add_parser("conjectures", help="Positivity, integrality and b-spread scans.")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--coins")
    source.add_argument("--batch", help="File with one coin set per line.")
    p.add_argument("--bound", default=None, help="Flag whether every b lies in [-B, B].")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--extra-checks", type=int, default=None)
    p.add_argument("--format", choices=("text", "json", "csv"), default=None,
                   help="Default: text for --coins, csv for --batch.")
    decimals_args(p)
    p.set_defaults(handler=_cmd_conjectures)

    p = sub.add_parser("verify-appendix", help="Rebuild and diff against the bundled appendix tables.")
    p.add_argument("--which", choices=(*APPENDICES, "all"), required=True)
    p.add_argument("--strict", action="store_true", help="Compare rows exactly as printed, no errata.")
    p.add_argument("--golden-dir", default=None)
    p.set_defaults(handler=_cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        logging.config.dictConfig(settings.LOGGING_CONFIG)
        if args.log_level:
            logging.getLogger().setLevel(args.log_level)
        logger.debug("running %s", args.command)
        handler: Callable[[argparse.Namespace], int] = args.handler
        return handler(args)
    except QuasiCoinError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
