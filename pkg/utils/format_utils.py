"""Rendering of polynomials, tables and reports for the CLI.

LaTeX output follows the appendix layout: descending powers, ``\\frac{p}{q}``
coefficients, bare integers, a coefficient of 1 omitted before ``x``, binary
minus between terms and ``0`` for the zero polynomial.
"""
from __future__ import annotations

import csv
import io
from fractions import Fraction
from typing import Iterable, List, Union

from models.coin_set import pair_gcds
from models.records import (
    BatchSummary,
    ConjectureReport,
    CountTable,
    Decomposition,
    QuasiPolynomial,
)
from utils.exact_poly import Polynomial, rational_to_text


def _latex_magnitude(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"\\frac{{{q.numerator}}}{{{q.denominator}}}"


def rational_to_latex(value: Union[int, Fraction]) -> str:
    q = Fraction(value)
    return ("- " if q < 0 else "") + _latex_magnitude(abs(q))


def _terms(p: Polynomial, magnitude, power_text, glue: str) -> str:
    parts: List[str] = []
    for power in range(p.degree, -1, -1):
        c = p.coefficient(power)
        if c == 0:
            continue
        mag = abs(c)
        if power == 0:
            term = magnitude(mag)
        elif mag == 1:
            term = power_text(power)
        else:
            term = f"{magnitude(mag)}{glue}{power_text(power)}"
        if not parts:
            parts.append(f"- {term}" if c < 0 else term)
        else:
            parts.append(f"{'-' if c < 0 else '+'} {term}")
    return " ".join(parts) if parts else "0"


def polynomial_to_latex(p: Polynomial) -> str:
    return _terms(p, _latex_magnitude, lambda k: "x" if k == 1 else f"x^{{{k}}}", "")


def _plain_magnitude(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def polynomial_to_text(p: Polynomial) -> str:
    """Plain form, e.g. ``1/7500 x^3 + 9/1000 x^2 + 53/300 x + 1``."""
    return _terms(p, _plain_magnitude, lambda k: "x" if k == 1 else f"x^{k}", " ")


def _period_header(obj: Union[QuasiPolynomial, Decomposition]) -> str:
    red = obj.coins.reduced_denoms
    if isinstance(obj, QuasiPolynomial):
        return f"$M=LCM({','.join(map(str, red))})={obj.M}$"
    pairs = pair_gcds(red)
    if not pairs:
        return f"$M'={obj.M_prime}$"
    gcds = ",".join(f"GCD({a},{b})" for a, b, _ in pairs)
    values = ",".join(str(g) for _, _, g in pairs)
    return f"$M'=LCM({gcds})=LCM({values})={obj.M_prime}$"


def emit_latex(obj: Union[QuasiPolynomial, Decomposition]) -> str:
    lines = [_period_header(obj), "", "\\[", "\\begin{array}{rl}"]
    if isinstance(obj, QuasiPolynomial):
        for r, p in enumerate(obj.polys):
            lines.append(f"h_{{{r}}}(x) & = {polynomial_to_latex(p)} \\cr")
    else:
        for s, p in enumerate(obj.shared):
            lines.append(f"h_{{{s}}}'(x) & = {polynomial_to_latex(p)} \\cr")
        for r, b in enumerate(obj.offsets):
            lines.append(f"b_{{{r}}} & = {rational_to_latex(b)} \\cr")
    lines += ["\\end{array}", "\\]", ""]
    return "\n".join(lines)


def quasi_to_text(q: QuasiPolynomial) -> str:
    head = f"coins {q.coins}  d={q.d}  M={q.M}  M'={q.M_prime}  verified up to n={q.verified_upto}"
    body = [f"h_{r}(x) = {polynomial_to_text(p)}" for r, p in enumerate(q.polys)]
    return "\n".join([head, *body])


def decomposition_to_text(dec: Decomposition, report: ConjectureReport) -> str:
    lines = [f"coins {dec.coins}  M={dec.M}  M'={dec.M_prime}"]
    lines += [f"h'_{s}(x) = {polynomial_to_text(p)}" for s, p in enumerate(dec.shared)]
    lines += [f"b_{r} = {rational_to_text(b)}" for r, b in enumerate(dec.offsets)]
    lines.append(_spread_line(report))
    return "\n".join(lines)


def _spread_line(rep: ConjectureReport) -> str:
    return (
        f"b min {rational_to_text(rep.b_min)} ({rep.render(rep.b_min)})  "
        f"max {rational_to_text(rep.b_max)} ({rep.render(rep.b_max)})  "
        f"spread {rational_to_text(rep.b_spread)} ({rep.render(rep.b_spread)}, {rep.rounding})"
    )


def report_to_text(rep: ConjectureReport) -> str:
    lines = [f"coins {rep.coins}  residues {rep.residue_count}"]
    lines.append(f"negative constant term: {len(rep.negative_constant)} {list(rep.negative_constant)}")
    lines.append(
        f"negative linear term: {len(rep.negative_linear)} of {rep.residue_count}"
    )
    lines.append(
        "non-constant coefficients: "
        f"{len(rep.negative_nonconstant)} negative, {len(rep.zero_nonconstant)} zero "
        f"(all positive: {'yes' if rep.all_nonconstant_positive else 'no'}, "
        f"all nonnegative: {'yes' if rep.all_nonconstant_nonnegative else 'no'})"
    )
    lines.append(f"2(L-1)*prod(a)*c integral: {len(rep.integrality_violations)} violations")
    lines.append(f"2(L-1)!*prod(a)*c integral: {len(rep.factorial_integrality_violations)} violations")
    if rep.b_min is not None:
        lines.append(_spread_line(rep))
    if rep.bound is not None:
        lines.append(f"all b in [-{rational_to_text(rep.bound)}, {rational_to_text(rep.bound)}]: {'yes' if rep.within_bound else 'no'}")
    return "\n".join(lines)


def batch_to_text(summary: BatchSummary) -> str:
    blocks = [report_to_text(rep) for rep in summary.reports]
    if summary.reports:
        first = summary.reports[0]
        blocks.append(
            f"overall b in [{first.render(summary.b_min)}, {first.render(summary.b_max)}]  "
            f"spread {first.render(summary.min_spread)} .. {first.render(summary.max_spread)}"
        )
    return "\n\n".join(blocks)


def _csv(rows: Iterable[Iterable[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def count_table_to_csv(table: CountTable) -> str:
    return _csv([("n", "count"), *((n, c) for n, c in enumerate(table.counts))])


BATCH_CSV_HEADER = (
    "coins", "neg_constant", "neg_nonconstant", "zero_nonconstant",
    "b_min", "b_max", "spread", "integrality_violations", "factorial_integrality_violations",
)


def batch_to_csv(summary: BatchSummary) -> str:
    rows = [BATCH_CSV_HEADER]
    for rep in summary.reports:
        rows.append((
            str(rep.coins),
            len(rep.negative_constant),
            len(rep.negative_nonconstant),
            len(rep.zero_nonconstant),
            rational_to_text(rep.b_min),
            rational_to_text(rep.b_max),
            rep.render(rep.b_spread),
            len(rep.integrality_violations),
            len(rep.factorial_integrality_violations),
        ))
    return _csv(rows)


__all__ = [
    "rational_to_latex",
    "polynomial_to_latex",
    "polynomial_to_text",
    "emit_latex",
    "quasi_to_text",
    "decomposition_to_text",
    "report_to_text",
    "batch_to_text",
    "count_table_to_csv",
    "batch_to_csv",
    "BATCH_CSV_HEADER",
]
