"""Empirical coefficient scans over built quasi-polynomials.

Contract:
 - Every report is a pure function of its inputs; reruns are identical.
 - Positivity is reported both strictly (zero counts against it) and
   non-strictly, never collapsed.
 - Integrality is checked for two multipliers, 2(L-1)*prod(a) and
   2*(L-1)!*prod(a), over the reduced denominations.
 - batch_sweep keeps input order whatever the worker count.
"""
from __future__ import annotations

import logging
import math
import multiprocessing as mp
import os
from dataclasses import replace
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from models.coin_set import CoinSet
from models.records import BatchSummary, ConjectureReport, Decomposition, QuasiPolynomial
from services.quasi_poly import build_quasi_polynomial, decompose
from utils.exact_poly import ROUNDING_MODES

logger = logging.getLogger(__name__)


def integrality_multiplier(cs: CoinSet, factorial: bool = False) -> int:
    factor = math.factorial(cs.L - 1) if factorial else cs.L - 1
    return 2 * factor * cs.reduced_product


def positivity_report(q: QuasiPolynomial) -> ConjectureReport:
    negative_constant: List[int] = []
    negative: List[Tuple[int, int]] = []
    zero: List[Tuple[int, int]] = []
    negative_linear: List[int] = []
    for r, p in enumerate(q.polys):
        if p.coefficient(0) < 0:
            negative_constant.append(r)
        if p.coefficient(1) < 0:
            negative_linear.append(r)
        for power in range(1, q.L):
            c = p.coefficient(power)
            if c < 0:
                negative.append((r, power))
            elif c == 0:
                zero.append((r, power))
    return ConjectureReport(
        coins=q.coins,
        residue_count=len(q.polys),
        negative_constant=tuple(negative_constant),
        negative_nonconstant=tuple(negative),
        zero_nonconstant=tuple(zero),
        negative_linear=tuple(negative_linear),
    )


def _violations(q: QuasiPolynomial, multiplier: int) -> Tuple[Tuple[int, int, Fraction], ...]:
    found = []
    for r, p in enumerate(q.polys):
        for power, c in enumerate(p.coeffs):
            if (multiplier * c).denominator != 1:
                found.append((r, power, c))
    return tuple(found)


def integrality_report(q: QuasiPolynomial) -> ConjectureReport:
    literal = _violations(q, integrality_multiplier(q.coins))
    factorial = _violations(q, integrality_multiplier(q.coins, factorial=True))
    if literal:
        logger.info("%s: %d coefficients break the 2(L-1)*prod(a) multiplier", q.coins, len(literal))
    return ConjectureReport(
        coins=q.coins,
        residue_count=len(q.polys),
        integrality_violations=literal,
        factorial_integrality_violations=factorial,
    )


def b_spread_report(
    dec: Decomposition,
    cs: Optional[CoinSet] = None,
    bound: Optional[Fraction] = None,
    places: int = 4,
    rounding: str = "half-even",
) -> ConjectureReport:
    coins = cs or dec.coins
    low, high = min(dec.offsets), max(dec.offsets)
    within = None
    if bound is not None:
        within = all(-bound <= b <= bound for b in dec.offsets)
    if rounding not in ROUNDING_MODES:
        raise ValueError(f"unknown rounding mode {rounding!r}")
    return ConjectureReport(
        coins=coins,
        residue_count=len(dec.offsets),
        b_min=low,
        b_max=high,
        b_spread=high - low,
        bound=bound,
        within_bound=within,
        places=places,
        rounding=rounding,
    )


def conjecture_report(
    q: QuasiPolynomial,
    dec: Optional[Decomposition] = None,
    bound: Optional[Fraction] = None,
    places: int = 4,
    rounding: str = "half-even",
) -> ConjectureReport:
    dec = dec or decompose(q)
    positivity = positivity_report(q)
    integrality = integrality_report(q)
    spread = b_spread_report(dec, q.coins, bound, places, rounding)
    return replace(
        positivity,
        integrality_violations=integrality.integrality_violations,
        factorial_integrality_violations=integrality.factorial_integrality_violations,
        b_min=spread.b_min,
        b_max=spread.b_max,
        b_spread=spread.b_spread,
        bound=bound,
        within_bound=spread.within_bound,
        places=places,
        rounding=rounding,
    )


def negative_linear_fraction(report: ConjectureReport) -> Fraction:
    if not report.residue_count:
        return Fraction(0)
    return Fraction(len(report.negative_linear), report.residue_count)


def offsets_within(
    reports: Iterable[ConjectureReport], low: Fraction, high: Fraction
) -> bool:
    """True when every rendered b_min/b_max lies inside [low, high]."""
    for rep in reports:
        for value in (rep.b_min, rep.b_max):
            if value is None:
                continue
            shown = Fraction(rep.render(value))
            if not low <= shown <= high:
                return False
    return True


def _sweep_one(job: Tuple[CoinSet, Optional[int], Optional[Fraction], int, str]) -> ConjectureReport:
    cs, extra_checks, bound, places, rounding = job
    q = build_quasi_polynomial(cs, extra_checks)
    return conjecture_report(q, bound=bound, places=places, rounding=rounding)


def batch_sweep(
    coin_sets: Sequence[CoinSet],
    workers: int = 1,
    bound: Optional[Fraction] = None,
    places: int = 4,
    rounding: str = "half-even",
    extra_checks: Optional[int] = None,
) -> BatchSummary:
    jobs = [(cs, extra_checks, bound, places, rounding) for cs in coin_sets]
    if workers <= 1 or len(jobs) <= 1:
        reports = [_sweep_one(job) for job in jobs]
    else:
        ctx = mp.get_context("spawn" if os.name == "nt" else "fork")
        with ctx.Pool(processes=workers) as pool:
            reports = pool.map(_sweep_one, jobs, chunksize=1)
    logger.info("swept %d coin sets with %d worker(s)", len(reports), max(workers, 1))
    if not reports:
        return BatchSummary(reports=(), bound=bound, places=places, rounding=rounding)
    spreads = [rep.b_spread for rep in reports]
    within = None
    if bound is not None:
        within = all(rep.within_bound for rep in reports)
    return BatchSummary(
        reports=tuple(reports),
        b_min=min(rep.b_min for rep in reports),
        b_max=max(rep.b_max for rep in reports),
        min_spread=min(spreads),
        max_spread=max(spreads),
        bound=bound,
        within_bound=within,
        places=places,
        rounding=rounding,
    )


__all__ = [
    "integrality_multiplier",
    "positivity_report",
    "integrality_report",
    "b_spread_report",
    "conjecture_report",
    "negative_linear_fraction",
    "offsets_within",
    "batch_sweep",
]
