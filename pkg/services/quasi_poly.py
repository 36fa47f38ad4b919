"""Quasi-polynomial form of the denumerant.

Contract:
 - build_quasi_polynomial interpolates h_r for every residue r of the reduced
   period M through n = r, r+M, ..., r+(L-1)M and checks ``extra_checks``
   further points of the same class against the DP oracle.
 - Indexing: for a set with gcd d, CH(n) = 0 when d does not divide n,
   otherwise CH(n) = h_{m mod M}(m) with m = n/d.
 - decompose splits every h_r into a shared zero-constant part indexed by
   r mod M' and the offset b_r = h_r(0).
"""
from __future__ import annotations

import logging
import math
import time
from fractions import Fraction
from typing import List, Optional

from models.coin_set import CoinSet, reduced
from models.errors import (
    DecompositionMismatch,
    LeadingCoefficientMismatch,
    NonIntegerValue,
    VerificationFailure,
)
from models.records import Decomposition, QuasiPolynomial
from services.denumerant_oracle import count_range
from utils.exact_poly import (
    Polynomial,
    constant_term,
    drop_constant,
    eval_poly,
    lagrange_interpolate,
)

logger = logging.getLogger(__name__)


def build_quasi_polynomial(cs: CoinSet, extra_checks: Optional[int] = None) -> QuasiPolynomial:
    if extra_checks is None:
        extra_checks = cs.L
    if extra_checks < 0:
        raise ValueError(f"extra_checks must be nonnegative, got {extra_checks}")
    started = time.perf_counter()
    base = reduced(cs)
    L, M = base.L, base.M
    top = (L + extra_checks) * M - 1
    counts = count_range(base, top).counts

    polys: List[Polynomial] = []
    for r in range(M):
        samples = [(r + k * M, counts[r + k * M]) for k in range(L)]
        poly = lagrange_interpolate(samples)
        for k in range(L, L + extra_checks):
            m = r + k * M
            got = eval_poly(poly, m)
            if got != counts[m]:
                raise VerificationFailure(m * cs.d, counts[m], got)
        polys.append(poly)
        logger.debug("h_%d interpolated (degree %d)", r, poly.degree)

    q = QuasiPolynomial(coins=cs, polys=tuple(polys), verified_upto=cs.d * top)
    anomalies = degree_anomalies(q)
    if anomalies:
        logger.warning("coin set %s: %d pieces do not have degree %d: %s", cs, len(anomalies), L - 1, anomalies[:10])
    logger.info(
        "built %d pieces for %s (d=%d, M=%d, M'=%d) in %.3fs",
        M, cs, cs.d, M, cs.M_prime, time.perf_counter() - started,
    )
    return q


def degree_anomalies(q: QuasiPolynomial) -> List[int]:
    return [r for r, p in enumerate(q.polys) if p.degree != q.L - 1]


def evaluate_quasi(q: QuasiPolynomial, n: int) -> int:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n % q.d:
        return 0
    m = n // q.d
    value = eval_poly(q.polys[m % q.M], m)
    if value.denominator != 1 or value < 0:
        raise NonIntegerValue(n, value)
    return int(value)


def decompose(q: QuasiPolynomial) -> Decomposition:
    M_prime = q.M_prime
    shared = tuple(drop_constant(q.polys[s]) for s in range(M_prime))
    for r, p in enumerate(q.polys):
        body = drop_constant(p)
        target = shared[r % M_prime]
        if body != target:
            size = max(len(body.coeffs), len(target.coeffs))
            power = next(i for i in range(1, size) if body.coefficient(i) != target.coefficient(i))
            raise DecompositionMismatch(r, power)
    offsets = tuple(constant_term(p) for p in q.polys)
    logger.info("decomposed %s into %d shared parts and %d offsets", q.coins, M_prime, len(offsets))
    return Decomposition(coins=q.coins, shared=shared, offsets=offsets)


def evaluate_decomposition(dec: Decomposition, n: int) -> int:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    d = dec.coins.d
    if n % d:
        return 0
    m = n // d
    value = eval_poly(dec.shared[m % dec.M_prime], m) + dec.offsets[m % dec.M]
    if value.denominator != 1 or value < 0:
        raise NonIntegerValue(n, value)
    return int(value)


def expected_leading_coefficient(cs: CoinSet) -> Fraction:
    """1 / ((L-1)! * product of reduced denominations).

    In original units this is d**L / ((L-1)! * a_1 ... a_L), the same number.
    """
    return Fraction(1, math.factorial(cs.L - 1) * cs.reduced_product)


def leading_coefficient_check(q: QuasiPolynomial) -> Fraction:
    expected = expected_leading_coefficient(q.coins)
    for r, p in enumerate(q.polys):
        if p.degree != q.L - 1 or p.leading_coefficient != expected:
            raise LeadingCoefficientMismatch(r, p.leading_coefficient, expected)
    return expected


__all__ = [
    "build_quasi_polynomial",
    "degree_anomalies",
    "evaluate_quasi",
    "decompose",
    "evaluate_decomposition",
    "expected_leading_coefficient",
    "leading_coefficient_check",
]
