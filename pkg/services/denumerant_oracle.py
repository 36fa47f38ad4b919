"""Ground-truth denumerant counts by dynamic programming.

Contract:
 - Each listed denomination is its own coin slot, so repeats count separately.
 - Counts are Python ints: exact at any size.
 - Everything else in the package is checked against this module.
"""
from __future__ import annotations

import logging
from typing import Optional

from models.coin_set import CoinSet
from models.errors import NotCoprime
from models.records import CountTable

logger = logging.getLogger(__name__)


def count_range(cs: CoinSet, n_max: int) -> CountTable:
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    table = [0] * (n_max + 1)
    table[0] = 1
    # slot-outer / amount-inner counts multisets, not orderings
    for a in cs.denoms:
        for n in range(a, n_max + 1):
            table[n] += table[n - a]
    return CountTable(coins=cs, upto=n_max, counts=tuple(table))


def count_change(cs: CoinSet, n: int) -> int:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n % cs.d:
        return 0
    table = [0] * (n // cs.d + 1)
    table[0] = 1
    for a in cs.reduced_denoms:
        for m in range(a, len(table)):
            table[m] += table[m - a]
    return table[-1]


def frobenius(cs: CoinSet) -> Optional[int]:
    """Largest amount with no change, or None when a 1-coin is present.

    Scans upward; once ``min(denoms)`` consecutive amounts are representable,
    adding the smallest coin covers everything beyond.
    """
    if cs.d != 1:
        raise NotCoprime(cs.denoms, cs.d)
    smallest = cs.denoms[0]
    if smallest == 1:
        return None
    coins = sorted(set(cs.denoms))
    reachable = [True]
    run = 0
    last_gap = 0
    n = 0
    while run < smallest:
        n += 1
        ok = any(a <= n and reachable[n - a] for a in coins)
        reachable.append(ok)
        if ok:
            run += 1
        else:
            run = 0
            last_gap = n
    logger.debug("frobenius(%s) = %d after scanning to %d", cs, last_gap, n)
    return last_gap


__all__ = ["count_change", "count_range", "frobenius"]
