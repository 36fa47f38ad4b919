"""Coin sets and their derived constants.

Contract:
 - CoinSet is immutable; denominations are stored sorted, repeats kept.
 - d is the GCD of the denominations. M and M_prime are always taken over
   the reduced set (every denomination divided by d).
 - M_prime is the LCM of the pairwise GCDs, 1 for a single coin.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from typing import Iterable, Sequence

from models.errors import EmptyCoinSet, NonPositiveDenomination

_INT_TOKEN_RE = re.compile(r"^[+-]?\d+$")


@dataclass(frozen=True)
class CoinSet:
    denoms: tuple[int, ...]
    d: int
    M: int
    M_prime: int

    @property
    def L(self) -> int:
        return len(self.denoms)

    @property
    def reduced_denoms(self) -> tuple[int, ...]:
        return tuple(a // self.d for a in self.denoms)

    @property
    def reduced_product(self) -> int:
        return math.prod(self.reduced_denoms)

    @property
    def is_coprime(self) -> bool:
        return self.d == 1

    def __str__(self) -> str:
        return ",".join(str(a) for a in self.denoms)


def new_coin_set(denoms: Iterable[int]) -> CoinSet:
    values = list(denoms)
    if not values:
        raise EmptyCoinSet()
    for index, value in enumerate(values):
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            raise NonPositiveDenomination(value, index)
    ordered = tuple(sorted(values))
    d = reduce(math.gcd, ordered)
    red = [a // d for a in ordered]
    period = math.lcm(*red)
    period_prime = math.lcm(*(math.gcd(a, b) for a, b in combinations(red, 2)))
    return CoinSet(denoms=ordered, d=d, M=period, M_prime=period_prime)


def reduced(cs: CoinSet) -> CoinSet:
    if cs.d == 1:
        return cs
    return new_coin_set(cs.reduced_denoms)


def parse_coin_list(text: str) -> list[int]:
    """Parse ``"1,5,10,25"`` into integers (whitespace tolerated)."""
    tokens = [t.strip() for t in (text or "").split(",")]
    if tokens == [""]:
        raise EmptyCoinSet()
    values: list[int] = []
    for index, token in enumerate(tokens):
        if not _INT_TOKEN_RE.match(token):
            raise NonPositiveDenomination(token, index)
        values.append(int(token))
    return values


def coin_set_from_text(text: str) -> CoinSet:
    return new_coin_set(parse_coin_list(text))


def pair_gcds(denoms: Sequence[int]) -> list[tuple[int, int, int]]:
    """Distinct (a, b, GCD(a, b)) pairs with neither coin equal to 1, in listing order."""
    seen: set[tuple[int, int]] = set()
    out: list[tuple[int, int, int]] = []
    for a, b in combinations(denoms, 2):
        if a == 1 or b == 1 or (a, b) in seen:
            continue
        seen.add((a, b))
        out.append((a, b, math.gcd(a, b)))
    return out


__all__ = [
    "CoinSet",
    "new_coin_set",
    "reduced",
    "parse_coin_list",
    "coin_set_from_text",
    "pair_gcds",
]
