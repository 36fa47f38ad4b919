"""Immutable result records passed between services, utils and the CLI."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Optional, Tuple

from models.coin_set import CoinSet
from utils.exact_poly import Polynomial, render_decimal


@dataclass(frozen=True)
class CountTable:
    coins: CoinSet
    upto: int
    counts: Tuple[int, ...]


@dataclass(frozen=True)
class QuasiPolynomial:
    """h_0 .. h_{M-1} over the reduced coin set; ``coins`` is the set as given."""

    coins: CoinSet
    polys: Tuple[Polynomial, ...]
    verified_upto: int

    @property
    def d(self) -> int:
        return self.coins.d

    @property
    def M(self) -> int:
        return self.coins.M

    @property
    def M_prime(self) -> int:
        return self.coins.M_prime

    @property
    def L(self) -> int:
        return self.coins.L


@dataclass(frozen=True)
class Decomposition:
    coins: CoinSet
    shared: Tuple[Polynomial, ...]
    offsets: Tuple[Fraction, ...]

    @property
    def M(self) -> int:
        return len(self.offsets)

    @property
    def M_prime(self) -> int:
        return len(self.shared)


@dataclass(frozen=True)
class ConjectureReport:
    coins: CoinSet
    residue_count: int = 0
    negative_constant: Tuple[int, ...] = ()
    negative_nonconstant: Tuple[Tuple[int, int], ...] = ()
    zero_nonconstant: Tuple[Tuple[int, int], ...] = ()
    negative_linear: Tuple[int, ...] = ()
    integrality_violations: Tuple[Tuple[int, int, Fraction], ...] = ()
    factorial_integrality_violations: Tuple[Tuple[int, int, Fraction], ...] = ()
    b_min: Optional[Fraction] = None
    b_max: Optional[Fraction] = None
    b_spread: Optional[Fraction] = None
    bound: Optional[Fraction] = None
    within_bound: Optional[bool] = None
    places: int = 4
    rounding: str = "half-even"

    @property
    def all_nonconstant_nonnegative(self) -> bool:
        return not self.negative_nonconstant

    @property
    def all_nonconstant_positive(self) -> bool:
        return not self.negative_nonconstant and not self.zero_nonconstant

    def render(self, value: Optional[Fraction]) -> str:
        if value is None:
            return "-"
        return render_decimal(value, self.places, self.rounding)


@dataclass(frozen=True)
class BatchSummary:
    reports: Tuple[ConjectureReport, ...]
    b_min: Optional[Fraction] = None
    b_max: Optional[Fraction] = None
    min_spread: Optional[Fraction] = None
    max_spread: Optional[Fraction] = None
    bound: Optional[Fraction] = None
    within_bound: Optional[bool] = None
    places: int = 4
    rounding: str = "half-even"


@dataclass(frozen=True)
class GoldenRow:
    label: str
    residue: int
    poly: Polynomial
    primed: bool = False


@dataclass(frozen=True)
class GoldenTable:
    which: str
    coins: CoinSet
    kind: str
    modulus: int
    entries: Dict[int, Polynomial]
    rows: Tuple[GoldenRow, ...]
    strict: bool = False
    compare_constant: bool = True
    skip_constant: FrozenSet[int] = frozenset()
    bounds: Dict[str, str] = field(default_factory=dict)
    errata: Tuple[str, ...] = ()
    source: str = ""


@dataclass(frozen=True)
class GoldenMismatch:
    which: str
    field: str
    expected: str
    got: str
    residue: Optional[int] = None
    power: Optional[int] = None
    label: Optional[str] = None
    primed: bool = False

    def __str__(self) -> str:
        if self.residue is None:
            return f"Appendix {self.which}: {self.field} printed {self.expected}, computed {self.got}"
        where = f"h_{{{self.label if self.label is not None else self.residue}}}" + ("'" if self.primed else "")
        return (
            f"Appendix {self.which}: {where} (residue {self.residue}) x^{self.power} "
            f"printed {self.expected}, computed {self.got}"
        )


@dataclass(frozen=True)
class AppendixResult:
    which: str
    coins: CoinSet
    matched: int
    total: int
    mismatches: Tuple[GoldenMismatch, ...] = ()
    errata: Tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.mismatches

    @property
    def summary(self) -> str:
        return f"Appendix {self.which} [{self.coins}]: {self.matched}/{self.total} polynomials match"


__all__ = [
    "CountTable",
    "QuasiPolynomial",
    "Decomposition",
    "ConjectureReport",
    "BatchSummary",
    "GoldenRow",
    "GoldenTable",
    "GoldenMismatch",
    "AppendixResult",
]
