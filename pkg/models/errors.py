"""Exception hierarchy shared by every QuasiCoin layer.

Contract:
 - Every error raised on purpose derives from QuasiCoinError.
 - ``exit_code`` is what the CLI returns for it: 1 for bad input, 2 when a
   computed value disagrees with the oracle or with golden data.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Any, Optional


class QuasiCoinError(Exception):
    exit_code = 1


class CliUsageError(QuasiCoinError):
    pass


class EmptyCoinSet(QuasiCoinError):
    def __init__(self) -> None:
        super().__init__("coin set must contain at least one denomination")


class NonPositiveDenomination(QuasiCoinError):
    def __init__(self, value: Any, index: int) -> None:
        self.value = value
        self.index = index
        super().__init__(f"denomination {value!r} at index {index} is not a positive integer")


class NotCoprime(QuasiCoinError):
    def __init__(self, denoms: tuple[int, ...], d: int) -> None:
        self.denoms = denoms
        self.d = d
        super().__init__(
            f"denominations {','.join(map(str, denoms))} share the factor {d}; "
            "infinitely many amounts have no change"
        )


class DuplicateAbscissa(QuasiCoinError):
    def __init__(self, x: Fraction) -> None:
        self.x = x
        super().__init__(f"interpolation abscissa {x} appears more than once")


class GuardrailExceeded(QuasiCoinError):
    def __init__(self, name: str, value: int, limit: int) -> None:
        self.name = name
        self.value = value
        self.limit = limit
        super().__init__(f"{name} {value} exceeds the configured limit {limit}")


class MissingGoldenFile(QuasiCoinError):
    def __init__(self, path: str) -> None:
        self.path = path
        super().__init__(f"golden data not found: {path}")


class GoldenFileCorrupt(QuasiCoinError):
    def __init__(self, path: str, reason: str) -> None:
        self.path = path
        self.reason = reason
        super().__init__(f"golden data {path} is unusable: {reason}")


class LatexParseError(QuasiCoinError):
    def __init__(self, fragment: str, reason: str) -> None:
        self.fragment = fragment
        self.reason = reason
        super().__init__(f"cannot parse {fragment!r}: {reason}")


class VerificationError(QuasiCoinError):
    exit_code = 2


class VerificationFailure(VerificationError):
    def __init__(self, n: int, expected: int, got: Fraction) -> None:
        self.n = n
        self.expected = expected
        self.got = got
        super().__init__(f"CH({n}) is {expected} but the interpolated piece gives {got}")


class NonIntegerValue(VerificationError):
    def __init__(self, n: int, value: Fraction) -> None:
        self.n = n
        self.value = value
        super().__init__(f"quasi-polynomial at n={n} evaluates to {value}, not a nonnegative integer")


class DecompositionMismatch(VerificationError):
    def __init__(self, residue: int, power: int) -> None:
        self.residue = residue
        self.power = power
        super().__init__(
            f"h_{residue} differs from its shared part in the x^{power} coefficient"
        )


class LeadingCoefficientMismatch(VerificationError):
    def __init__(self, residue: int, found: Fraction, expected: Optional[Fraction] = None) -> None:
        self.residue = residue
        self.found = found
        self.expected = expected
        super().__init__(
            f"h_{residue} has leading coefficient {found}, expected {expected}"
        )


__all__ = [
    "QuasiCoinError",
    "CliUsageError",
    "EmptyCoinSet",
    "NonPositiveDenomination",
    "NotCoprime",
    "DuplicateAbscissa",
    "GuardrailExceeded",
    "MissingGoldenFile",
    "GoldenFileCorrupt",
    "LatexParseError",
    "VerificationError",
    "VerificationFailure",
    "NonIntegerValue",
    "DecompositionMismatch",
    "LeadingCoefficientMismatch",
]
