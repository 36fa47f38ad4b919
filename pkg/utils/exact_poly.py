"""Dense polynomials over the rationals, exact to the last digit.

Contract:
 - Polynomial.coeffs[i] is the coefficient of x**i, a Fraction in lowest terms.
 - Canonical form: no trailing zero coefficient; the zero polynomial is ().
   Structural equality is therefore polynomial equality.
 - No floating point anywhere in this module.
"""
from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

from models.errors import DuplicateAbscissa

Rational = Union[int, Fraction]

ROUNDING_MODES = ("half-even", "half-up", "down")


@dataclass(frozen=True)
class Polynomial:
    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        coeffs = [Fraction(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return poly_add(self, other)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return poly_sub(self, other)

    def __call__(self, x: Rational) -> Fraction:
        return eval_poly(self, x)


ZERO = Polynomial()


def eval_poly(p: Polynomial, x: Rational) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    size = max(len(p.coeffs), len(q.coeffs))
    return Polynomial(tuple(p.coefficient(i) + q.coefficient(i) for i in range(size)))


def poly_sub(p: Polynomial, q: Polynomial) -> Polynomial:
    size = max(len(p.coeffs), len(q.coeffs))
    return Polynomial(tuple(p.coefficient(i) - q.coefficient(i) for i in range(size)))


def constant_term(p: Polynomial) -> Fraction:
    return p.coefficient(0)


def drop_constant(p: Polynomial) -> Polynomial:
    if not p.coeffs:
        return p
    return Polynomial((Fraction(0),) + p.coeffs[1:])


def _master_polynomial(xs: Sequence[Fraction]) -> list[Fraction]:
    # (x - x0)(x - x1)...(x - xk), ascending coefficients
    root = [Fraction(1)]
    for x in xs:
        root.insert(0, Fraction(0))
        for j in range(len(root) - 1):
            root[j] -= root[j + 1] * x
    return root


def _deflate(root: Sequence[Fraction], x: Fraction) -> list[Fraction]:
    # synthetic division of root by (t - x); root has x as a zero
    out = [Fraction(0)] * (len(root) - 2) + [Fraction(1)]
    for j in range(len(root) - 2, 0, -1):
        out[j - 1] = root[j] + out[j] * x
    return out


def lagrange_interpolate(points: Iterable[Tuple[Rational, Rational]]) -> Polynomial:
    """Unique polynomial of degree <= len(points) - 1 through ``points``.

    Builds the master product once and divides each abscissa back out, so the
    whole fit costs O(k^2) rational operations.
    """
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    if not pts:
        raise ValueError("interpolation needs at least one point")
    seen: set[Fraction] = set()
    for x, _ in pts:
        if x in seen:
            raise DuplicateAbscissa(x)
        seen.add(x)
    xs = [x for x, _ in pts]
    root = _master_polynomial(xs)
    acc = [Fraction(0)] * len(pts)
    for x, y in pts:
        if y == 0:
            continue
        basis = _deflate(root, x)
        scale = y / eval_poly(Polynomial(tuple(basis)), x)
        for i, c in enumerate(basis):
            acc[i] += c * scale
    return Polynomial(tuple(acc))


def rational_to_text(value: Rational) -> str:
    """Lowest-terms ``"num/den"``; integers keep the ``/1``."""
    q = Fraction(value)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`rational_to_text`; also accepts bare integers."""
    token = (text or "").strip()
    num, sep, den = token.partition("/")
    try:
        if not sep:
            return Fraction(int(num))
        denominator = int(den)
        if denominator <= 0:
            raise ValueError(token)
        return Fraction(int(num), denominator)
    except ValueError:
        raise ValueError(f"not an exact rational: {text!r}") from None


def render_decimal(value: Rational, places: int = 4, rounding: str = "half-even") -> str:
    """Fixed-point rendering of an exact rational.

    ``down`` truncates toward zero; the half modes round the exact tie only.
    """
    if rounding not in ROUNDING_MODES:
        raise ValueError(f"unknown rounding mode {rounding!r}; choose from {', '.join(ROUNDING_MODES)}")
    if places < 0:
        raise ValueError("places must be nonnegative")
    scaled = abs(Fraction(value)) * 10 ** places
    whole, rem = divmod(scaled.numerator, scaled.denominator)
    if rounding != "down":
        twice = 2 * rem
        if twice > scaled.denominator or (
            twice == scaled.denominator and (rounding == "half-up" or whole % 2 == 1)
        ):
            whole += 1
    negative = Fraction(value) < 0 and whole != 0
    digits = tuple(int(ch) for ch in str(whole))
    return format(Decimal((1 if negative else 0, digits, -places)), "f")


__all__ = [
    "Polynomial",
    "Rational",
    "ROUNDING_MODES",
    "ZERO",
    "eval_poly",
    "poly_add",
    "poly_sub",
    "constant_term",
    "drop_constant",
    "lagrange_interpolate",
    "rational_to_text",
    "parse_rational",
    "render_decimal",
]
