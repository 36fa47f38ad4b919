import random
from fractions import Fraction

import pytest
import sympy

from models.errors import DuplicateAbscissa
from utils.exact_poly import (
    ZERO,
    Polynomial,
    drop_constant,
    eval_poly,
    lagrange_interpolate,
    parse_rational,
    rational_to_text,
    render_decimal,
)


def test_canonical_form_strips_trailing_zeros():
    p = Polynomial((1, 2, 0, 0))
    assert p.coeffs == (Fraction(1), Fraction(2))
    assert p.degree == 1
    assert Polynomial((0, 0)) == ZERO
    assert ZERO.degree == -1 and ZERO.is_zero
    assert ZERO.leading_coefficient == 0


def test_arithmetic_and_evaluation():
    p = Polynomial((Fraction(1, 2), 0, 3))
    q = Polynomial((Fraction(-1, 2), 1))
    assert (p + q).coeffs == (0, 1, 3)
    assert (p - p) == ZERO
    assert p(2) == Fraction(25, 2)
    assert eval_poly(q, Fraction(1, 2)) == 0
    assert drop_constant(p).coefficient(0) == 0
    assert drop_constant(Polynomial((5,))) == ZERO


def test_interpolation_matches_sympy():
    rng = random.Random(11)
    x = sympy.Symbol("x")
    for size in range(1, 8):
        xs = rng.sample(range(-30, 30), size)
        pts = [(xv, Fraction(rng.randint(-50, 50), rng.randint(1, 9))) for xv in xs]
        ours = lagrange_interpolate(pts)
        ref = sympy.Poly(
            sympy.interpolate([(xv, sympy.Rational(y.numerator, y.denominator)) for xv, y in pts], x), x
        )
        expected = [Fraction(int(c.p), int(c.q)) for c in reversed(ref.all_coeffs())]
        assert ours == Polynomial(tuple(expected))


def test_interpolation_recovers_polynomial():
    rng = random.Random(3)
    for degree in range(0, 7):
        p = Polynomial(tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(degree)) + (Fraction(1, 7),))
        pts = [(k, p(k)) for k in range(5, 5 + degree + 1)]
        assert lagrange_interpolate(pts) == p


def test_interpolation_errors():
    with pytest.raises(ValueError):
        lagrange_interpolate([])
    with pytest.raises(DuplicateAbscissa):
        lagrange_interpolate([(1, 2), (1, 3)])


def test_interpolation_of_zero_values():
    assert lagrange_interpolate([(0, 0), (1, 0), (2, 0)]) == ZERO


def test_rational_text():
    assert rational_to_text(Fraction(-6, 4)) == "-3/2"
    assert rational_to_text(3) == "3/1"
    assert parse_rational("-3/2") == Fraction(-3, 2)
    assert parse_rational(" 7 ") == 7
    for bad in ("", "1/0", "a/b", "1.5"):
        with pytest.raises(ValueError):
            parse_rational(bad)


@pytest.mark.parametrize(
    "value, places, rounding, expected",
    [
        (Fraction(257, 180), 4, "half-even", "1.4278"),
        (Fraction(257, 180), 4, "down", "1.4277"),
        (Fraction(-7, 48), 4, "half-even", "-0.1458"),
        (Fraction(1, 8), 2, "half-even", "0.12"),
        (Fraction(1, 8), 2, "half-up", "0.13"),
        (Fraction(3, 8), 2, "half-even", "0.38"),
        (Fraction(-1, 100000), 4, "half-even", "0.0000"),
        (Fraction(6, 5), 4, "half-even", "1.2000"),
        (Fraction(388717, 28880), 4, "half-even", "13.4597"),
        (3, 0, "down", "3"),
    ],
)
def test_render_decimal(value, places, rounding, expected):
    assert render_decimal(value, places, rounding) == expected


def test_render_decimal_rejects_unknown_mode():
    with pytest.raises(ValueError):
        render_decimal(Fraction(1, 3), 4, "ceiling")
    with pytest.raises(ValueError):
        render_decimal(Fraction(1, 3), -1)
