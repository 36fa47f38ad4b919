from fractions import Fraction

import pytest

from models.errors import LatexParseError
from utils.exact_poly import ZERO, Polynomial
from utils.text_utils import (
    expand_label,
    iter_latex_rows,
    parse_latex_polynomial,
    parse_latex_rational,
    parse_period_header,
)

TWO_COLUMN = (
    "h_{0}(x) & = \\frac{1}{7500}x^{3} + \\frac{9}{1000}x^{2} + \\frac{53}{300}x + 1& \n"
    " h_{5}(x) & = \\frac{1}{7500}x^{3} + \\frac{9}{1000}x^{2} + \\frac{53}{300}x + \\frac{7}{8}\\\\\n"
)


def test_parse_polynomial():
    p = parse_latex_polynomial("\\frac{1}{7500}x^{3} + \\frac{9}{1000}x^{2} + \\frac{53}{300}x + 1")
    assert p == Polynomial((1, Fraction(53, 300), Fraction(9, 1000), Fraction(1, 7500)))
    assert parse_latex_polynomial("x^{2} - 3x") == Polynomial((0, -3, 1))
    assert parse_latex_polynomial("- \\frac{23}{396}") == Polynomial((Fraction(-23, 396),))
    assert parse_latex_polynomial("0") == ZERO


@pytest.mark.parametrize("bad", ["", "   ", "y^{2}", "\\frac{1}{2}x \\frac{1}{3}", "x^{2} + "])
def test_parse_polynomial_rejects_garbage(bad):
    with pytest.raises(LatexParseError):
        parse_latex_polynomial(bad)


def test_parse_rational():
    assert parse_latex_rational("- \\frac{7}{48}") == Fraction(-7, 48)
    assert parse_latex_rational("1") == 1
    with pytest.raises(LatexParseError):
        parse_latex_rational("x + 1")


def test_rows_in_reading_order():
    rows = iter_latex_rows(TWO_COLUMN)
    assert [r.label for r in rows] == ["0", "5"]
    assert all(r.symbol == "h" and not r.primed for r in rows)
    assert parse_latex_polynomial(rows[1].body).coefficient(0) == Fraction(7, 8)


def test_primed_and_offset_rows():
    text = "h_{1}'(x) & = \\frac{1}{48}x^{2} + \\frac{1}{8}x\\cr\nb_{3} & = - \\frac{7}{48} \\cr\n"
    first, second = iter_latex_rows(text)
    assert first.primed and first.label == "1"
    assert first.body == "\\frac{1}{48}x^{2} + \\frac{1}{8}x"
    assert (second.symbol, second.label) == ("b", "3")
    assert parse_latex_rational(second.body) == Fraction(-7, 48)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("$M=LCM(1,5,10,25)=50$.", ("M", 50)),
        ("$M'=LCM(GCD(2,3),GCD(2,4),GCD(3,4))=LCM(1,2,1)=2$.", ("M'", 2)),
        ("$M'=1$", ("M'", 1)),
        ("no period here", None),
    ],
)
def test_period_header(text, expected):
    assert parse_period_header(text) == expected


def test_expand_label():
    assert expand_label("7") == [7]
    family = expand_label("19k+17", (0, 19))
    assert family[0] == 17 and family[-1] == 378 and len(family) == 20
    assert expand_label("19k", (0, 2)) == [0, 19, 38]
    with pytest.raises(LatexParseError):
        expand_label("19k+17")
    with pytest.raises(LatexParseError):
        expand_label("r")


def test_module_doc_keeps_latex_backslashes():
    import utils.text_utils as module

    assert "\f" not in module.__doc__
    assert "\\frac{p}{q}" in module.__doc__ and "\\cr" in module.__doc__
