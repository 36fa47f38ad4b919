r"""Parsing of appendix-style LaTeX tables.

Handles the row shapes found in the bundled tables and in our own output:
  ``h_{0}(x) & = BODY&``   ``h_{5}(x) & = BODY\\``   ``h_{0}'(x) & = BODY \cr``
  ``b_{3} & = VALUE \cr``  and family labels such as ``h_{19k+17}(x)``.
A BODY is a sum of terms ``\frac{p}{q}x^{k}``, ``3x``, ``x^{2}``, ``1`` with
binary plus/minus between them.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from models.errors import LatexParseError
from utils.exact_poly import Polynomial

_ROW_RE = re.compile(
    r"(?P<symbol>[hb])_\{(?P<label>[^}]+)\}(?P<prime>')?(?:\(x\))?\s*&\s*=\s*"
    r"(?P<body>.*?)\s*(?=&|\\\\|\\cr\b|$)",
    re.MULTILINE,
)
_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-])?\s*"
    r"(?P<coef>\\frac\{(?P<num>\d+)\}\{(?P<den>\d+)\}|\d+)?"
    r"(?P<var>x(?:\^\{(?P<power>\d+)\})?)?\s*"
)
_HEADER_RE = re.compile(r"\$(?P<name>M'?)\s*=(?:.*=)?\s*(?P<value>\d+)\s*\$")
_FAMILY_RE = re.compile(r"^(?P<step>\d+)k(?:\+(?P<offset>\d+))?$")


@dataclass(frozen=True)
class LatexRow:
    symbol: str
    label: str
    primed: bool
    body: str


def parse_latex_polynomial(body: str) -> Polynomial:
    text = (body or "").strip()
    if not text:
        raise LatexParseError(body, "empty polynomial")
    coeffs: dict[int, Fraction] = {}
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos or not (m.group("coef") or m.group("var")):
            raise LatexParseError(text[pos:], "unexpected token")
        if not first and not m.group("sign"):
            raise LatexParseError(text[pos:], "missing + or - between terms")
        if m.group("num") is not None:
            value = Fraction(int(m.group("num")), int(m.group("den")))
        elif m.group("coef"):
            value = Fraction(int(m.group("coef")))
        else:
            value = Fraction(1)
        if m.group("sign") == "-":
            value = -value
        if m.group("var"):
            power = int(m.group("power")) if m.group("power") else 1
        else:
            power = 0
        coeffs[power] = coeffs.get(power, Fraction(0)) + value
        pos = m.end()
        first = False
    size = max(coeffs) + 1
    return Polynomial(tuple(coeffs.get(i, Fraction(0)) for i in range(size)))


def parse_latex_rational(body: str) -> Fraction:
    poly = parse_latex_polynomial(body)
    if poly.degree > 0:
        raise LatexParseError(body, "expected a constant")
    return poly.coefficient(0)


def iter_latex_rows(text: str) -> List[LatexRow]:
    """Rows in reading order (left column before right on each line)."""
    return [
        LatexRow(m.group("symbol"), m.group("label").strip(), bool(m.group("prime")), m.group("body"))
        for m in _ROW_RE.finditer(text or "")
    ]


def parse_period_header(text: str) -> Optional[Tuple[str, int]]:
    """(``"M"`` or ``"M'"``, printed value) from a ``$M=...=N$`` line."""
    m = _HEADER_RE.search(text or "")
    if not m:
        return None
    return m.group("name"), int(m.group("value"))


def expand_label(label: str, family_range: Optional[Sequence[int]] = None) -> List[int]:
    """``"7"`` -> [7]; ``"19k+17"`` with range (0, 19) -> [17, 36, ..., 378]."""
    token = label.strip()
    if token.isdigit():
        return [int(token)]
    fam = _FAMILY_RE.match(token)
    if not fam:
        raise LatexParseError(label, "unrecognised residue label")
    if not family_range:
        raise LatexParseError(label, "family label needs a k range")
    step = int(fam.group("step"))
    offset = int(fam.group("offset") or 0)
    lo, hi = family_range
    return [step * k + offset for k in range(lo, hi + 1)]


__all__ = [
    "LatexRow",
    "parse_latex_polynomial",
    "parse_latex_rational",
    "iter_latex_rows",
    "parse_period_header",
    "expand_label",
]
