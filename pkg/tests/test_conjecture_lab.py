from fractions import Fraction

import pytest

from models.coin_set import new_coin_set
from models.records import QuasiPolynomial
from services.conjecture_lab import (
    b_spread_report,
    batch_sweep,
    conjecture_report,
    integrality_multiplier,
    integrality_report,
    negative_linear_fraction,
    offsets_within,
    positivity_report,
)
from utils.exact_poly import Polynomial, render_decimal


@pytest.mark.parametrize(
    "name, expected",
    [
        ("small", (1, 5)),
        ("mixed", (1, 2, 4, 7, 13, 14, 19, 22, 25)),
        ("eleven", (21, 87, 98)),
    ],
)
def test_negative_constant_terms(built, name, expected):
    assert positivity_report(built(name)).negative_constant == expected


def test_small_sets_have_positive_nonconstant_parts(built):
    for name in ("small", "mixed", "us"):
        rep = positivity_report(built(name))
        assert rep.all_nonconstant_positive
        assert rep.all_nonconstant_nonnegative


def test_negative_linear_terms(built):
    rep = positivity_report(built("nineteen"))
    assert rep.residue_count == 380
    assert len(rep.negative_linear) == 60
    assert not rep.all_nonconstant_nonnegative

    rep = positivity_report(built("twentyone"))
    assert negative_linear_fraction(rep) == Fraction(1, 7)


def test_integrality_multipliers():
    cs = new_coin_set([1, 5, 10, 25])
    assert integrality_multiplier(cs) == 7500
    assert integrality_multiplier(cs, factorial=True) == 15000
    # common factor is divided out first
    assert integrality_multiplier(new_coin_set([2, 4, 6])) == 2 * 2 * 6


@pytest.mark.parametrize(
    "name, literal",
    [("small", 0), ("mixed", 0), ("us", 75), ("nineteen", 570), ("twentyone", 693)],
)
def test_integrality_violations(built, name, literal):
    rep = integrality_report(built(name))
    assert len(rep.integrality_violations) == literal
    assert rep.factorial_integrality_violations == ()


def test_integrality_violation_detected_on_synthetic_coefficient():
    cs = new_coin_set([2, 3])
    poly = Polynomial((1, Fraction(1, 7)))
    q = QuasiPolynomial(coins=cs, polys=(poly,) * cs.M, verified_upto=0)
    rep = integrality_report(q)
    assert len(rep.integrality_violations) == cs.M
    assert rep.integrality_violations[0] == (0, 1, Fraction(1, 7))


@pytest.mark.parametrize(
    "name, low, high, half_even, down",
    [
        ("small", Fraction(-7, 48), Fraction(1), "1.1458", "1.1458"),
        ("mixed", Fraction(-77, 180), Fraction(1), "1.4278", "1.4277"),
        ("us", Fraction(519, 5000), Fraction(6, 5), "1.0962", "1.0962"),
        ("eleven", Fraction(-23, 396), Fraction(15, 11), "1.4217", "1.4217"),
        ("nineteen", Fraction(-36761, 5776), Fraction(12807, 1805), "13.4597", "13.4597"),
    ],
)
def test_b_spread(decomposed, name, low, high, half_even, down):
    dec = decomposed(name)
    rep = b_spread_report(dec)
    assert (rep.b_min, rep.b_max, rep.b_spread) == (low, high, high - low)
    assert rep.render(rep.b_spread) == half_even
    assert b_spread_report(dec, rounding="down").render(rep.b_spread) == down


def test_b_spread_bound_and_rounding(decomposed):
    dec = decomposed("small")
    assert b_spread_report(dec, bound=Fraction(1)).within_bound is True
    assert b_spread_report(dec, bound=Fraction(1, 2)).within_bound is False
    assert b_spread_report(dec).within_bound is None
    with pytest.raises(ValueError):
        b_spread_report(dec, rounding="up")


def test_conjecture_report_merges_all_scans(built):
    rep = conjecture_report(built("mixed"), bound=Fraction(3, 2), rounding="down")
    assert rep.negative_constant == (1, 2, 4, 7, 13, 14, 19, 22, 25)
    assert rep.integrality_violations == ()
    assert rep.b_spread == Fraction(257, 180)
    assert rep.within_bound is True
    assert rep.render(rep.b_min) == "-0.4277"


def test_offsets_within_uses_rendered_values(built):
    reports = [conjecture_report(built(n), rounding="down") for n in ("small", "mixed")]
    assert offsets_within(reports, Fraction("-0.4277"), Fraction(1))
    assert not offsets_within(reports, Fraction("-0.42"), Fraction(1))


def test_batch_sweep_is_ordered_and_worker_independent():
    sets = [new_coin_set(c) for c in ([3, 5, 6], [2, 3, 4], [2, 3], [1, 2, 5])]
    serial = batch_sweep(sets, workers=1)
    parallel = batch_sweep(sets, workers=2)
    assert [str(r.coins) for r in serial.reports] == ["3,5,6", "2,3,4", "2,3", "1,2,5"]
    assert serial == parallel
    assert serial.b_min == min(r.b_min for r in serial.reports)
    assert serial.max_spread == max(r.b_spread for r in serial.reports)
    assert serial.reports[0].b_spread == Fraction(257, 180)


def test_batch_sweep_empty():
    summary = batch_sweep([])
    assert summary.reports == ()
    assert summary.b_min is None


def test_distinct_coin_sets_aggregate_under_truncation(built):
    names = ("us", "small", "mixed", "eleven")
    reports = [conjecture_report(built(n), rounding="down") for n in names]
    assert offsets_within(reports, Fraction("-0.4277"), Fraction("1.3636"))
    assert not offsets_within(reports, Fraction("-0.4277"), Fraction("1.3635"))
    summary = batch_sweep([built(n).coins for n in names], rounding="down")
    assert summary.max_spread == Fraction(257, 180)
    assert render_decimal(summary.max_spread, 4, "down") == "1.4277"
    assert summary.reports[0].render(summary.b_max) == "1.3636"
