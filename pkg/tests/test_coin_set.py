import pytest

from models.coin_set import (
    coin_set_from_text,
    new_coin_set,
    pair_gcds,
    parse_coin_list,
    reduced,
)
from models.errors import EmptyCoinSet, NonPositiveDenomination


@pytest.mark.parametrize(
    "coins, d, M, M_prime",
    [
        ([1, 5, 10, 25], 1, 50, 5),
        ([2, 3, 4], 1, 12, 2),
        ([3, 5, 6], 1, 30, 3),
        ([1, 4, 6, 11], 1, 132, 2),
        ([1, 19, 19, 20], 1, 380, 19),
        ([6, 10, 15], 1, 30, 30),
        ([2, 4, 6], 2, 6, 1),
        ([7], 7, 1, 1),
    ],
)
def test_derived_constants(coins, d, M, M_prime):
    cs = new_coin_set(coins)
    assert (cs.d, cs.M, cs.M_prime) == (d, M, M_prime)


def test_denominations_sorted_and_repeats_kept():
    cs = new_coin_set([20, 19, 1, 19])
    assert cs.denoms == (1, 19, 19, 20)
    assert cs.L == 4
    assert str(cs) == "1,19,19,20"


def test_reduced_set():
    cs = new_coin_set([2, 4, 6])
    assert cs.reduced_denoms == (1, 2, 3)
    assert cs.reduced_product == 6
    assert not cs.is_coprime
    base = reduced(cs)
    assert base.denoms == (1, 2, 3) and base.d == 1
    coprime = new_coin_set([3, 5])
    assert reduced(coprime) is coprime


@pytest.mark.parametrize("bad", [[0, 1], [1, -5], [1, 2.5], [True, 2]])
def test_rejects_non_positive_or_non_integer(bad):
    with pytest.raises(NonPositiveDenomination):
        new_coin_set(bad)


def test_rejects_empty():
    with pytest.raises(EmptyCoinSet):
        new_coin_set([])
    with pytest.raises(EmptyCoinSet):
        parse_coin_list("  ")


def test_parse_coin_list():
    assert parse_coin_list("1, 5,10 ,25") == [1, 5, 10, 25]
    with pytest.raises(NonPositiveDenomination) as exc:
        parse_coin_list("1,five")
    assert exc.value.index == 1
    with pytest.raises(NonPositiveDenomination):
        coin_set_from_text("1,0")


def test_pair_gcds_skips_unit_coin_and_repeats():
    assert pair_gcds((1, 4, 6, 11)) == [(4, 6, 2), (4, 11, 1), (6, 11, 1)]
    assert pair_gcds((1, 19, 19, 20)) == [(19, 19, 19), (19, 20, 1)]
    assert pair_gcds((1,)) == []
