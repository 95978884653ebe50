import pytest

from chiral_resolve.characters import PowerSeriesZ, closed_form, compare, d_character, euler_inv
from oracles import count_partitions, shifted_product


def test_euler_inverse_small_values():
    assert euler_inv(1, 6).to_list() == [1, 1, 2, 3, 5, 7, 11]
    assert all(c == 0 for c in euler_inv(2, 11).to_list()[1::2])
    assert euler_inv(3, 0).to_list() == [1]
    with pytest.raises(ValueError):
        euler_inv(0, 4)


@pytest.mark.parametrize("step", [1, 2, 3])
def test_euler_inverse_against_partition_enumeration(step):
    assert euler_inv(step, 14).to_list() == [count_partitions(n, lambda p: p % step == 0) for n in range(15)]


def test_d_character_counts_odd_partitions():
    assert d_character(12).to_list() == [count_partitions(n, lambda p: p % 2) for n in range(13)]


FROZEN = {
    ("A", "even", 0): [1, 0, 1, 1, 2, 2, 4, 4, 7, 8, 12, 14, 21],
    ("A", "odd", 0): [1, 1, 1, 2, 3, 4, 6, 8, 11, 15, 20, 26, 35],
    ("Htilde", "even", 1): [0, 1, 0, 1, 0, 2, 0, 3, 0, 5, 0, 7, 0],
    ("W", "even", 0): [1, 0, 1, 0, 1, 0, 2, 0, 3, 0, 4, 0, 6],
}


@pytest.mark.parametrize("key", sorted(FROZEN))
def test_frozen_expansions(key):
    space, sector, m = key
    assert closed_form(space, sector, m, order=12).to_list() == FROZEN[key]


@pytest.mark.parametrize("m", range(4))
def test_closed_forms_against_partition_oracle(m):
    assert closed_form("A", "even", m, order=14).to_list() == shifted_product(m * m, 2 * m + 1, 1, 14)
    assert closed_form("A", "odd", m, order=14).to_list() == shifted_product(m * (m + 1), 2 * m + 2, 1, 14)
    assert closed_form("W", "even", m, order=14).to_list() == shifted_product(m * m, 4 * m + 4, 2, 14)
    assert closed_form("W", "odd", m, order=14).to_list() == shifted_product(m * (m + 1), 2 * m + 2, 2, 14)


@pytest.mark.parametrize("m", range(4))
def test_series_identities(m):
    n = 16
    ht = lambda k: closed_form("Htilde", "even", k, order=n)
    # ch A = ch D (ch H~(2m) - ch H~(2m+2)) and ch W = ch H~(2m) - ch H~(2m+4)
    assert closed_form("A", "even", m, order=n) == d_character(n) * (ht(m) - ht(m + 1))
    assert closed_form("W", "even", m, order=n) == ht(m) - ht(m + 2)
    # the odd A space is D times W(2m+1, 0)
    assert closed_form("A", "odd", m, order=n) == d_character(n) * closed_form("W", "odd", m, order=n)
    for p in range(3):
        assert closed_form("Hcoh", "even", m, p, order=n) == closed_form("W", "even", m + p, order=n)
    assert closed_form("Hcoh", "odd", m, 0, order=n) == closed_form("W", "odd", m, order=n)
    assert closed_form("Hcoh", "odd", m, 1, order=n) == PowerSeriesZ.zero(n)


def test_unknown_selector():
    with pytest.raises(ValueError):
        closed_form("B", "even", 0)
    with pytest.raises(ValueError):
        closed_form("A", "sideways", 0)


def test_series_arithmetic():
    a = PowerSeriesZ((1, 2, 3))
    assert (a * 2).to_list() == [2, 4, 6]
    assert a.shift(1).to_list() == [0, 1, 2]
    assert a.one_minus_shift(2).to_list() == [1, 2, 2]
    assert a.to_csv() == "1,2,3"
    with pytest.raises(ValueError):
        a + PowerSeriesZ((1,))
    with pytest.raises(IndexError):
        a[3]


def test_compare_reports():
    s = closed_form("A", "even", 0, order=10)
    assert compare(s, s.to_list()).passed
    broken = s.to_list()
    broken[7] -= 1
    rep = compare(s, broken)
    assert not rep.passed and rep.first_mismatch["key"] == {"energy": 7}
    assert compare(s, {}).passed
