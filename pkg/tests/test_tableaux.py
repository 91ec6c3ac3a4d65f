from math import comb

import pytest

from conftest import SSYT_ORDER_3
from preference_domain_toolbox.documents import format_tableau
from preference_domain_toolbox.exceptions import InvalidArgumentError
from preference_domain_toolbox.tableaux import (
    Ssyt,
    count_ssyt_closed,
    count_ssyt_hook_formula,
    count_ssyt_recurrence,
    enumerate_ssyt,
    first_row_hook_ratio,
    hook_lengths_by_counting,
    hook_table,
    validate_ssyt,
)


@pytest.mark.parametrize(
    "rows,expected",
    [
        ([[1, 1, 1], [2, 2], [3]], True),
        ([[1, 2, 3], [2, 3], [3]], True),
        ([[1, 1], [1]], False),
        ([[1, 1], [2]], True),
        ([[1, 2, 1], [2, 3], [3]], False),
        ([[1, 1, 1], [2, 2]], False),
        ([[1, 1, 4], [2, 2], [3]], False),
        ([[0]], False),
        ([], False),
        ([[1, 1], [2, 2]], False),
    ],
)
def test_validate_ssyt(rows, expected):
    assert validate_ssyt(rows) is expected


def test_ssyt_rejects_invalid_rows():
    with pytest.raises(InvalidArgumentError):
        Ssyt.from_rows([[1, 1], [1]])


def test_ssyt_entry_and_first_column():
    tableau = Ssyt.from_rows([[1, 1, 1], [2, 3], [3]])
    assert tableau.order == 3
    assert tableau.entry(2, 2) == 3
    assert tableau.first_column == (1, 2, 3)
    with pytest.raises(InvalidArgumentError):
        tableau.entry(3, 2)


def test_hook_table_order_3():
    table = hook_table(3)
    assert table.lengths == ((5, 3, 1), (3, 1), (1,))
    assert table.contents == ((3, 4, 5), (2, 3), (1,))


def test_hook_table_order_1():
    table = hook_table(1)
    assert table.lengths == ((1,),)
    assert table.contents == ((1,),)


@pytest.mark.parametrize("m", [0, -2])
def test_hook_table_rejects_order(m):
    with pytest.raises(InvalidArgumentError):
        hook_table(m)


@pytest.mark.parametrize("m", range(1, 12))
def test_hook_lengths_by_counting_match_closed_form(m):
    table = hook_table(m)
    assert hook_lengths_by_counting(m) == table.lengths
    assert all(length % 2 == 1 for _, _, length, _ in table.cells())
    assert all(1 <= content <= 2 * m - 1 for _, _, _, content in table.cells())


@pytest.mark.parametrize("m,expected", [(1, 1), (2, 2), (3, 8), (5, 1024), (6, 32768)])
def test_counts(m, expected):
    assert count_ssyt_hook_formula(m) == expected
    assert count_ssyt_closed(m) == expected


@pytest.mark.parametrize("m", range(1, 21))
def test_hook_formula_equals_closed_form(m):
    assert count_ssyt_hook_formula(m) == count_ssyt_closed(m) == 2 ** comb(m, 2)
    assert count_ssyt_recurrence(m) == count_ssyt_closed(m)
    assert count_ssyt_closed(m + 1) == 2**m * count_ssyt_closed(m)
    assert first_row_hook_ratio(m) == 2 ** (m - 1)


def test_enumerate_order_3_matches_golden_set():
    tableaux = list(enumerate_ssyt(3))
    assert [t.as_lists() for t in tableaux] == SSYT_ORDER_3
    assert format_tableau(tableaux[0]) == "3\n1 1 1\n2 2\n3\n"


def test_enumerate_order_1():
    assert [t.as_lists() for t in enumerate_ssyt(1)] == [[[1]]]


@pytest.mark.parametrize("m", range(1, 7))
def test_enumeration_count_and_validity(m):
    tableaux = list(enumerate_ssyt(m))
    assert len(tableaux) == count_ssyt_closed(m)
    assert len(set(tableaux)) == len(tableaux)
    assert all(validate_ssyt(t.rows) for t in tableaux)
    assert all(t.first_column == tuple(range(1, m + 1)) for t in tableaux)
    flattened = [tuple(v for row in t.rows for v in row) for t in tableaux]
    assert flattened == sorted(flattened)


@pytest.mark.slow
def test_enumeration_order_7():
    assert sum(1 for _ in enumerate_ssyt(7)) == count_ssyt_closed(7)


def test_enumerate_rejects_order():
    with pytest.raises(InvalidArgumentError):
        next(enumerate_ssyt(0))
