import pytest

from conftest import EXAMPLE_1
from preference_domain_toolbox.canonical import check_canonical_scn
from preference_domain_toolbox.core import Axis
from preference_domain_toolbox.enumeration import (
    count_narcissistic,
    count_profiles,
    count_scn,
    count_spn,
    enumerate_scn,
    enumerate_spn,
)
from preference_domain_toolbox.exceptions import InvalidArgumentError
from preference_domain_toolbox.recognition import (
    check_single_crossing,
    is_narcissistic,
    is_single_crossing_wrt,
    is_single_peaked_wrt,
)
from preference_domain_toolbox.tableaux import count_ssyt_closed

SPN_COUNTS = {2: 1, 3: 2, 4: 9, 5: 96, 6: 2500, 7: 162000}


@pytest.mark.parametrize("n,expected", SPN_COUNTS.items())
def test_count_spn(n, expected):
    assert count_spn(n) == expected


@pytest.mark.parametrize("n,expected", [(2, 1), (3, 2), (4, 8), (5, 64), (6, 1024), (8, 2**21)])
def test_count_scn(n, expected):
    assert count_scn(n) == expected
    assert count_scn(n) == count_ssyt_closed(n - 1)


@pytest.mark.parametrize("n,expected", [(1, 1), (3, 8), (4, 1296)])
def test_count_narcissistic(n, expected):
    assert count_narcissistic(n) == expected


def test_count_profiles():
    assert count_profiles(3) == 216


@pytest.mark.parametrize("counter", [count_spn, count_scn])
@pytest.mark.parametrize("n", [1, 0, "4"])
def test_counters_reject_small_n(counter, n):
    with pytest.raises(InvalidArgumentError):
        counter(n)


def test_large_counts_are_exact():
    assert count_scn(40) == 2 ** (39 * 38 // 2)
    assert count_spn(30) > 10**100


def test_enumerate_spn_n3_matches_both_profiles():
    assert [p.rankings for p in enumerate_spn(3)] == [
        ((1, 2, 3), (2, 1, 3), (3, 2, 1)),
        ((1, 2, 3), (2, 3, 1), (3, 2, 1)),
    ]


def test_enumerate_spn_n2():
    assert [p.rankings for p in enumerate_spn(2)] == [((1, 2), (2, 1))]


@pytest.mark.parametrize("n", range(2, 7))
def test_enumerate_spn_count_and_shape(n):
    axis = Axis.identity(n)
    profiles = list(enumerate_spn(n))
    assert len(profiles) == count_spn(n)
    assert len({p.rankings for p in profiles}) == len(profiles)
    for profile in profiles:
        assert is_narcissistic(profile)
        assert is_single_peaked_wrt(profile, axis)
        assert profile.order_of(1).ranking == tuple(range(1, n + 1))
        assert profile.order_of(n).ranking == tuple(range(n, 0, -1))


@pytest.mark.slow
def test_enumerate_spn_n7():
    assert sum(1 for _ in enumerate_spn(7)) == 162000


@pytest.mark.parametrize("n", range(2, 7))
def test_enumerate_scn_count_and_shape(n):
    profiles = list(enumerate_scn(n))
    assert len(profiles) == count_scn(n)
    assert len({p.rankings for p in profiles}) == len(profiles)
    assert all(check_canonical_scn(p) for p in profiles)


@pytest.mark.slow
def test_enumerate_scn_n8():
    assert sum(1 for _ in enumerate_scn(8)) == count_scn(8)


def test_enumerate_scn_n4_contains_example_1():
    assert EXAMPLE_1 in {p.rankings for p in enumerate_scn(4)}


@pytest.mark.parametrize("n", range(2, 6))
def test_two_paths_to_scn_agree(n):
    axis = Axis.identity(n)
    filtered = {p.rankings for p in enumerate_spn(n) if is_single_crossing_wrt(p, axis)}
    assert filtered == {p.rankings for p in enumerate_scn(n)}


@pytest.mark.parametrize("n", range(2, 7))
def test_scn_contained_in_spn(n):
    spn = {p.rankings for p in enumerate_spn(n)}
    scn = {p.rankings for p in enumerate_scn(n)}
    assert scn <= spn
    if n >= 4:
        assert scn < spn


def test_spn_minus_scn_contains_modified_example(example_3_modified):
    spn = {p.rankings for p in enumerate_spn(4)}
    scn = {p.rankings for p in enumerate_scn(4)}
    assert example_3_modified.rankings in spn - scn
    witness = check_single_crossing(example_3_modified).witness
    assert witness.alternatives == ((1, 4), (2, 3))
