import pytest

from preference_domain_toolbox.config import ToolboxConfig
from preference_domain_toolbox.enumeration import count_narcissistic, count_scn, count_spn, enumerate_scn, enumerate_spn
from preference_domain_toolbox.exceptions import InvalidArgumentError, ResourceBoundError
from preference_domain_toolbox.oracle import (
    CheckResult,
    OracleProperty,
    brute_force_narcissistic,
    oracle_count,
    oracle_profiles,
    run_verification,
    verification_frame,
)
from preference_domain_toolbox.recognition import is_narcissistic


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 1), (3, 8), (4, 1296)])
def test_brute_force_cardinality(n, expected):
    profiles = list(brute_force_narcissistic(n))
    assert len(profiles) == expected == count_narcissistic(n)
    assert all(is_narcissistic(p) for p in profiles)
    assert len({p.rankings for p in profiles}) == expected


def test_brute_force_ceiling():
    with pytest.raises(ResourceBoundError):
        next(brute_force_narcissistic(6))
    with pytest.raises(ResourceBoundError):
        next(brute_force_narcissistic(4, config=ToolboxConfig(brute_force_ceiling=3)))


def test_brute_force_rejects_n():
    with pytest.raises(InvalidArgumentError):
        next(brute_force_narcissistic(0))


@pytest.mark.parametrize(
    "n,prop,expected",
    [
        (4, OracleProperty.SPN_CANONICAL, 9),
        (4, OracleProperty.SCN_CANONICAL, 8),
        (3, OracleProperty.SPN_CANONICAL, 2),
        (2, OracleProperty.SCN_CANONICAL, 1),
    ],
)
def test_oracle_count(n, prop, expected):
    assert oracle_count(n, prop) == expected


def test_oracle_accepts_property_value():
    assert oracle_count(3, "scn") == 2


@pytest.mark.parametrize("n", range(2, 5))
def test_oracle_matches_formulas(n):
    assert oracle_count(n, OracleProperty.SPN_CANONICAL) == count_spn(n)
    assert oracle_count(n, OracleProperty.SCN_CANONICAL) == count_scn(n)


@pytest.mark.parametrize("n", range(2, 5))
def test_oracle_sets_match_enumerations(n):
    assert {p.rankings for p in oracle_profiles(n, OracleProperty.SCN_CANONICAL)} == {
        p.rankings for p in enumerate_scn(n)
    }
    assert {p.rankings for p in oracle_profiles(n, OracleProperty.SPN_CANONICAL)} == {
        p.rankings for p in enumerate_spn(n)
    }


@pytest.mark.slow
def test_oracle_n5():
    assert oracle_count(5, OracleProperty.SPN_CANONICAL) == count_spn(5)
    assert {p.rankings for p in oracle_profiles(5, OracleProperty.SCN_CANONICAL)} == {
        p.rankings for p in enumerate_scn(5)
    }


def test_run_verification_passes():
    results = run_verification(4, with_oracle=True)
    assert results
    assert all(isinstance(result, CheckResult) for result in results)
    assert all(result.status == "PASS" for result in results)


def test_run_verification_skips_above_limits():
    config = ToolboxConfig(spn_enumeration_limit=3, scn_enumeration_limit=3, ssyt_enumeration_limit=2)
    results = run_verification(4, config=config)
    assert [r.status for r in results].count("SKIP") == 3
    assert all(r.passed for r in results)


def test_run_verification_oracle_above_ceiling():
    with pytest.raises(ResourceBoundError):
        run_verification(4, with_oracle=True, config=ToolboxConfig(brute_force_ceiling=3))


def test_run_verification_rejects_n():
    with pytest.raises(InvalidArgumentError):
        run_verification(1)


def test_verification_frame():
    frame = verification_frame(run_verification(3))
    assert list(frame.columns) == ["name", "expected", "observed", "status"]
    assert set(frame["status"]) == {"PASS"}
