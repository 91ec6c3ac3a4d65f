from collections.abc import Callable
from dataclasses import asdict, dataclass

import pandas as pd

from preference_domain_toolbox.bijection import profile_to_ssyt, ssyt_to_profile
from preference_domain_toolbox.config import ToolboxConfig
from preference_domain_toolbox.core import Axis
from preference_domain_toolbox.domain_logging import get_logger
from preference_domain_toolbox.enumeration import count_scn, count_spn, enumerate_scn, enumerate_spn
from preference_domain_toolbox.exceptions import InvalidArgumentError
from preference_domain_toolbox.oracle.brute_force import OracleProperty, oracle_profiles
from preference_domain_toolbox.recognition import is_single_crossing_wrt, is_single_peaked_wrt
from preference_domain_toolbox.tableaux import (
    count_ssyt_closed,
    count_ssyt_hook_formula,
    count_ssyt_recurrence,
    enumerate_ssyt,
)

logger = get_logger("verification")

PASS = "PASS"
FAIL = "FAIL"
SKIP = "SKIP"


@dataclass(frozen=True)
class CheckResult:
    name: str
    expected: str
    observed: str
    status: str

    @property
    def passed(self) -> bool:
        return self.status != FAIL


def _compare(name: str, expected, observed) -> CheckResult:
    return CheckResult(name, str(expected), str(observed), PASS if expected == observed else FAIL)


def _skip(name: str, reason: str) -> CheckResult:
    return CheckResult(name, "-", reason, SKIP)


def run_verification(
    n: int, with_oracle: bool = False, config: ToolboxConfig = None, progress: bool = False
) -> list[CheckResult]:
    """
    Cross-checks closed forms, enumerators, the tableau bijection and (optionally) the
    brute-force oracle at size n. Enumerations above the configured limits are skipped.
    Oracle runs above the brute-force ceiling raise ``ResourceBoundError``.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise InvalidArgumentError(f"Verification needs n >= 2, got {n!r}.")
    config = config or ToolboxConfig.from_env()
    m = n - 1
    axis = Axis.identity(n)
    results = [
        _compare(f"ssyt({m}) hook formula = 2^C({m},2)", count_ssyt_closed(m), count_ssyt_hook_formula(m)),
        _compare(f"ssyt({m}) recurrence = 2^C({m},2)", count_ssyt_closed(m), count_ssyt_recurrence(m)),
    ]

    checks: list[tuple[str, int, Callable[[], list[CheckResult]]]] = [
        ("ssyt enumeration", config.ssyt_enumeration_limit + 1, lambda: _tableau_checks(m)),
        ("spn enumeration", config.spn_enumeration_limit, lambda: _spn_checks(n, axis, config)),
        ("scn enumeration", config.scn_enumeration_limit, lambda: _scn_checks(n, axis, config)),
    ]
    for label, limit, run in checks:
        if n > limit:
            results.append(_skip(label, f"n={n} above limit {limit}"))
        else:
            results.extend(run())

    if with_oracle:
        for prop, formula in ((OracleProperty.SPN_CANONICAL, count_spn), (OracleProperty.SCN_CANONICAL, count_scn)):
            observed = sum(1 for _ in oracle_profiles(n, prop, config=config, progress=progress))
            results.append(_compare(f"oracle {prop.value}({n}) = formula", formula(n), observed))

    for result in results:
        logger.info(f"{result.status} {result.name}: expected {result.expected}, observed {result.observed}")
    return results


def _tableau_checks(m: int) -> list[CheckResult]:
    count = 0
    round_trip = True
    for tableau in enumerate_ssyt(m):
        count += 1
        round_trip = round_trip and profile_to_ssyt(ssyt_to_profile(tableau)) == tableau
    return [
        _compare(f"|enumerate_ssyt({m})| = 2^C({m},2)", count_ssyt_closed(m), count),
        _compare(f"tableau -> profile -> tableau, order {m}", True, round_trip),
    ]


def _spn_checks(n: int, axis: Axis, config: ToolboxConfig) -> list[CheckResult]:
    count = 0
    all_single_peaked = True
    crossing = set()
    for profile in enumerate_spn(n, config=config):
        count += 1
        all_single_peaked = all_single_peaked and is_single_peaked_wrt(profile, axis)
        if is_single_crossing_wrt(profile, axis):
            crossing.add(profile.rankings)
    scn = None
    if n <= config.scn_enumeration_limit:
        scn = {profile.rankings for profile in enumerate_scn(n, config=config)}
    results = [
        _compare(f"|enumerate_spn({n})| = count_spn({n})", count_spn(n), count),
        _compare(f"enumerate_spn({n}) single-peaked along 1..{n}", True, all_single_peaked),
    ]
    if scn is not None:
        results.append(_compare(f"spn({n}) filtered by single-crossing = enumerate_scn({n})", len(scn), len(crossing)))
        results.append(_compare(f"spn({n}) filtered set equals scn({n}) set", True, crossing == scn))
    return results


def _scn_checks(n: int, axis: Axis, config: ToolboxConfig) -> list[CheckResult]:
    count = 0
    round_trip = True
    contained = True
    for profile in enumerate_scn(n, config=config):
        count += 1
        contained = contained and is_single_peaked_wrt(profile, axis)
        round_trip = round_trip and ssyt_to_profile(profile_to_ssyt(profile)) == profile
    return [
        _compare(f"|enumerate_scn({n})| = count_scn({n})", count_scn(n), count),
        _compare(f"scn({n}) profiles single-peaked", True, contained),
        _compare(f"profile -> tableau -> profile, n={n}", True, round_trip),
    ]


def verification_frame(results: list[CheckResult]) -> pd.DataFrame:
    return pd.DataFrame([asdict(result) for result in results], columns=["name", "expected", "observed", "status"])
