from collections.abc import Iterator
from enum import Enum
from itertools import permutations, product

from tqdm import tqdm

from preference_domain_toolbox.config import ToolboxConfig
from preference_domain_toolbox.core import Axis, PreferenceProfile
from preference_domain_toolbox.domain_logging import get_logger
from preference_domain_toolbox.exceptions import InvalidArgumentError, ResourceBoundError
from preference_domain_toolbox.recognition import is_single_crossing_wrt, is_single_peaked_wrt
from preference_domain_toolbox.tableaux import BigCount

logger = get_logger("oracle")


class OracleProperty(Enum):
    SPN_CANONICAL = "spn"
    SCN_CANONICAL = "scn"


def _check_ceiling(n: int, config: ToolboxConfig) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidArgumentError(f"n must be a positive integer, got {n!r}.")
    if n > config.brute_force_ceiling:
        raise ResourceBoundError(
            f"Brute force over narcissistic profiles is limited to n <= {config.brute_force_ceiling} (got n={n})."
        )


def _raw_narcissistic(n: int, progress: bool = False) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Rankings only, voter i first ranking i and the others in every order."""
    choices = []
    for voter in range(1, n + 1):
        others = [a for a in range(1, n + 1) if a != voter]
        choices.append([(voter, *rest) for rest in permutations(others)])
    iterator = product(*choices)
    if progress:
        total = 1
        for options in choices:
            total *= len(options)
        iterator = tqdm(iterator, total=total, desc=f"narcissistic n={n}", unit="profile")
    return iterator


def brute_force_narcissistic(
    n: int, config: ToolboxConfig = None, progress: bool = False
) -> Iterator[PreferenceProfile]:
    """Every narcissistic profile of size n, ((n-1)!)^n of them."""
    config = config or ToolboxConfig.from_env()
    _check_ceiling(n, config)
    for rankings in _raw_narcissistic(n, progress=progress):
        yield PreferenceProfile.from_rankings(rankings)


def oracle_profiles(
    n: int, prop: OracleProperty, config: ToolboxConfig = None, progress: bool = False
) -> Iterator[PreferenceProfile]:
    """
    Narcissistic profiles with voter 1 on 1 > ... > n and voter n on the reverse that are
    single-peaked along 1..n, and for SCN also single-crossing along voters 1..n. Only the
    definitional checks are used.
    """
    config = config or ToolboxConfig.from_env()
    prop = OracleProperty(prop)
    _check_ceiling(n, config)
    identity = tuple(range(1, n + 1))
    reverse = identity[::-1]
    axis = Axis(identity)
    for rankings in _raw_narcissistic(n, progress=progress):
        if rankings[0] != identity or rankings[-1] != reverse:
            continue
        profile = PreferenceProfile.from_rankings(rankings)
        if not is_single_peaked_wrt(profile, axis):
            continue
        if prop is OracleProperty.SCN_CANONICAL and not is_single_crossing_wrt(profile, axis):
            continue
        yield profile


def oracle_count(n: int, prop: OracleProperty, config: ToolboxConfig = None, progress: bool = False) -> BigCount:
    count = sum(1 for _ in oracle_profiles(n, prop, config=config, progress=progress))
    logger.info(f"Oracle {OracleProperty(prop).value} at n={n}: {count}")
    return count
