from collections.abc import Iterator
from itertools import combinations, product
from math import comb, factorial, prod

from preference_domain_toolbox.bijection import ssyt_to_profile
from preference_domain_toolbox.config import ToolboxConfig
from preference_domain_toolbox.core import PreferenceOrder, PreferenceProfile
from preference_domain_toolbox.domain_logging import get_logger
from preference_domain_toolbox.exceptions import InvalidArgumentError
from preference_domain_toolbox.tableaux import BigCount, count_ssyt_closed, enumerate_ssyt

logger = get_logger("enumeration")


def _check_size(n, minimum: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < minimum:
        raise InvalidArgumentError(f"n must be an integer >= {minimum}, got {n!r}.")


def count_spn(n: int) -> BigCount:
    """Number of SPN profiles up to renaming: product of C(n-1, i-1) for 2 <= i <= n-1."""
    _check_size(n, 2)
    return prod(comb(n - 1, i - 1) for i in range(2, n))


def count_scn(n: int) -> BigCount:
    """Number of SCN profiles up to renaming: 2^C(n-1, 2)."""
    _check_size(n, 2)
    return count_ssyt_closed(n - 1)


def count_narcissistic(n: int) -> BigCount:
    _check_size(n, 1)
    return factorial(n - 1) ** n


def count_profiles(n: int) -> BigCount:
    """All square profiles over n alternatives, (n!)^n."""
    _check_size(n, 1)
    return factorial(n) ** n


def _spn_voter_orders(n: int, voter: int) -> list[PreferenceOrder]:
    """
    Orders of ``voter`` single-peaked along 1..n with peak ``voter``: alternatives voter-1, ..., 1
    take an (voter-1)-subset of positions 2..n in that order, voter+1, ..., n fill the rest.
    """
    orders = []
    for places in combinations(range(2, n + 1), voter - 1):
        ranking = [0] * (n + 1)
        ranking[1] = voter
        for alternative, place in zip(range(voter - 1, 0, -1), places):
            ranking[place] = alternative
        free_places = (place for place in range(2, n + 1) if not ranking[place])
        for alternative, place in zip(range(voter + 1, n + 1), free_places):
            ranking[place] = alternative
        orders.append(PreferenceOrder(tuple(ranking[1:])))
    return orders


def enumerate_spn(n: int, config: ToolboxConfig = None) -> Iterator[PreferenceProfile]:
    """
    Streams every canonical SPN profile of size n once: voter 1 holds 1 > ... > n, voter n its
    reverse, and the middle voters range over their single-peaked orders with voter 2 varying
    slowest.
    """
    _check_size(n, 2)
    config = config or ToolboxConfig.from_env()
    first = PreferenceOrder(tuple(range(1, n + 1)))
    last = PreferenceOrder(tuple(range(n, 0, -1)))
    choices = [_spn_voter_orders(n, voter) for voter in range(2, n)]
    produced = 0
    for middle in product(*choices):
        produced += 1
        if produced % config.progress_every == 0:
            logger.progress(f"enumerate_spn({n}): {produced} profiles")
        yield PreferenceProfile((first, *middle, last))
    logger.debug(f"enumerate_spn({n}) produced {produced} profiles")


def enumerate_scn(n: int, config: ToolboxConfig = None) -> Iterator[PreferenceProfile]:
    """Streams every canonical SCN profile of size n once, as the images of the order n-1 tableaux."""
    _check_size(n, 2)
    config = config or ToolboxConfig.from_env()
    produced = 0
    for tableau in enumerate_ssyt(n - 1):
        produced += 1
        if produced % config.progress_every == 0:
            logger.progress(f"enumerate_scn({n}): {produced} profiles")
        yield ssyt_to_profile(tableau)
    logger.debug(f"enumerate_scn({n}) produced {produced} profiles")
