"""
Bijection between canonical single-crossing narcissistic profiles with n voters and staircase
SSYTs of order n - 1.

Column c of the tableau carries the order of voter n + 1 - c: its entry in row j is
n + 1 - pos(voter n + 1 - c, j). Voter 1 and alternative n carry no tableau data.
"""

from collections.abc import Sequence
from functools import lru_cache

from preference_domain_toolbox.canonical import check_canonical_scn
from preference_domain_toolbox.core import PreferenceOrder, PreferenceProfile
from preference_domain_toolbox.exceptions import (
    InternalInvariantError,
    InvalidArgumentError,
    PreconditionViolatedError,
)
from preference_domain_toolbox.tableaux import Ssyt


def profile_to_ssyt(profile: PreferenceProfile) -> Ssyt:
    """T(i, j) = n + 1 - pos(order of voter n + 1 - j, i)."""
    n = profile.n
    if n < 2:
        raise PreconditionViolatedError("The tableau map needs at least two voters.")
    if not check_canonical_scn(profile):
        raise PreconditionViolatedError("Only canonical single-crossing narcissistic profiles map to tableaux.")

    rows = tuple(
        tuple(n + 1 - profile.order_of(n + 1 - j).pos(i) for j in range(1, n - i + 1)) for i in range(1, n)
    )
    try:
        return Ssyt(rows)
    except InvalidArgumentError as error:
        raise InternalInvariantError(f"Canonical SCN profile mapped to a non-tableau: {error}") from error


def ssyt_to_profile(tableau: Ssyt | Sequence[Sequence[int]]) -> PreferenceProfile:
    """
    Inverse map: voter i places each alternative j < i at position n + 1 - T(j, n + 1 - i) and
    fills the remaining positions with i, i + 1, ..., n in increasing order.

    :raises InvalidArgumentError: when ``tableau`` is not a staircase SSYT.
    """
    if not isinstance(tableau, Ssyt):
        tableau = Ssyt.from_rows(tableau)
    n = tableau.order + 1
    orders = [PreferenceOrder(tuple(range(1, n + 1)))]
    for voter in range(2, n):
        column = tuple(row[n - voter] for row in tableau.rows[: voter - 1])
        orders.append(_voter_order(n, voter, column))
    orders.append(PreferenceOrder(tuple(range(n, 0, -1))))
    return PreferenceProfile(tuple(orders))


@lru_cache(maxsize=65536)
def _voter_order(n: int, voter: int, column: tuple[int, ...]) -> PreferenceOrder:
    ranking = [0] * (n + 1)
    for lower_alternative, entry in enumerate(column, start=1):
        place = n + 1 - entry
        if ranking[place]:
            raise InternalInvariantError(f"Position {place} assigned twice in the order of voter {voter}.")
        ranking[place] = lower_alternative

    free_places = (place for place in range(1, n + 1) if not ranking[place])
    for upper_alternative, place in zip(range(voter, n + 1), free_places):
        ranking[place] = upper_alternative
    if not all(ranking[1:]):
        raise InternalInvariantError(f"Order of voter {voter} left positions unassigned: {ranking[1:]}")

    order = PreferenceOrder(tuple(ranking[1:]))
    below = [order.pos(a) for a in range(voter, 0, -1)]
    above = [order.pos(a) for a in range(voter, n + 1)]
    if below != sorted(below) or above != sorted(above):
        raise InternalInvariantError(f"Order {order} of voter {voter} is not single-peaked along 1..{n}.")
    return order
