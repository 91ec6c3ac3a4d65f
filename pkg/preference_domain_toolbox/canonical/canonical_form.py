from math import comb

from preference_domain_toolbox.canonical.relabeling import Relabeling
from preference_domain_toolbox.config import ToolboxConfig
from preference_domain_toolbox.core import Axis, PreferenceProfile, diff_pairs
from preference_domain_toolbox.domain_logging import get_logger
from preference_domain_toolbox.exceptions import PreconditionViolatedError
from preference_domain_toolbox.recognition import (
    check_single_peaked,
    is_narcissistic,
    is_single_crossing_wrt,
    is_single_peaked_wrt,
)

logger = get_logger("canonical")


def find_reverse_pair(profile: PreferenceProfile) -> tuple[int, int]:
    """
    First voter pair (a, b), a < b, whose diff-pairs cover all C(n, 2) pairs, i.e. whose orders
    are mutual reverses. In an SPN profile these are the two voters ranking each other last.

    :raises PreconditionViolatedError: when no such pair exists.
    """
    n = profile.n
    full = comb(n, 2)
    for a in range(1, n):
        for b in range(a + 1, n + 1):
            if len(diff_pairs(profile.order_of(a), profile.order_of(b))) == full:
                return a, b
    raise PreconditionViolatedError("No two voters hold mutually reversed orders: the profile is not SPN.")


def canonicalize(profile: PreferenceProfile, config: ToolboxConfig = None) -> tuple[PreferenceProfile, Relabeling]:
    """
    Relabels an SPN profile so that voter 1 holds 1 > 2 > ... > n and voter n its reverse; the
    single-peaked axis then reads 1 ▷ 2 ▷ ... ▷ n.

    Of the two mutually reversed voters, the one with the lexicographically smaller order
    becomes voter 1. The other choice gives the mirror-image form, ``Relabeling.mirror``.

    :return: the canonical profile and the relabeling sigma with canonical = sigma(profile).
    :raises PreconditionViolatedError: when the profile is not single-peaked narcissistic.
    """
    if not is_narcissistic(profile):
        raise PreconditionViolatedError("Only narcissistic profiles can be canonicalized.")
    if profile.n == 1:
        return profile, Relabeling.identity(1)
    if not check_single_peaked(profile, config=config).holds:
        raise PreconditionViolatedError("Only single-peaked narcissistic profiles can be canonicalized.")

    a, b = find_reverse_pair(profile)
    source = min(profile.order_of(a).ranking, profile.order_of(b).ranking)
    sigma = Relabeling.sending_ranking_to_identity(source)
    canonical = sigma.apply(profile)
    logger.debug(f"Reverse pair ({a},{b}), relabeling {sigma}")
    if not is_single_peaked_wrt(canonical, Axis.identity(canonical.n)):
        raise PreconditionViolatedError("Relabeled profile is not single-peaked along 1..n: the input is not SPN.")
    return canonical, sigma


def check_canonical_scn(profile: PreferenceProfile) -> bool:
    """
    True iff the profile is in canonical single-crossing narcissistic form:

    i) every voter ranks herself first;
    ii) voter 1 ranks 1 > 2 > ... > n;
    iii) voter n ranks n > n-1 > ... > 1;
    iv) single-peaked along 1 ▷ 2 ▷ ... ▷ n;
    v) single-crossing along voters 1 ▷ 2 ▷ ... ▷ n, and for each alternative a < n its
       position is non-decreasing along voters a+1, ..., n.
    """
    n = profile.n
    identity = tuple(range(1, n + 1))
    if not is_narcissistic(profile):
        return False
    if profile.order_of(1).ranking != identity or profile.order_of(n).ranking != identity[::-1]:
        return False
    axis = Axis.identity(n)
    if not is_single_peaked_wrt(profile, axis) or not is_single_crossing_wrt(profile, axis):
        return False
    for a in range(1, n):
        placements = [profile.order_of(v).pos(a) for v in range(a + 1, n + 1)]
        if any(earlier > later for earlier, later in zip(placements, placements[1:])):
            return False
    return True
