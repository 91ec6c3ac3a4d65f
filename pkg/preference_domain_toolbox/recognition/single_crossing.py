from collections.abc import Iterator
from itertools import combinations, permutations

from preference_domain_toolbox.core import Axis, PreferenceProfile, diff_pairs
from preference_domain_toolbox.core.axis import check_same_size
from preference_domain_toolbox.domain_logging import get_logger
from preference_domain_toolbox.recognition.witness import Family, RecognitionResult
from preference_domain_toolbox.recognition.witness_search import search_witness

logger = get_logger("recognition")


def _sign_rows(profile: PreferenceProfile, voter_order: Axis) -> Iterator[list[bool]]:
    """For each alternative pair (x, y), x < y: along the voter order, whether x is preferred to y."""
    positions = [profile.order_of(v).positions for v in voter_order]
    for x, y in combinations(range(1, profile.n + 1), 2):
        yield [p[x] < p[y] for p in positions]


def is_single_crossing_wrt(profile: PreferenceProfile, voter_order: Axis) -> bool:
    """For every pair {a, b} and voters i ▷ j ▷ k: if i and k both prefer a to b, so does j."""
    check_same_size(profile.n, voter_order)
    for signs in _sign_rows(profile, voter_order):
        for i, j, k in combinations(range(len(signs)), 3):
            if signs[i] == signs[k] != signs[j]:
                return False
    return True


def is_single_crossing_wrt_by_intervals(profile: PreferenceProfile, voter_order: Axis) -> bool:
    """For every pair, the voters on each side of it form an interval of the voter order."""
    check_same_size(profile.n, voter_order)
    for signs in _sign_rows(profile, voter_order):
        changes = sum(1 for left, right in zip(signs, signs[1:]) if left != right)
        if changes > 1:
            return False
    return True


def is_single_crossing_wrt_by_containment(profile: PreferenceProfile, voter_order: Axis) -> bool:
    """diff-pairs from the first voter grow (by inclusion) along the voter order."""
    check_same_size(profile.n, voter_order)
    first = profile.order_of(voter_order.sequence[0])
    previous = frozenset()
    for voter in voter_order.sequence[1:]:
        current = diff_pairs(first, profile.order_of(voter))
        if not previous <= current:
            return False
        previous = current
    return True


def exhaustive_single_crossing_orders(profile: PreferenceProfile) -> Iterator[Axis]:
    """All voter orders the profile is single-crossing on, one per reversal class (first < last)."""
    for sequence in permutations(range(1, profile.n + 1)):
        if profile.n > 1 and sequence[0] > sequence[-1]:
            continue
        voter_order = Axis(sequence)
        if is_single_crossing_wrt(profile, voter_order):
            yield voter_order


def check_single_crossing(profile: PreferenceProfile) -> RecognitionResult:
    """
    Decides single-crossingness. Each voter is tried as the first one; the others are sorted by
    the size of their diff-pairs with it (ties by voter id) and the order is verified. When no
    candidate order works, a delta or gamma witness is searched.
    """
    n = profile.n
    if n <= 2:
        return RecognitionResult(True, axis=Axis.identity(n))

    for first in profile.voters:
        first_order = profile.order_of(first)
        rest = sorted(
            (v for v in profile.voters if v != first),
            key=lambda v: (len(diff_pairs(first_order, profile.order_of(v))), v),
        )
        voter_order = Axis((first, *rest))
        if is_single_crossing_wrt(profile, voter_order):
            logger.debug(f"Single-crossing voter order found from voter {first}: {voter_order}")
            return RecognitionResult(True, axis=voter_order)

    return RecognitionResult(False, witness=search_witness(profile, Family.SINGLE_CROSSING))
