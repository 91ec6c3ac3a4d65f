from collections.abc import Iterator
from itertools import permutations
from typing import Optional

from preference_domain_toolbox.config import ToolboxConfig
from preference_domain_toolbox.core import Axis, PreferenceProfile
from preference_domain_toolbox.core.axis import check_same_size
from preference_domain_toolbox.domain_logging import get_logger
from preference_domain_toolbox.exceptions import InternalInvariantError
from preference_domain_toolbox.recognition.narcissistic import is_narcissistic
from preference_domain_toolbox.recognition.witness import Family, RecognitionResult
from preference_domain_toolbox.recognition.witness_search import search_witness

logger = get_logger("recognition")


def is_single_peaked_wrt(profile: PreferenceProfile, axis: Axis) -> bool:
    """
    For every voter and alternatives a, b: if a ▷ b ▷ peak or peak ▷ b ▷ a, then b is
    preferred to a.
    """
    check_same_size(profile.n, axis)
    sequence = axis.sequence
    size = len(sequence)
    for order in profile:
        rank = order.positions
        peak_place = axis.index_of(order.peak)
        for near in range(size):
            if near == peak_place:
                continue
            step = 1 if near > peak_place else -1
            stop = size if step == 1 else -1
            for far in range(near + step, stop, step):
                if rank[sequence[near]] > rank[sequence[far]]:
                    return False
    return True


def is_single_peaked_wrt_by_intervals(profile: PreferenceProfile, axis: Axis) -> bool:
    """Every top set top(order, {j}), i.e. every prefix of a ranking, is an interval of the axis."""
    check_same_size(profile.n, axis)
    return all(axis.is_interval(order.ranking[:size]) for order in profile for size in range(1, profile.n + 1))


def exhaustive_single_peaked_axes(profile: PreferenceProfile) -> Iterator[Axis]:
    """All axes the profile is single-peaked on, one per reversal class (first < last)."""
    for sequence in permutations(range(1, profile.n + 1)):
        if profile.n > 1 and sequence[0] > sequence[-1]:
            continue
        axis = Axis(sequence)
        if is_single_peaked_wrt(profile, axis):
            yield axis


def build_single_peaked_axis(profile: PreferenceProfile) -> Optional[Axis]:
    """
    Builds an axis from both ends inwards. On the alternatives not placed yet, every voter's
    least preferred one must sit at an end, and each end block must be increasingly preferred
    towards the middle by every voter whose peak is not placed yet. Returns None when no axis
    exists.
    """
    ranks = [order.positions for order in profile]
    peaks = [order.peak for order in profile]

    def inward_ok(block: list[int], alternative: int, remaining: frozenset[int]) -> bool:
        if not block:
            return True
        return all(rank[alternative] < rank[block[-1]] for rank, peak in zip(ranks, peaks) if peak in remaining)

    def extend(left: list[int], right: list[int], remaining: frozenset[int]) -> Optional[Axis]:
        if len(remaining) <= 1:
            axis = Axis(tuple(left + sorted(remaining) + right[::-1]))
            return axis if is_single_peaked_wrt(profile, axis) else None
        worst = {max(remaining, key=rank.__getitem__) for rank in ranks}
        if len(worst) > 2:
            return None
        for alternative in sorted(worst):
            rest = remaining - {alternative}
            axis = None
            if inward_ok(left, alternative, remaining):
                axis = extend([*left, alternative], right, rest)
            if axis is None and inward_ok(right, alternative, remaining):
                axis = extend(left, [*right, alternative], rest)
            if axis is not None:
                return axis
        return None

    return extend([], [], frozenset(range(1, profile.n + 1)))


def check_single_peaked(profile: PreferenceProfile, config: ToolboxConfig = None) -> RecognitionResult:
    """
    Decides single-peakedness, returning an axis on success and a worst/alpha witness on failure.

    Narcissistic profiles only admit the order of one of two mutually reversed voters (or its
    reverse) as axis, so only those candidates are tried. Other profiles fall back to an
    exhaustive axis search up to ``config.exhaustive_search_limit``; above it the witness search
    runs first and the axis is then built from both ends.
    """
    config = config or ToolboxConfig.from_env()
    n = profile.n
    if n <= 2:
        return RecognitionResult(True, axis=Axis.identity(n))

    if is_narcissistic(profile):
        for a, b in profile.reverse_pairs():
            axis = Axis(min(profile.order_of(a).ranking, profile.order_of(b).ranking))
            if is_single_peaked_wrt(profile, axis):
                logger.debug(f"Narcissistic profile single-peaked along voters {a},{b}: {axis}")
                return RecognitionResult(True, axis=axis)
        logger.debug("Narcissistic profile without a usable reversed pair: not single-peaked")
        return RecognitionResult(False, witness=search_witness(profile, Family.SINGLE_PEAKED))

    if n <= config.exhaustive_search_limit:
        axis = next(exhaustive_single_peaked_axes(profile), None)
        if axis is not None:
            return RecognitionResult(True, axis=axis)
        return RecognitionResult(False, witness=search_witness(profile, Family.SINGLE_PEAKED))

    witness = search_witness(profile, Family.SINGLE_PEAKED)
    if witness is not None:
        return RecognitionResult(False, witness=witness)
    axis = build_single_peaked_axis(profile)
    if axis is None:
        raise InternalInvariantError(f"No worst or alpha subprofile, yet no axis was built for {profile}")
    return RecognitionResult(True, axis=axis)
