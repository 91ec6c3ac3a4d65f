from itertools import combinations, permutations
from typing import Optional

from preference_domain_toolbox.config import ToolboxConfig
from preference_domain_toolbox.core import PreferenceProfile
from preference_domain_toolbox.domain_logging import get_logger
from preference_domain_toolbox.exceptions import InvalidArgumentError, ResourceBoundError
from preference_domain_toolbox.recognition.witness import FAMILY_KINDS, Family, Witness, WitnessKind

logger = get_logger("recognition")


def find_witness(
    profile: PreferenceProfile,
    family: Family,
    kind: WitnessKind = None,
    config: ToolboxConfig = None,
) -> Optional[Witness]:
    """
    Exhaustive forbidden-subprofile search.

    Kinds are tried in a fixed order per family (worst then alpha, delta then gamma); within a
    kind the smallest witness is returned, ordered by sorted voter tuple, then sorted
    alternative tuple, then the role-ordered tuples. Returns None when the pattern is absent.

    :param kind: restricts the search to a single kind of the family.
    :raises ResourceBoundError: when n exceeds ``config.witness_search_limit``.
    """
    config = config or ToolboxConfig.from_env()
    if kind is not None and kind.family is not family:
        raise InvalidArgumentError(f"{kind.value} witnesses do not belong to the {family.value} family.")
    if profile.n > config.witness_search_limit:
        raise ResourceBoundError(
            f"Witness search is limited to n <= {config.witness_search_limit} (got n={profile.n})."
        )
    return search_witness(profile, family, kind=kind)


def search_witness(profile: PreferenceProfile, family: Family, kind: WitnessKind = None) -> Optional[Witness]:
    """Same search as ``find_witness`` without the size bound; used by the recognition checks."""
    kinds = (kind,) if kind is not None else FAMILY_KINDS[family]
    for current in kinds:
        witness = _SEARCHES[current](profile)
        if witness is not None:
            logger.debug(f"Found {witness.describe()}")
            return witness
    logger.debug(f"No {family.value} witness in profile of size {profile.n}")
    return None


def _smallest(candidates: list[Witness]) -> Optional[Witness]:
    if not candidates:
        return None
    return min(candidates, key=Witness.sort_key)


def _find_worst(profile: PreferenceProfile) -> Optional[Witness]:
    alternatives = range(1, profile.n + 1)
    for voters in combinations(profile.voters, 3):
        orders = [profile.order_of(v) for v in voters]
        for triple in combinations(alternatives, 3):
            worst = tuple(max(triple, key=lambda a, order=order: order.positions[a]) for order in orders)
            if len(set(worst)) == 3:
                return Witness(WitnessKind.WORST, voters, worst)
    return None


def _find_alpha(profile: PreferenceProfile) -> Optional[Witness]:
    alternatives = range(1, profile.n + 1)
    for pair in combinations(profile.voters, 2):
        candidates = []
        for voters in (pair, pair[::-1]):
            i = profile.order_of(voters[0]).positions
            j = profile.order_of(voters[1]).positions
            for c in alternatives:
                for d in alternatives:
                    if d == c or not (i[c] < i[d] and j[d] < j[c]):
                        continue
                    for a in alternatives:
                        if a in (c, d) or not (i[a] < i[c] and j[c] < j[a]):
                            continue
                        for b in alternatives:
                            if b in (a, c, d) or not (i[b] < i[c] and j[b] < j[c]):
                                continue
                            candidates.append(Witness(WitnessKind.ALPHA, voters, (a, b, c, d)))
        witness = _smallest(candidates)
        if witness is not None:
            return witness
    return None


def _pair_signs(profile: PreferenceProfile, voters: tuple[int, ...]) -> dict[tuple[int, int], tuple[bool, ...]]:
    """For each pair (x, y), x < y: whether each voter prefers x to y."""
    positions = [profile.order_of(v).positions for v in voters]
    return {
        (x, y): tuple(p[x] < p[y] for p in positions) for x, y in combinations(range(1, profile.n + 1), 2)
    }


def _oriented(pair: tuple[int, int], preferred_first: bool) -> tuple[int, int]:
    return pair if preferred_first else (pair[1], pair[0])


def _find_gamma(profile: PreferenceProfile) -> Optional[Witness]:
    for voters in combinations(profile.voters, 3):
        signs = _pair_signs(profile, voters)
        # odd[t]: pairs on which voter t disagrees with the two others
        odd = {t: [] for t in range(3)}
        for pair, vector in signs.items():
            for t in range(3):
                others = [vector[s] for s in range(3) if s != t]
                if others[0] == others[1] != vector[t]:
                    odd[t].append(pair)
        if not all(odd.values()):
            continue
        candidates = []
        for i, j, k in permutations(range(3)):
            for first in odd[j]:
                for second in odd[i]:
                    for third in odd[k]:
                        pairs = tuple(_oriented(p, signs[p][i]) for p in (first, second, third))
                        candidates.append(Witness(WitnessKind.GAMMA, (voters[i], voters[j], voters[k]), pairs))
        return _smallest(candidates)
    return None


def _find_delta(profile: PreferenceProfile) -> Optional[Witness]:
    for voters in combinations(profile.voters, 4):
        signs = _pair_signs(profile, voters)
        balanced = [pair for pair, vector in signs.items() if sum(vector) == 2]
        candidates = []
        for p, q in combinations(balanced, 2):
            patterns = {(signs[p][t], signs[q][t]) for t in range(4)}
            if len(patterns) != 4:
                continue
            for first, second in ((p, q), (q, p)):
                for i in range(4):
                    ab = _oriented(first, signs[first][i])
                    cd = _oriented(second, signs[second][i])
                    roles = {}
                    for t in range(4):
                        prefers_a = signs[first][t] == signs[first][i]
                        prefers_c = signs[second][t] == signs[second][i]
                        roles[(prefers_a, prefers_c)] = voters[t]
                    ordered = (roles[(True, True)], roles[(False, True)], roles[(True, False)], roles[(False, False)])
                    candidates.append(Witness(WitnessKind.DELTA, ordered, (ab, cd)))
        witness = _smallest(candidates)
        if witness is not None:
            return witness
    return None


_SEARCHES = {
    WitnessKind.WORST: _find_worst,
    WitnessKind.ALPHA: _find_alpha,
    WitnessKind.GAMMA: _find_gamma,
    WitnessKind.DELTA: _find_delta,
}
