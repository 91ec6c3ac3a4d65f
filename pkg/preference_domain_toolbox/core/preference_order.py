from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import TypeAlias

from preference_domain_toolbox.exceptions import InvalidArgumentError

Pair: TypeAlias = tuple[int, int]
PairSet: TypeAlias = frozenset[Pair]


def _validate_permutation(values: Sequence[int]) -> None:
    n = len(values)
    if n < 1:
        raise InvalidArgumentError("A preference order needs at least one alternative.")
    if sorted(values) != list(range(1, n + 1)):
        raise InvalidArgumentError(f"{list(values)} is not a permutation of 1..{n}.")


def make_pair(a: int, b: int) -> Pair:
    """Normalized unordered pair, smaller id first."""
    if a == b:
        raise InvalidArgumentError(f"A pair needs two distinct alternatives, got {a} twice.")
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class PreferenceOrder:
    """
    Strict linear order over the alternatives 1..n, most preferred first.

    The inverse permutation is stored next to the ranking so that ``pos`` is a lookup.
    """

    ranking: tuple[int, ...]
    _positions: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        ranking = tuple(self.ranking)
        _validate_permutation(ranking)
        positions = [0] * (len(ranking) + 1)
        for index, alternative in enumerate(ranking, start=1):
            positions[alternative] = index
        object.__setattr__(self, "ranking", ranking)
        object.__setattr__(self, "_positions", tuple(positions))

    @classmethod
    def of(cls, *ranking: int) -> "PreferenceOrder":
        return cls(tuple(ranking))

    @classmethod
    def identity(cls, n: int) -> "PreferenceOrder":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.ranking)

    @property
    def peak(self) -> int:
        return self.ranking[0]

    @property
    def positions(self) -> tuple[int, ...]:
        """Inverse permutation indexed by alternative id; index 0 is unused."""
        return self._positions

    def pos(self, alternative: int) -> int:
        self._check_alternative(alternative)
        return self._positions[alternative]

    def prefers(self, a: int, b: int) -> bool:
        """True when ``a`` is ranked strictly above ``b``."""
        self._check_alternative(a)
        self._check_alternative(b)
        return self._positions[a] < self._positions[b]

    def top(self, subset: Iterable[int]) -> frozenset[int]:
        subset = frozenset(subset)
        for alternative in subset:
            self._check_alternative(alternative)
        if not subset:
            return frozenset(self.ranking)
        cut = min(self._positions[a] for a in subset)
        return frozenset(self.ranking[:cut])

    def reversed(self) -> "PreferenceOrder":
        return PreferenceOrder(self.ranking[::-1])

    def _check_alternative(self, alternative: int) -> None:
        if not isinstance(alternative, int) or not 1 <= alternative <= len(self.ranking):
            raise InvalidArgumentError(f"Alternative {alternative!r} is outside 1..{len(self.ranking)}.")

    def __len__(self):
        return len(self.ranking)

    def __iter__(self):
        return iter(self.ranking)

    def __str__(self):
        return " > ".join(str(a) for a in self.ranking)


def top(order: PreferenceOrder, subset: Iterable[int]) -> frozenset[int]:
    """
    Alternatives preferred to every other member of ``subset``: the prefix of the ranking up to
    and including the first member of ``subset``. The empty subset yields every alternative.
    """
    return order.top(subset)


def peak(order: PreferenceOrder) -> int:
    return order.peak


def pos(order: PreferenceOrder, alternative: int) -> int:
    """1-based position of ``alternative``, i.e. ``|top(order, {alternative})|``."""
    return order.pos(alternative)


def diff_pairs(a: PreferenceOrder, b: PreferenceOrder) -> PairSet:
    """Unordered pairs ranked oppositely by ``a`` and ``b``."""
    if a.n != b.n:
        raise InvalidArgumentError(f"Orders over different alternative sets (n={a.n} and n={b.n}).")
    pairs = set()
    ranking = a.ranking
    for i in range(len(ranking)):
        for j in range(i + 1, len(ranking)):
            x, y = ranking[i], ranking[j]
            if b.prefers(y, x):
                pairs.add(make_pair(x, y))
    return frozenset(pairs)
