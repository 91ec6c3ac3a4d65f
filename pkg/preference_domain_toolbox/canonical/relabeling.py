from collections.abc import Sequence
from dataclasses import dataclass

from preference_domain_toolbox.core import PreferenceOrder, PreferenceProfile
from preference_domain_toolbox.exceptions import InvalidArgumentError


@dataclass(frozen=True)
class Relabeling:
    """
    Permutation sigma of 1..n applied to voter indices and alternative ids at once;
    ``mapping[k - 1]`` is sigma(k).
    """

    mapping: tuple[int, ...]

    def __post_init__(self):
        mapping = tuple(self.mapping)
        if not mapping or sorted(mapping) != list(range(1, len(mapping) + 1)):
            raise InvalidArgumentError(f"{list(mapping)} is not a permutation of 1..{len(mapping)}.")
        object.__setattr__(self, "mapping", mapping)

    @classmethod
    def identity(cls, n: int) -> "Relabeling":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def mirror(cls, n: int) -> "Relabeling":
        """x -> n + 1 - x"""
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def sending_ranking_to_identity(cls, ranking: Sequence[int]) -> "Relabeling":
        """The relabeling under which ``ranking`` reads 1, 2, ..., n."""
        mapping = [0] * len(ranking)
        for new_id, old_id in enumerate(ranking, start=1):
            mapping[old_id - 1] = new_id
        return cls(tuple(mapping))

    @property
    def n(self) -> int:
        return len(self.mapping)

    def __call__(self, element: int) -> int:
        return self.mapping[element - 1]

    def is_identity(self) -> bool:
        return self.mapping == tuple(range(1, len(self.mapping) + 1))

    def inverse(self) -> "Relabeling":
        inverse = [0] * len(self.mapping)
        for old_id, new_id in enumerate(self.mapping, start=1):
            inverse[new_id - 1] = old_id
        return Relabeling(tuple(inverse))

    def compose(self, other: "Relabeling") -> "Relabeling":
        """self after other: x -> self(other(x))."""
        if other.n != self.n:
            raise InvalidArgumentError("Cannot compose relabelings of different sizes.")
        return Relabeling(tuple(self(other(x)) for x in range(1, self.n + 1)))

    def apply(self, profile: PreferenceProfile) -> PreferenceProfile:
        """Voter sigma(v) of the result holds voter v's order with every alternative renamed."""
        if profile.n != self.n:
            raise InvalidArgumentError(f"Relabeling of size {self.n} applied to a profile of size {profile.n}.")
        orders = [None] * profile.n
        for voter, order in zip(profile.voters, profile.orders, strict=True):
            orders[self(voter) - 1] = PreferenceOrder(tuple(self(a) for a in order.ranking))
        return PreferenceProfile(tuple(orders))

    def __str__(self):
        return " ".join(f"{old}->{new}" for old, new in enumerate(self.mapping, start=1))
