from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from preference_domain_toolbox.core.preference_order import PreferenceOrder
from preference_domain_toolbox.exceptions import InvalidArgumentError


@dataclass(frozen=True)
class PreferenceProfile:
    """
    Square profile: voters and alternatives are both 1..n, voter i owns ``orders[i - 1]``.
    """

    orders: tuple[PreferenceOrder, ...]

    def __post_init__(self):
        orders = tuple(self.orders)
        if not orders:
            raise InvalidArgumentError("A profile needs at least one voter.")
        for order in orders:
            if not isinstance(order, PreferenceOrder):
                raise InvalidArgumentError(f"Expected PreferenceOrder instances, got {type(order).__name__}.")
        sizes = {order.n for order in orders}
        if len(sizes) != 1:
            raise InvalidArgumentError(f"Orders disagree on the number of alternatives: {sorted(sizes)}.")
        if sizes.pop() != len(orders):
            raise InvalidArgumentError(
                f"Profile must be square: {len(orders)} voters over {orders[0].n} alternatives."
            )
        object.__setattr__(self, "orders", orders)

    @classmethod
    def from_rankings(cls, rankings: Iterable[Sequence[int]]) -> "PreferenceProfile":
        return cls(tuple(PreferenceOrder(tuple(ranking)) for ranking in rankings))

    @property
    def n(self) -> int:
        return len(self.orders)

    @property
    def voters(self) -> range:
        return range(1, len(self.orders) + 1)

    @property
    def rankings(self) -> tuple[tuple[int, ...], ...]:
        return tuple(order.ranking for order in self.orders)

    def order_of(self, voter: int) -> PreferenceOrder:
        if not 1 <= voter <= len(self.orders):
            raise InvalidArgumentError(f"Voter {voter} is outside 1..{len(self.orders)}.")
        return self.orders[voter - 1]

    def reverse_pairs(self) -> list[tuple[int, int]]:
        """Voter pairs (a, b), a < b, whose orders are exact reverses of each other, in lexicographic order."""
        pairs = []
        for a in range(1, len(self.orders)):
            reversed_ranking = self.orders[a - 1].ranking[::-1]
            for b in range(a + 1, len(self.orders) + 1):
                if self.orders[b - 1].ranking == reversed_ranking:
                    pairs.append((a, b))
        return pairs

    def __len__(self):
        return len(self.orders)

    def __iter__(self):
        return iter(self.orders)

    def __str__(self):
        return "\n".join(f"voter {voter}: {order}" for voter, order in zip(self.voters, self.orders, strict=True))
