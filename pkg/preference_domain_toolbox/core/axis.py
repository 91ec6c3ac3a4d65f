from dataclasses import dataclass, field

from preference_domain_toolbox.exceptions import InvalidArgumentError


@dataclass(frozen=True)
class Axis:
    """
    Linear order over 1..n read left to right. Used over alternatives for single-peakedness
    and over voters for single-crossingness.
    """

    sequence: tuple[int, ...]
    _index: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        sequence = tuple(self.sequence)
        n = len(sequence)
        if n < 1 or sorted(sequence) != list(range(1, n + 1)):
            raise InvalidArgumentError(f"Axis {list(sequence)} is not a permutation of 1..{n}.")
        index = [0] * (n + 1)
        for place, element in enumerate(sequence):
            index[element] = place
        object.__setattr__(self, "sequence", sequence)
        object.__setattr__(self, "_index", tuple(index))

    @classmethod
    def identity(cls, n: int) -> "Axis":
        if n < 1:
            raise InvalidArgumentError(f"An axis needs at least one element, got n={n}.")
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> "Axis":
        """Reads a comma or whitespace separated list such as ``1,2,3,4``."""
        tokens = text.replace(",", " ").split()
        try:
            return cls(tuple(int(token) for token in tokens))
        except ValueError as e:
            raise InvalidArgumentError(f"Axis '{text}' is not a list of integers.") from e

    @property
    def n(self) -> int:
        return len(self.sequence)

    def index_of(self, element: int) -> int:
        """0-based place of ``element`` on the axis."""
        if not 1 <= element <= self.n:
            raise InvalidArgumentError(f"{element} is outside 1..{self.n}.")
        return self._index[element]

    def is_interval(self, elements) -> bool:
        places = [self.index_of(e) for e in elements]
        if not places:
            return True
        return max(places) - min(places) + 1 == len(set(places))

    def reversed(self) -> "Axis":
        return Axis(self.sequence[::-1])

    def __iter__(self):
        return iter(self.sequence)

    def __len__(self):
        return len(self.sequence)

    def __str__(self):
        return " ▷ ".join(str(e) for e in self.sequence)


def check_same_size(size: int, axis: Axis, what: str = "profile") -> None:
    if axis.n != size:
        raise InvalidArgumentError(f"Axis over {axis.n} elements does not match a {what} of size {size}.")
