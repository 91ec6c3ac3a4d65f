from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from preference_domain_toolbox.domain_logging import get_logger
from preference_domain_toolbox.exceptions import InvalidArgumentError

logger = get_logger("tableaux")

Rows = tuple[tuple[int, ...], ...]


def validate_ssyt(candidate: Sequence[Sequence[int]]) -> bool:
    """
    True iff ``candidate`` is a semi-standard Young tableau of staircase shape: m rows, row i
    holding m - i + 1 entries in 1..m, rows weakly increasing and columns strictly increasing.
    Malformed shapes give False.
    """
    try:
        rows = [list(row) for row in candidate]
    except TypeError:
        return False
    m = len(rows)
    if m < 1:
        return False
    for i, row in enumerate(rows):
        if len(row) != m - i:
            return False
        for value in row:
            if not isinstance(value, int) or isinstance(value, bool) or not 1 <= value <= m:
                return False
        if any(left > right for left, right in zip(row, row[1:])):
            return False
        if i > 0 and any(above >= below for above, below in zip(rows[i - 1], row)):
            return False
    return True


@dataclass(frozen=True)
class Ssyt:
    """Staircase semi-standard Young tableau of order m; ``rows[i - 1]`` is row i."""

    rows: Rows

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        if not validate_ssyt(rows):
            raise InvalidArgumentError(f"{[list(r) for r in rows]} is not a staircase SSYT.")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Ssyt":
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def _trusted(cls, rows: Rows) -> "Ssyt":
        # rows produced by enumerate_ssyt are valid by construction
        tableau = object.__new__(cls)
        object.__setattr__(tableau, "rows", rows)
        return tableau

    @property
    def order(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        """T(i, j), 1-based."""
        if not 1 <= i <= self.order or not 1 <= j <= self.order - i + 1:
            raise InvalidArgumentError(f"Cell ({i},{j}) is outside a tableau of order {self.order}.")
        return self.rows[i - 1][j - 1]

    @property
    def first_column(self) -> tuple[int, ...]:
        return tuple(row[0] for row in self.rows)

    def as_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def __str__(self):
        return "\n".join(" ".join(str(value) for value in row) for row in self.rows)


def enumerate_ssyt(m: int) -> Iterator[Ssyt]:
    """
    Streams every staircase SSYT of order m once, in lexicographic order of the row-major
    entries. Cells are filled row-major by backtracking; cell (i, j) (0-based) ranges from
    max(left, above + 1) to i + j + 1, the largest value leaving room for the cells below it,
    so every partial filling extends and no branch dies.
    """
    if not isinstance(m, int) or m < 1:
        raise InvalidArgumentError(f"The order of a tableau must be a positive integer, got {m!r}.")

    cells = [(i, j) for i in range(m) for j in range(m - i)]
    row_starts = [0] * m
    for i in range(1, m):
        row_starts[i] = row_starts[i - 1] + (m - i + 1)
    left_index = [k - 1 if j > 0 else -1 for k, (i, j) in enumerate(cells)]
    above_index = [row_starts[i - 1] + j if i > 0 else -1 for i, j in cells]
    upper = [i + j + 1 for i, j in cells]
    total = len(cells)
    values = [0] * total

    def lower(k: int) -> int:
        bound = 1
        if left_index[k] >= 0:
            bound = values[left_index[k]]
        if above_index[k] >= 0:
            bound = max(bound, values[above_index[k]] + 1)
        return bound

    def snapshot() -> Rows:
        return tuple(tuple(values[row_starts[i] : row_starts[i] + m - i]) for i in range(m))

    k = 0
    values[0] = lower(0)
    produced = 0
    while True:
        if k + 1 < total:
            k += 1
            values[k] = lower(k)
            continue
        produced += 1
        yield Ssyt._trusted(snapshot())
        while k >= 0 and values[k] >= upper[k]:
            k -= 1
        if k < 0:
            logger.debug(f"Enumerated {produced} tableaux of order {m}")
            return
        values[k] += 1
