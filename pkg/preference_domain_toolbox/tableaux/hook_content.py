from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import TypeAlias

from preference_domain_toolbox.exceptions import InternalInvariantError, InvalidArgumentError

BigCount: TypeAlias = int

Triangle = tuple[tuple[int, ...], ...]


def _check_order(m) -> None:
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise InvalidArgumentError(f"The order of a tableau must be a positive integer, got {m!r}.")


@dataclass(frozen=True)
class HookTable:
    order: int
    lengths: Triangle
    contents: Triangle

    def cells(self):
        for i in range(1, self.order + 1):
            for j in range(1, self.order - i + 2):
                yield i, j, self.lengths[i - 1][j - 1], self.contents[i - 1][j - 1]


def hook_table(m: int) -> HookTable:
    """Hook lengths h(i,j) = 2(m-i-j)+3 and contents c(i,j) = m-i+j of the staircase of order m."""
    _check_order(m)
    lengths = tuple(tuple(2 * (m - i - j) + 3 for j in range(1, m - i + 2)) for i in range(1, m + 1))
    contents = tuple(tuple(m - i + j for j in range(1, m - i + 2)) for i in range(1, m + 1))
    return HookTable(m, lengths, contents)


def hook_lengths_by_counting(m: int) -> Triangle:
    """One plus the number of cells directly below or directly to the right of each cell."""
    _check_order(m)
    row_length = [m - i for i in range(m)]
    column_length = [m - j for j in range(m)]
    return tuple(
        tuple((row_length[i] - j - 1) + (column_length[j] - i - 1) + 1 for j in range(row_length[i]))
        for i in range(m)
    )


def _as_count(value: Fraction, what: str) -> BigCount:
    if value.denominator != 1:
        raise InternalInvariantError(f"{what} evaluated to the non-integer {value}.")
    return value.numerator


def count_ssyt_hook_formula(m: int) -> BigCount:
    """Product of c(i,j) / h(i,j) over all cells, evaluated exactly."""
    table = hook_table(m)
    product = Fraction(1)
    for _, _, length, content in table.cells():
        product *= Fraction(content, length)
    return _as_count(product, f"Hook-content product of order {m}")


def count_ssyt_closed(m: int) -> BigCount:
    _check_order(m)
    return 2 ** comb(m, 2)


def count_ssyt_recurrence(m: int) -> BigCount:
    """#SSYT(1) = 1 and #SSYT(k + 1) = 2^k * #SSYT(k)."""
    _check_order(m)
    count = 1
    for k in range(1, m):
        count *= 2**k
    return count


def first_row_hook_ratio(m: int) -> BigCount:
    """Factor of the hook-content product contributed by the first row; equals 2^(m-1)."""
    table = hook_table(m)
    product = Fraction(1)
    for length, content in zip(table.lengths[0], table.contents[0], strict=True):
        product *= Fraction(content, length)
    return _as_count(product, f"First-row hook ratio of order {m}")
