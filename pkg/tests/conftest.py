import pathlib

import pytest

from preference_domain_toolbox.core import PreferenceProfile

EXAMPLE_1 = ((1, 2, 3, 4), (2, 3, 4, 1), (3, 2, 4, 1), (4, 3, 2, 1))
# Example 1 with voter 3 holding 3 > 2 > 1 > 4: still SPN, no longer single-crossing
EXAMPLE_3_MODIFIED = ((1, 2, 3, 4), (2, 3, 4, 1), (3, 2, 1, 4), (4, 3, 2, 1))
CONDORCET = ((2, 3, 1), (3, 1, 2), (1, 2, 3))
ALPHA_SQUARE = ((1, 2, 3, 4), (2, 4, 3, 1), (1, 2, 3, 4), (2, 4, 3, 1))

# the eight staircase tableaux of order 3, row-major lexicographic order
SSYT_ORDER_3 = [
    [[1, 1, 1], [2, 2], [3]],
    [[1, 1, 1], [2, 3], [3]],
    [[1, 1, 2], [2, 2], [3]],
    [[1, 1, 2], [2, 3], [3]],
    [[1, 1, 3], [2, 2], [3]],
    [[1, 1, 3], [2, 3], [3]],
    [[1, 2, 2], [2, 3], [3]],
    [[1, 2, 3], [2, 3], [3]],
]


@pytest.fixture
def example_1() -> PreferenceProfile:
    return PreferenceProfile.from_rankings(EXAMPLE_1)


@pytest.fixture
def example_3_modified() -> PreferenceProfile:
    return PreferenceProfile.from_rankings(EXAMPLE_3_MODIFIED)


@pytest.fixture
def condorcet() -> PreferenceProfile:
    return PreferenceProfile.from_rankings(CONDORCET)


@pytest.fixture
def alpha_square() -> PreferenceProfile:
    return PreferenceProfile.from_rankings(ALPHA_SQUARE)


@pytest.fixture
def two_voters() -> PreferenceProfile:
    return PreferenceProfile.from_rankings([(1, 2), (2, 1)])


@pytest.fixture
def write_document(tmp_path):
    def _write(name: str, content: str) -> pathlib.Path:
        path = tmp_path / name
        path.write_text(content, encoding="utf-8")
        return path

    return _write
