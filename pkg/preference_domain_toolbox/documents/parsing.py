"""
Plain text documents. A document starts with a header holding a single integer, then one line
per voter (profile) or per tableau row. Lines whose first non-blank character is ``#`` are
comments; blank lines are ignored inside a document and separate documents in a stream.
"""

import re
from collections.abc import Iterator

from preference_domain_toolbox.core import PreferenceProfile
from preference_domain_toolbox.exceptions import DocumentParseError, ParseErrorCode
from preference_domain_toolbox.tableaux import Ssyt, validate_ssyt

_TOKEN = re.compile(r"\S+")


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            yield number, line


def _integers(number: int, line: str) -> list[int]:
    values = []
    for match in _TOKEN.finditer(line):
        token = match.group()
        try:
            values.append(int(token))
        except ValueError:
            raise DocumentParseError(
                ParseErrorCode.MALFORMED_INTEGER, f"'{token}' is not an integer", number, match.start() + 1
            ) from None
    return values


def _header(lines: list[tuple[int, str]], what: str) -> int:
    if not lines:
        raise DocumentParseError(ParseErrorCode.MISSING_HEADER, f"Empty {what} document")
    number, line = lines[0]
    values = _integers(number, line)
    if len(values) != 1 or values[0] < 1:
        raise DocumentParseError(
            ParseErrorCode.MISSING_HEADER, f"The first line of a {what} document must hold its size", number, 1
        )
    return values[0]


def parse_profile(text: str) -> PreferenceProfile:
    """
    :raises DocumentParseError: with ``code`` MISSING_HEADER, MALFORMED_INTEGER,
        NOT_A_PERMUTATION or COUNT_MISMATCH and the offending line.
    """
    lines = list(_content_lines(text))
    n = _header(lines, "profile")
    rankings = []
    expected = list(range(1, n + 1))
    for number, line in lines[1:]:
        if len(rankings) == n:
            raise DocumentParseError(ParseErrorCode.COUNT_MISMATCH, f"More than the declared {n} voters", number)
        values = _integers(number, line)
        if sorted(values) != expected:
            raise DocumentParseError(
                ParseErrorCode.NOT_A_PERMUTATION, f"{values} is not a permutation of 1..{n}", number, 1
            )
        rankings.append(values)
    if len(rankings) != n:
        raise DocumentParseError(ParseErrorCode.COUNT_MISMATCH, f"Declared {n} voters, found {len(rankings)}")
    return PreferenceProfile.from_rankings(rankings)


def parse_tableau(text: str) -> Ssyt:
    """
    :raises DocumentParseError: with ``code`` MISSING_HEADER, MALFORMED_INTEGER,
        ROW_LENGTH_MISMATCH, COUNT_MISMATCH or INVALID_TABLEAU.
    """
    lines = list(_content_lines(text))
    m = _header(lines, "tableau")
    rows = []
    for number, line in lines[1:]:
        if len(rows) == m:
            raise DocumentParseError(ParseErrorCode.COUNT_MISMATCH, f"More than the declared {m} rows", number)
        values = _integers(number, line)
        if len(values) != m - len(rows):
            raise DocumentParseError(
                ParseErrorCode.ROW_LENGTH_MISMATCH,
                f"Row {len(rows) + 1} must hold {m - len(rows)} entries, found {len(values)}",
                number,
            )
        rows.append(values)
    if len(rows) != m:
        raise DocumentParseError(ParseErrorCode.COUNT_MISMATCH, f"Declared {m} rows, found {len(rows)}")
    if not validate_ssyt(rows):
        raise DocumentParseError(
            ParseErrorCode.INVALID_TABLEAU, "Rows must weakly increase and columns strictly increase within 1..m"
        )
    return Ssyt.from_rows(rows)


def split_documents(text: str) -> list[str]:
    """Blank-line separated blocks of a stream, comments kept."""
    blocks = re.split(r"\n\s*\n", text.strip("\n"))
    return [block for block in blocks if block.strip()]
