import pytest

from conftest import EXAMPLE_1
from preference_domain_toolbox.canonical import Relabeling
from preference_domain_toolbox.core import Axis
from preference_domain_toolbox.documents import (
    format_axis,
    format_profile,
    format_relabeling,
    format_tableau,
    format_witness,
    parse_profile,
    parse_tableau,
    split_documents,
)
from preference_domain_toolbox.enumeration import enumerate_scn, enumerate_spn
from preference_domain_toolbox.exceptions import DocumentParseError, ParseErrorCode
from preference_domain_toolbox.recognition import Witness, WitnessKind
from preference_domain_toolbox.tableaux import Ssyt, enumerate_ssyt


def test_parse_example_1():
    assert parse_profile("4\n1 2 3 4\n2 3 4 1\n3 2 4 1\n4 3 2 1").rankings == EXAMPLE_1


def test_parse_two_voters():
    assert parse_profile("2\n1 2\n2 1\n").rankings == ((1, 2), (2, 1))


def test_parse_ignores_comments_and_blank_lines():
    text = "# example\n2\n\n  # voter 1\n1 2\n2 1\n"
    assert parse_profile(text).rankings == ((1, 2), (2, 1))


@pytest.mark.parametrize(
    "text,code,line",
    [
        ("3\n1 2 2\n2 1 3\n3 2 1", ParseErrorCode.NOT_A_PERMUTATION, 2),
        ("3\n1 2 3\n2 1\n3 2 1", ParseErrorCode.NOT_A_PERMUTATION, 3),
        ("3\n1 2 3\n2 x 3\n3 2 1", ParseErrorCode.MALFORMED_INTEGER, 3),
        ("3\n1 2 3\n2 1 3", ParseErrorCode.COUNT_MISMATCH, None),
        ("2\n1 2\n2 1\n1 2", ParseErrorCode.COUNT_MISMATCH, 4),
        ("# nothing here\n", ParseErrorCode.MISSING_HEADER, None),
        ("1 2\n1 2\n2 1", ParseErrorCode.MISSING_HEADER, 1),
        ("0\n", ParseErrorCode.MISSING_HEADER, 1),
    ],
)
def test_parse_profile_errors(text, code, line):
    with pytest.raises(DocumentParseError) as error:
        parse_profile(text)
    assert error.value.code is code
    assert error.value.line == line


def test_malformed_integer_reports_column():
    with pytest.raises(DocumentParseError) as error:
        parse_profile("2\n1 two\n2 1")
    assert error.value.column == 3
    assert str(error.value) == "[malformed-integer] 'two' is not an integer (line 2, column 3)"


def test_parse_tableau():
    assert parse_tableau("3\n1 1 1\n2 3\n3\n") == Ssyt.from_rows([[1, 1, 1], [2, 3], [3]])


@pytest.mark.parametrize(
    "text,code",
    [
        ("3\n1 1 1\n2 3 3\n3\n", ParseErrorCode.ROW_LENGTH_MISMATCH),
        ("2\n1 1\n1\n", ParseErrorCode.INVALID_TABLEAU),
        ("2\n1 1\n", ParseErrorCode.COUNT_MISMATCH),
        ("2\n1 a\n2\n", ParseErrorCode.MALFORMED_INTEGER),
        ("", ParseErrorCode.MISSING_HEADER),
    ],
)
def test_parse_tableau_errors(text, code):
    with pytest.raises(DocumentParseError) as error:
        parse_tableau(text)
    assert error.value.code is code


def test_format_profile_and_tableau(example_1):
    assert format_profile(example_1) == "4\n1 2 3 4\n2 3 4 1\n3 2 4 1\n4 3 2 1\n"
    assert format_tableau(Ssyt.from_rows([[1, 1, 1], [2, 3], [3]])) == "3\n1 1 1\n2 3\n3\n"


def test_format_helpers():
    assert format_relabeling(Relabeling((2, 1))) == "# relabeling: 1->2 2->1\n"
    assert format_axis(Axis((2, 1, 3))) == "2 ▷ 1 ▷ 3"
    witness = Witness(WitnessKind.ALPHA, (1, 2), (1, 2, 3, 4))
    assert format_witness(witness) == "alpha-subprofile: alternatives (1,2,3,4); voters 1,2"


@pytest.mark.parametrize("n", range(2, 6))
def test_profile_documents_read_back(n):
    for profile in list(enumerate_spn(n)) + list(enumerate_scn(n)):
        assert parse_profile(format_profile(profile)) == profile


@pytest.mark.parametrize("m", range(1, 5))
def test_tableau_documents_read_back(m):
    for tableau in enumerate_ssyt(m):
        assert parse_tableau(format_tableau(tableau)) == tableau


def test_split_documents():
    stream = "2\n1 2\n2 1\n\n# second\n2\n1 2\n2 1\n"
    blocks = split_documents(stream)
    assert len(blocks) == 2
    assert [parse_profile(block).n for block in blocks] == [2, 2]
