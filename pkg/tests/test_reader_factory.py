from unittest.mock import MagicMock, patch

import pytest

from conftest import EXAMPLE_1
from preference_domain_toolbox.documents import (
    BaseDocumentReader,
    DocumentReaderFactory,
    ProfileReader,
    TableauReader,
    read_document,
)
from preference_domain_toolbox.exceptions import DocumentParseError, InvalidArgumentError, ParseErrorCode
from preference_domain_toolbox.tableaux import Ssyt

EXAMPLE_1_TEXT = "4\n1 2 3 4\n2 3 4 1\n3 2 4 1\n4 3 2 1\n"


@pytest.mark.parametrize(
    "input_source,expected_class",
    [
        ("file.profile", "ProfileReader"),
        ("FILE.PROF", "ProfileReader"),
        ("file.tableau", "TableauReader"),
        ("file.ssyt", "TableauReader"),
    ],
)
def test_create_reader_file_types(input_source, expected_class):
    with (
        patch("preference_domain_toolbox.documents.reader_factory.ProfileReader") as profile_reader,
        patch("preference_domain_toolbox.documents.reader_factory.TableauReader") as tableau_reader,
    ):
        class_map = {"ProfileReader": profile_reader, "TableauReader": tableau_reader}
        mock_reader = MagicMock()
        class_map[expected_class].return_value = mock_reader

        factory = DocumentReaderFactory(input_source)
        assert factory.reader is mock_reader
        class_map[expected_class].assert_called_once_with(input_source)


def test_unsupported_extension():
    with pytest.raises(InvalidArgumentError):
        DocumentReaderFactory("file.csv")


def test_unknown_kind():
    with pytest.raises(InvalidArgumentError):
        DocumentReaderFactory("file.profile", kind="matrix")


def test_kind_overrides_extension(write_document):
    path = write_document("example.txt", EXAMPLE_1_TEXT)
    assert isinstance(DocumentReaderFactory(path, kind="profile").reader, ProfileReader)
    assert read_document(path, kind="profile").rankings == EXAMPLE_1


def test_profile_reader_is_lazy(write_document):
    path = write_document("example.profile", EXAMPLE_1_TEXT)
    reader = ProfileReader(path)
    assert reader._document is None
    assert reader.profile.rankings == EXAMPLE_1
    assert reader.document is reader.profile


def test_tableau_reader(write_document):
    path = write_document("example.ssyt", "3\n1 1 1\n2 3\n3\n")
    reader = DocumentReaderFactory(path).reader
    assert isinstance(reader, TableauReader)
    assert reader.tableau == Ssyt.from_rows([[1, 1, 1], [2, 3], [3]])


def test_missing_file(tmp_path):
    with pytest.raises(InvalidArgumentError):
        read_document(tmp_path / "absent.profile")


def test_parse_error_surfaces(write_document):
    path = write_document("broken.profile", "3\n1 2 2\n")
    with pytest.raises(DocumentParseError):
        read_document(path)


def test_undecodable_bytes_reported_with_position(tmp_path):
    path = tmp_path / "latin.profile"
    path.write_bytes(b"2\n1 2\n2 \xff1\n")
    with pytest.raises(DocumentParseError) as error:
        read_document(path)
    assert error.value.code is ParseErrorCode.INVALID_ENCODING
    assert (error.value.line, error.value.column) == (3, 3)
    assert "0xff" in str(error.value)


class DummyDocumentReader(BaseDocumentReader):
    def _parse(self, text: str):
        return text.upper()


def test_base_reader_initialization(write_document):
    path = write_document("dummy.txt", "abc")
    reader = DummyDocumentReader(path)
    assert reader.source == path
    assert reader._document is None
    assert reader.document == "ABC"
