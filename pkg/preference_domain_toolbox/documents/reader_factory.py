import os
import pathlib

from preference_domain_toolbox.core import PreferenceProfile
from preference_domain_toolbox.documents.readers import BaseDocumentReader, ProfileReader, TableauReader
from preference_domain_toolbox.exceptions import InvalidArgumentError
from preference_domain_toolbox.tableaux import Ssyt


class DocumentReaderFactory:
    """
    This class acts as an Object Factory to instantiate the BaseDocumentReader subclass matching
    a document file, from its extension or from an explicit ``kind``.
    """

    def __init__(self, input_source: str | pathlib.Path, kind: str = None, **kwargs):
        self._input_source = input_source
        self._reader = self._create_reader(input_source, kind=kind, **kwargs)

    @property
    def reader(self) -> BaseDocumentReader:
        return self._reader

    @property
    def document(self) -> PreferenceProfile | Ssyt:
        return self._reader.document

    @staticmethod
    def _create_reader(input_source, kind: str = None, **kwargs) -> BaseDocumentReader:
        """
        Creates and returns a document reader.

        Parameters
        ----------
        input_source :
            Path of the document.
        kind :
            'profile' or 'tableau'; when omitted the file extension decides
            (.profile / .prof and .tableau / .ssyt).
        kwargs :
            Additional parameters passed to the reader's constructor.
        """
        if kind is None:
            _, extension = os.path.splitext(str(input_source).lower())
            match extension:
                case ".profile" | ".prof":
                    kind = "profile"
                case ".tableau" | ".ssyt":
                    kind = "tableau"
                case _:
                    raise InvalidArgumentError(f"Unsupported document type: '{extension}'")
        match kind:
            case "profile":
                return ProfileReader(input_source, **kwargs)
            case "tableau":
                return TableauReader(input_source, **kwargs)
            case _:
                raise InvalidArgumentError(f"Unknown document kind: '{kind}'")


def read_document(input_source: str | pathlib.Path, kind: str = None) -> PreferenceProfile | Ssyt:
    return DocumentReaderFactory(input_source, kind=kind).document
