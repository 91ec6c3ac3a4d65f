import pathlib
from abc import abstractmethod

from preference_domain_toolbox.exceptions import DocumentParseError, InvalidArgumentError, ParseErrorCode


class BaseDocumentReader:
    def __init__(self, input_source: str | pathlib.Path, encoding: str = "utf-8", **kwargs):
        self._input_source = pathlib.Path(input_source)
        self._encoding = encoding
        self._document = None

    @abstractmethod
    def _parse(self, text: str):
        """Parse the file content into the document object"""
        pass

    def _read_data(self):
        if not self._input_source.is_file():
            raise InvalidArgumentError(f"No such document: {self._input_source}")
        raw = self._input_source.read_bytes()
        try:
            text = raw.decode(self._encoding)
        except UnicodeDecodeError as e:
            line = raw.count(b"\n", 0, e.start) + 1
            column = e.start - (raw.rfind(b"\n", 0, e.start) + 1) + 1
            raise DocumentParseError(
                ParseErrorCode.INVALID_ENCODING,
                f"{self._input_source.name} is not valid {self._encoding}: byte 0x{raw[e.start]:02x}",
                line,
                column,
            ) from e
        self._document = self._parse(text)

    @property
    def document(self):
        if self._document is None:
            self._read_data()
        return self._document

    @property
    def source(self) -> pathlib.Path:
        return self._input_source
