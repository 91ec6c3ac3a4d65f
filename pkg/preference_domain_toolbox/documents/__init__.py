from preference_domain_toolbox.documents.parsing import parse_profile, parse_tableau, split_documents
from preference_domain_toolbox.documents.reader_factory import DocumentReaderFactory, read_document
from preference_domain_toolbox.documents.readers import BaseDocumentReader, ProfileReader, TableauReader
from preference_domain_toolbox.documents.writers import (
    format_axis,
    format_profile,
    format_relabeling,
    format_tableau,
    format_witness,
)

__all__ = [
    "BaseDocumentReader",
    "DocumentReaderFactory",
    "ProfileReader",
    "TableauReader",
    "format_axis",
    "format_profile",
    "format_relabeling",
    "format_tableau",
    "format_witness",
    "parse_profile",
    "parse_tableau",
    "read_document",
    "split_documents",
]
