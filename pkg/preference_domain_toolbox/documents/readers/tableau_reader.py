from preference_domain_toolbox.documents.parsing import parse_tableau
from preference_domain_toolbox.documents.readers.base_reader import BaseDocumentReader
from preference_domain_toolbox.tableaux import Ssyt


class TableauReader(BaseDocumentReader):
    def _parse(self, text: str) -> Ssyt:
        return parse_tableau(text)

    @property
    def tableau(self) -> Ssyt:
        return self.document
