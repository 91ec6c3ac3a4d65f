from preference_domain_toolbox.core import PreferenceProfile
from preference_domain_toolbox.documents.parsing import parse_profile
from preference_domain_toolbox.documents.readers.base_reader import BaseDocumentReader


class ProfileReader(BaseDocumentReader):
    """Reads a profile document (header n, then one ranking per voter)."""

    def _parse(self, text: str) -> PreferenceProfile:
        return parse_profile(text)

    @property
    def profile(self) -> PreferenceProfile:
        return self.document
