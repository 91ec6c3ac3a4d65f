from preference_domain_toolbox.documents.readers.base_reader import BaseDocumentReader
from preference_domain_toolbox.documents.readers.profile_reader import ProfileReader
from preference_domain_toolbox.documents.readers.tableau_reader import TableauReader

__all__ = ["BaseDocumentReader", "ProfileReader", "TableauReader"]
