from preference_domain_toolbox.canonical.canonical_form import canonicalize, check_canonical_scn, find_reverse_pair
from preference_domain_toolbox.canonical.relabeling import Relabeling

__all__ = ["Relabeling", "canonicalize", "check_canonical_scn", "find_reverse_pair"]
