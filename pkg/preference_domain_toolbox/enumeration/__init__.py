from preference_domain_toolbox.enumeration.profile_enumeration import (
    count_narcissistic,
    count_profiles,
    count_scn,
    count_spn,
    enumerate_scn,
    enumerate_spn,
)
from preference_domain_toolbox.tableaux import BigCount

__all__ = [
    "BigCount",
    "count_narcissistic",
    "count_profiles",
    "count_scn",
    "count_spn",
    "enumerate_scn",
    "enumerate_spn",
]
