from preference_domain_toolbox.core.axis import Axis
from preference_domain_toolbox.core.preference_order import (
    Pair,
    PairSet,
    PreferenceOrder,
    diff_pairs,
    make_pair,
    peak,
    pos,
    top,
)
from preference_domain_toolbox.core.preference_profile import PreferenceProfile

__all__ = [
    "Axis",
    "Pair",
    "PairSet",
    "PreferenceOrder",
    "PreferenceProfile",
    "diff_pairs",
    "make_pair",
    "peak",
    "pos",
    "top",
]
