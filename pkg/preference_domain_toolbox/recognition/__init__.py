from preference_domain_toolbox.recognition.implications import scn_implies_spn_check
from preference_domain_toolbox.recognition.narcissistic import is_narcissistic, non_narcissistic_voters
from preference_domain_toolbox.recognition.single_crossing import (
    check_single_crossing,
    exhaustive_single_crossing_orders,
    is_single_crossing_wrt,
    is_single_crossing_wrt_by_containment,
    is_single_crossing_wrt_by_intervals,
)
from preference_domain_toolbox.recognition.single_peaked import (
    build_single_peaked_axis,
    check_single_peaked,
    exhaustive_single_peaked_axes,
    is_single_peaked_wrt,
    is_single_peaked_wrt_by_intervals,
)
from preference_domain_toolbox.recognition.witness import Family, RecognitionResult, Witness, WitnessKind
from preference_domain_toolbox.recognition.witness_search import find_witness, search_witness

__all__ = [
    "Family",
    "RecognitionResult",
    "Witness",
    "WitnessKind",
    "build_single_peaked_axis",
    "check_single_crossing",
    "check_single_peaked",
    "exhaustive_single_crossing_orders",
    "exhaustive_single_peaked_axes",
    "find_witness",
    "is_narcissistic",
    "is_single_crossing_wrt",
    "is_single_crossing_wrt_by_containment",
    "is_single_crossing_wrt_by_intervals",
    "is_single_peaked_wrt",
    "is_single_peaked_wrt_by_intervals",
    "non_narcissistic_voters",
    "scn_implies_spn_check",
    "search_witness",
]
