from preference_domain_toolbox.config import ToolboxConfig
from preference_domain_toolbox.core import PreferenceProfile
from preference_domain_toolbox.exceptions import InvalidArgumentError
from preference_domain_toolbox.recognition.narcissistic import is_narcissistic
from preference_domain_toolbox.recognition.single_crossing import check_single_crossing
from preference_domain_toolbox.recognition.single_peaked import check_single_peaked


def scn_implies_spn_check(profile: PreferenceProfile, config: ToolboxConfig = None) -> bool:
    """
    Single-peakedness of a single-crossing narcissistic profile. Always True on valid input;
    meant for property tests, not as a decision procedure.

    :raises InvalidArgumentError: if the profile is not narcissistic and single-crossing.
    """
    if not is_narcissistic(profile):
        raise InvalidArgumentError("Profile is not narcissistic.")
    if not check_single_crossing(profile).holds:
        raise InvalidArgumentError("Profile is not single-crossing.")
    return check_single_peaked(profile, config=config).holds
