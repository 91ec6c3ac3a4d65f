from preference_domain_toolbox.oracle.brute_force import (
    OracleProperty,
    brute_force_narcissistic,
    oracle_count,
    oracle_profiles,
)
from preference_domain_toolbox.oracle.verification import CheckResult, run_verification, verification_frame

__all__ = [
    "CheckResult",
    "OracleProperty",
    "brute_force_narcissistic",
    "oracle_count",
    "oracle_profiles",
    "run_verification",
    "verification_frame",
]
