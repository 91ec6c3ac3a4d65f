from preference_domain_toolbox.core import PreferenceProfile


def is_narcissistic(profile: PreferenceProfile) -> bool:
    """Every voter i ranks herself first."""
    return all(order.peak == voter for voter, order in zip(profile.voters, profile.orders, strict=True))


def non_narcissistic_voters(profile: PreferenceProfile) -> list[int]:
    return [voter for voter, order in zip(profile.voters, profile.orders, strict=True) if order.peak != voter]
