from preference_domain_toolbox.bijection.tableau_map import profile_to_ssyt, ssyt_to_profile

__all__ = ["profile_to_ssyt", "ssyt_to_profile"]
