from preference_domain_toolbox.canonical import Relabeling
from preference_domain_toolbox.core import Axis, PreferenceProfile
from preference_domain_toolbox.recognition import Witness
from preference_domain_toolbox.tableaux import Ssyt


def format_profile(profile: PreferenceProfile) -> str:
    lines = [str(profile.n)] + [" ".join(str(a) for a in ranking) for ranking in profile.rankings]
    return "\n".join(lines) + "\n"


def format_tableau(tableau: Ssyt) -> str:
    return f"{tableau.order}\n{tableau}\n"


def format_relabeling(relabeling: Relabeling) -> str:
    return f"# relabeling: {relabeling}\n"


def format_axis(axis: Axis) -> str:
    return " ▷ ".join(str(a) for a in axis)


def format_witness(witness: Witness) -> str:
    return witness.describe()
