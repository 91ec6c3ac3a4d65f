from preference_domain_toolbox.tableaux.hook_content import (
    BigCount,
    HookTable,
    count_ssyt_closed,
    count_ssyt_hook_formula,
    count_ssyt_recurrence,
    first_row_hook_ratio,
    hook_lengths_by_counting,
    hook_table,
)
from preference_domain_toolbox.tableaux.ssyt import Ssyt, enumerate_ssyt, validate_ssyt

__all__ = [
    "BigCount",
    "HookTable",
    "Ssyt",
    "count_ssyt_closed",
    "count_ssyt_hook_formula",
    "count_ssyt_recurrence",
    "enumerate_ssyt",
    "first_row_hook_ratio",
    "hook_lengths_by_counting",
    "hook_table",
    "validate_ssyt",
]
