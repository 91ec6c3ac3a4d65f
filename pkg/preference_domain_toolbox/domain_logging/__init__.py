from preference_domain_toolbox.domain_logging.domain_logger import (
    PROGRESS_LEVEL_NUM,
    CustomLogger,
    get_logger,
    set_level_for_all,
    set_type_for_all,
)

__all__ = ["CustomLogger", "PROGRESS_LEVEL_NUM", "get_logger", "set_level_for_all", "set_type_for_all"]
