from preference_domain_toolbox.config.toolbox_config import ToolboxConfig, load_config

__all__ = ["ToolboxConfig", "load_config"]
