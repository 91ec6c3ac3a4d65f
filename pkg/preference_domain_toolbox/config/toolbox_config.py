import dataclasses
import os
import pathlib
from dataclasses import dataclass, field
from typing import Union

import dotenv
from omegaconf import DictConfig, OmegaConf

from preference_domain_toolbox.exceptions import InvalidArgumentError

dotenv.load_dotenv()

_ENV_PREFIX = "PREFDOMAIN_"


@dataclass(frozen=True)
class ToolboxConfig:
    """Desk-scale bounds shared by the searches, enumerators and the command line."""

    brute_force_ceiling: int = field(
        default=5, metadata={"description": "Largest n accepted by the brute-force narcissistic generator"}
    )
    exhaustive_search_limit: int = field(
        default=8, metadata={"description": "Largest n for exhaustive axis / voter-order search"}
    )
    witness_search_limit: int = field(
        default=8, metadata={"description": "Largest n accepted by an explicit find_witness call"}
    )
    spn_enumeration_limit: int = field(default=7, metadata={"description": "Largest n streamed by enumerate spn"})
    scn_enumeration_limit: int = field(default=8, metadata={"description": "Largest n streamed by enumerate scn"})
    ssyt_enumeration_limit: int = field(default=7, metadata={"description": "Largest order streamed by enumerate ssyt"})
    progress_every: int = field(default=100_000, metadata={"description": "Items between PROGRESS log records"})

    def __post_init__(self):
        for config_field in dataclasses.fields(self):
            value = getattr(self, config_field.name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise InvalidArgumentError(f"{config_field.name} must be a positive integer, got {value!r}")

    @classmethod
    def field_names(cls) -> list[str]:
        return [f.name for f in dataclasses.fields(cls)]

    @classmethod
    def from_config(cls, config: DictConfig | dict) -> "ToolboxConfig":
        """
        Builds a configuration from an omegaconf ``DictConfig`` or a plain dictionary.
        With omegaconf, the values may sit under a ``toolbox`` section:

        toolbox:
            brute_force_ceiling: 5
            exhaustive_search_limit: 8

        Unknown keys are rejected.
        """
        try:
            match config:
                case DictConfig():
                    section = config.toolbox if "toolbox" in config else config
                    values = OmegaConf.to_container(section, resolve=True)
                case dict():
                    values = config.get("toolbox", config)
                case _:
                    raise TypeError("Expected a DictConfig or dict")
            return cls(**values)
        except InvalidArgumentError:
            raise
        except TypeError as e:
            raise InvalidArgumentError(f"Invalid toolbox configuration: {e}") from e

    @classmethod
    def from_env(cls) -> "ToolboxConfig":
        """Defaults overridden by PREFDOMAIN_<FIELD_NAME> environment variables."""
        values = {}
        for name in cls.field_names():
            raw = os.environ.get(f"{_ENV_PREFIX}{name.upper()}")
            if raw is None:
                continue
            try:
                values[name] = int(raw)
            except ValueError as e:
                raise InvalidArgumentError(f"{_ENV_PREFIX}{name.upper()} must be an integer, got {raw!r}") from e
        return cls(**values)

    def with_overrides(self, **overrides) -> "ToolboxConfig":
        return dataclasses.replace(self, **overrides)


def load_config(path: Union[str, pathlib.Path] = None) -> ToolboxConfig:
    """
    Loads the toolbox configuration. Environment overrides are applied first, then the YAML
    file, if given, is merged on top.

    :param path: optional YAML file, with or without a ``toolbox`` section.
    :return: the merged configuration.
    """
    base = ToolboxConfig.from_env()
    if path is None:
        return base
    path = pathlib.Path(path)
    if not path.exists():
        raise InvalidArgumentError(f"Configuration file {path} does not exist.")
    loaded = OmegaConf.load(path)
    section = loaded.toolbox if "toolbox" in loaded else loaded
    merged = OmegaConf.merge(OmegaConf.create(dataclasses.asdict(base)), section)
    return ToolboxConfig.from_config(merged)
