import logging
import os
import pathlib
from typing import Union

import dotenv

dotenv.load_dotenv()

DEFAULT_FORMATTER = logging.Formatter(
    "%(asctime)s :: [%(name)-12s :: %(levelname)-8s]  %(module)-16s :: %(message)s", datefmt="%Y-%m-%d %H:%M:%S"
)

VERBOSE_FORMATTER = logging.Formatter(
    "%(asctime)s :: [%(name)-12s :: %(levelname)-8s] %(module)s.%(funcName)s:%(lineno)d :: %(message)s",
    datefmt="%Y-%m-%d %H:%M:%S",
)

SIMPLE_FORMATTER = logging.Formatter("%(levelname)-8s :: %(message)s")

VERBOSE = bool(int(os.environ.get("PREFDOMAIN_VERBOSE_LOGGER", 0)))

LOGGER_LEVEL = os.environ.get("PREFDOMAIN_LOGGER_LEVEL", "WARNING").upper()

LOGGER_TYPE = os.environ.get("PREFDOMAIN_LOGGER_TYPE", "default")

_LOGGING_FORMATTERS = {"default": DEFAULT_FORMATTER, "verbose": VERBOSE_FORMATTER, "simple": SIMPLE_FORMATTER}

_LOGGER_TYPE = {
    "default": {"is_verbose": False, "level": LOGGER_LEVEL, "formatter": _LOGGING_FORMATTERS["default"]},
    "verbose": {"is_verbose": True, "level": logging.DEBUG, "formatter": _LOGGING_FORMATTERS["verbose"]},
    "simple": {"is_verbose": False, "level": logging.INFO, "formatter": _LOGGING_FORMATTERS["simple"]},
    "custom": {
        "is_verbose": VERBOSE,
        "level": LOGGER_LEVEL,
        "formatter": _LOGGING_FORMATTERS["verbose"] if VERBOSE else _LOGGING_FORMATTERS["default"],
    },
}

PROGRESS_LEVEL_NUM = 60
logging.addLevelName(PROGRESS_LEVEL_NUM, "PROGRESS")

_LOGGERS: dict[str, "CustomLogger"] = {}


class CustomLogger(logging.Logger):
    """
    Logger used by every module of the toolbox.

    Messages go to stderr so that command line reports written on stdout stay byte-stable.
    A file handler is attached only when a directory is given, either explicitly or through
    the ``PREFDOMAIN_LOGGING_FILE_PATH`` environment variable.

    Logger types:
    - 'default' : level from PREFDOMAIN_LOGGER_LEVEL (WARNING when unset), default formatter.
    - 'verbose' : DEBUG level, verbose formatter, PROGRESS records are shown.
    - 'simple'  : INFO level, short formatter.
    - 'custom'  : verbosity from PREFDOMAIN_VERBOSE_LOGGER, level from PREFDOMAIN_LOGGER_LEVEL.

    PROGRESS records (level 60) are emitted by long enumerations; they are dropped unless the
    logger type is verbose.
    """

    def __init__(
        self,
        name: str,
        logger_type: str = LOGGER_TYPE,
        file_path: Union[str, pathlib.Path] = None,
        logger_file_name: str = "preference_domain.log",
    ):
        if logger_type not in _LOGGER_TYPE:
            raise ValueError(f"Unknown logger type '{logger_type}'. Expected one of {sorted(_LOGGER_TYPE)}.")
        super().__init__(name, level=_LOGGER_TYPE[logger_type]["level"])
        self._logger_type: str = None
        self._verbose_logger_type: bool = False
        self.formatter: logging.Formatter = None
        self._file_path: str = None

        self._setup_logging_file_for_output(file_path, f"{name}_{logger_file_name}")
        self.set_logger_type(logger_type)

    @property
    def logger_type(self) -> str:
        return self._logger_type

    @property
    def file_path(self) -> str | None:
        return self._file_path

    def set_logger_type(self, logger_type: str):
        """
        Switches the logger type and rebuilds the handlers accordingly.

        :param logger_type: one of 'default', 'verbose', 'simple', 'custom'.
        :type logger_type: str
        """
        if logger_type not in _LOGGER_TYPE:
            raise ValueError(f"Unknown logger type '{logger_type}'. Expected one of {sorted(_LOGGER_TYPE)}.")
        self._logger_type = logger_type
        self._set_logger_from_type()
        self._remove_handlers()
        self._set_logger_handlers()

    def setLevel(self, level):
        super().setLevel(level)
        # not registered with the logging manager, so its level cache is never cleared for us
        self._cache.clear()

    def close(self):
        self._remove_handlers()

    def _remove_handlers(self):
        for handler in list(self.handlers):
            self.removeHandler(handler)
            handler.close()

    def _setup_logging_file_for_output(self, logging_file_path: Union[str, pathlib.Path] = None, file_name: str = None):
        """
        Resolves the log file location. Without an explicit directory and without
        PREFDOMAIN_LOGGING_FILE_PATH, no file is written.
        """
        if logging_file_path is None:
            logging_file_path = os.getenv("PREFDOMAIN_LOGGING_FILE_PATH")
        if logging_file_path is None:
            self._file_path = None
            return
        output_path = pathlib.Path(logging_file_path)
        output_path.mkdir(parents=True, exist_ok=True)
        self._file_path = os.path.join(output_path, file_name)

    def _set_logger_handlers(self):
        handler = logging.StreamHandler()
        handler.setFormatter(self.formatter)
        handler.addFilter(self._filter_logs)
        self.addHandler(handler)

        if self._file_path:
            self._add_file_handler(self._file_path)

    def _set_logger_from_type(self):
        logger_params = _LOGGER_TYPE[self._logger_type]
        self._verbose_logger_type = bool(logger_params["is_verbose"])
        self.formatter = logger_params["formatter"]
        self.setLevel(logger_params["level"])

    def _filter_logs(self, log: logging.LogRecord) -> bool:
        """PROGRESS records pass only for verbose loggers."""
        if self._verbose_logger_type:
            return True
        return log.levelno != PROGRESS_LEVEL_NUM

    def _add_file_handler(self, file_path: str):
        file_handler = logging.FileHandler(file_path, encoding="utf-8")
        file_handler.setFormatter(self.formatter)
        file_handler.addFilter(self._filter_logs)
        self.addHandler(file_handler)

    def progress(self, msg: str, *args, **kwargs):
        if self.isEnabledFor(PROGRESS_LEVEL_NUM):
            self._log(PROGRESS_LEVEL_NUM, msg, args, **kwargs)


def get_logger(name: str, logger_type: str = None) -> CustomLogger:
    """Returns the shared logger registered under ``name``, creating it on first use."""
    if name not in _LOGGERS:
        _LOGGERS[name] = CustomLogger(name, logger_type=logger_type or LOGGER_TYPE)
    elif logger_type is not None and _LOGGERS[name].logger_type != logger_type:
        _LOGGERS[name].set_logger_type(logger_type)
    return _LOGGERS[name]


def set_type_for_all(logger_type: str):
    for logger in _LOGGERS.values():
        logger.set_logger_type(logger_type)


def set_level_for_all(level: Union[int, str]):
    for logger in _LOGGERS.values():
        logger.setLevel(level)
