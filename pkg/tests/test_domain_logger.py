# tests/test_domain_logger.py

import logging
import os

import pytest

from preference_domain_toolbox.domain_logging import PROGRESS_LEVEL_NUM, CustomLogger, get_logger, set_level_for_all


def test_default_logger_initialization():
    logger = CustomLogger(name="test_logger")
    assert logger.name == "test_logger"
    assert logger.logger_type == "default"
    assert isinstance(logger.formatter, logging.Formatter)


def test_logger_without_file_path_writes_no_file(monkeypatch):
    monkeypatch.delenv("PREFDOMAIN_LOGGING_FILE_PATH", raising=False)
    logger = CustomLogger(name="no_file_logger")
    assert logger.file_path is None
    assert all(not isinstance(handler, logging.FileHandler) for handler in logger.handlers)


def test_logger_with_custom_type():
    logger = CustomLogger(name="simple_logger", logger_type="simple")
    assert logger.logger_type == "simple"
    assert logger.level == logging.INFO
    assert logger.formatter._fmt == "%(levelname)-8s :: %(message)s"


def test_unknown_logger_type_is_rejected():
    with pytest.raises(ValueError):
        CustomLogger(name="bad_logger", logger_type="loud")


def test_logger_file_path_creation(tmp_path):
    target = tmp_path / "logs"
    logger = CustomLogger(name="file_logger", file_path=target, logger_file_name="test.log")
    assert logger.file_path == os.path.join(target, "file_logger_test.log")
    assert target.exists()
    logger.warning("written to file")
    logger.close()
    assert "written to file" in (target / "file_logger_test.log").read_text(encoding="utf-8")


def test_progress_records_filtered_unless_verbose(tmp_path):
    logger = CustomLogger(name="progress_logger", file_path=tmp_path, logger_file_name="p.log")
    logger.progress("hidden progress")
    logger.set_logger_type("verbose")
    logger.progress("shown progress")
    logger.close()
    content = (tmp_path / "progress_logger_p.log").read_text(encoding="utf-8")
    assert "hidden progress" not in content
    assert "shown progress" in content
    assert logging.getLevelName(PROGRESS_LEVEL_NUM) == "PROGRESS"


def test_set_level_applies_immediately():
    logger = CustomLogger(name="level_logger", logger_type="default")
    logger.setLevel("ERROR")
    assert not logger.isEnabledFor(logging.WARNING)
    logger.setLevel("DEBUG")
    assert logger.isEnabledFor(logging.DEBUG)


def test_get_logger_returns_shared_instance():
    first = get_logger("shared_logger")
    second = get_logger("shared_logger")
    assert first is second
    assert len(first.handlers) == 1


def test_set_level_for_all():
    logger = get_logger("bulk_logger")
    set_level_for_all("ERROR")
    assert logger.level == logging.ERROR
    set_level_for_all("WARNING")
    assert logger.level == logging.WARNING
