"""
Logging for monadal: one shared logger writing run summaries to the log file
and failed checks to the console.
"""

import logging
from typing import Iterable, Optional
from app.monadal_config import config

LOGGER_NAME = 'MonadalApp'
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'


class Logger:
    """Singleton wrapper around the ``MonadalApp`` logger."""

    _instance: Optional['Logger'] = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._instance._setup()
        return cls._instance

    def _setup(self):
        self.logger = logging.getLogger(LOGGER_NAME)
        self.logger.setLevel(logging.DEBUG)
        self.logger.handlers = []
        formatter = logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT)
        targets = (
            (logging.FileHandler(config.log_file, encoding=config.default_encoding), logging.INFO),
            (logging.StreamHandler(), logging.WARNING),
        )
        for handler, level in targets:
            handler.setLevel(level)
            handler.setFormatter(formatter)
            self.logger.addHandler(handler)

    def info(self, message: str):
        self.logger.info(message)

    def warning(self, message: str):
        self.logger.warning(message)

    def error(self, message: str):
        self.logger.error(message)

    def debug(self, message: str):
        self.logger.debug(message)

    def log_check(self, record):
        """Failed checks go out as warnings, passed ones at debug level."""
        if record.status == "FAIL":
            self.warning(f"Check failed: {record}")
        else:
            self.debug(f"Check passed: {record}")

    def log_checks(self, records: Iterable):
        for record in records:
            self.log_check(record)

    def log_pipeline(self, report):
        self.info(f"Pipeline {report.pipeline_id}: {report.summary_line()}")
