"""
Tests for logger functionality
"""
import logging
from pathlib import Path
from unittest.mock import Mock, patch
from app.check_record import CheckRecord
from app.logger import Logger
from app.report import Report


class TestLogger:
    """Test cases for Logger class"""

    def test_logger_singleton(self):
        """Test that Logger is a singleton"""
        assert Logger() is Logger()

    def test_logger_initialization(self):
        """Test logger initializes correctly"""
        logger = Logger()
        assert isinstance(logger.logger, logging.Logger)
        assert len(logger.logger.handlers) == 2

    def test_console_handler_is_quiet(self):
        """Test the console handler only shows warnings and above"""
        levels = sorted(h.level for h in Logger().logger.handlers)
        assert levels == [logging.INFO, logging.WARNING]

    def test_logger_methods(self):
        """Test all logger methods"""
        logger = Logger()

        logger.info("Test info message")
        logger.warning("Test warning message")
        logger.error("Test error message")
        logger.debug("Test debug message")

    def test_log_check_levels(self):
        """Test failed checks are warnings and passed checks are debug"""
        logger = Logger()
        with patch.object(logger, 'warning') as warning, patch.object(logger, 'debug') as debug:
            logger.log_check(CheckRecord("zigzags", "(0)", "FAIL", "(0,0): 1 != 0"))
            logger.log_check(CheckRecord("zigzags", "(1)", "PASS"))
        warning.assert_called_once()
        assert "zigzags @ (0)" in warning.call_args[0][0]
        debug.assert_called_once()

    def test_log_pipeline(self):
        """Test the pipeline summary is logged at info level"""
        logger = Logger()
        report = Report("check-category:vec")
        report.expect("tensor_unit", "all", True)
        with patch.object(logger, 'info') as info:
            logger.log_pipeline(report)
        info.assert_called_once_with("Pipeline check-category:vec: PASS: 1/1 checks passed")

    def test_logger_with_temp_file(self, tmp_path):
        """Test logger writes to the configured file"""
        temp_path = tmp_path / "monadal.log"
        try:
            with patch('app.logger.config') as mock_config:
                mock_config.log_file = temp_path
                mock_config.default_encoding = 'utf-8'

                Logger._instance = None
                logger = Logger()
                logger.info("Test message")

                assert temp_path.exists()
        finally:
            for handler in Logger().logger.handlers:
                handler.close()
            Logger._instance = None

    def test_log_check_accepts_duck_typed_records(self):
        """Test any object with a status can be logged"""
        record = Mock(status="PASS")
        Logger().log_check(record)
