"""
Configuration management for the monadal application.
"""

import os
from pathlib import Path
from dotenv import load_dotenv
from app.exceptions import ConfigurationError

DEFAULT_SEED = 20240917

class MonadalConfig:
    """Manages monadal configuration settings."""

    def __init__(self):
        """Initialize configuration by loading environment variables."""
        load_dotenv()
        self.load_configuration()
        self.validate()

    def load_configuration(self):
        """Load configuration from environment variables with defaults."""
        # Base Directories
        self.log_dir = Path(os.getenv('MONADAL_LOG_DIR', 'logs'))
        self.output_dir = Path(os.getenv('MONADAL_OUTPUT_DIR', 'output'))

        self.log_dir.mkdir(parents=True, exist_ok=True)
        self.output_dir.mkdir(parents=True, exist_ok=True)

        # Check Settings
        self.threads = self._safe_int_getenv('MONADAL_THREADS', 1)
        self.seed = self._safe_int_getenv('MONADAL_SEED', DEFAULT_SEED)
        self.samples = self._safe_int_getenv('MONADAL_SAMPLES', 5)
        self.max_tuples = self._safe_int_getenv('MONADAL_MAX_TUPLES', 0)
        self.default_encoding = os.getenv('MONADAL_DEFAULT_ENCODING', 'utf-8')

        # File paths
        self.log_file = self.log_dir / 'monadal.log'

    def _safe_int_getenv(self, key: str, default: int) -> int:
        """Safely get integer from environment variable."""
        try:
            value = os.getenv(key)
            if value is None:
                return default
            return int(value)
        except ValueError:
            raise ConfigurationError(f"Invalid integer value for {key}: {os.getenv(key)}")

    def validate(self):
        """Validate configuration values."""
        if self.threads < 1:
            raise ConfigurationError("MONADAL_THREADS must be at least 1")

        if self.samples < 0:
            raise ConfigurationError("MONADAL_SAMPLES must be non-negative")

        if self.max_tuples < 0:
            raise ConfigurationError("MONADAL_MAX_TUPLES must be non-negative")

    def get_log_file_path(self) -> Path:
        """Get the log file path."""
        return self.log_file

    def get_output_dir(self) -> Path:
        """Get the directory dumps and reports are written to."""
        return self.output_dir

# Global configuration instance
config = MonadalConfig()
