"""
Tests for monadal configuration management
"""
import pytest
from app.monadal_config import DEFAULT_SEED, MonadalConfig
from app.exceptions import ConfigurationError


class TestMonadalConfig:
    """Test cases for the MonadalConfig class"""

    def test_config_initialization_with_defaults(self, clean_environment):
        """Test config initializes with default values"""
        config = MonadalConfig()

        assert config.log_dir is not None
        assert config.output_dir is not None
        assert config.threads == 1
        assert config.seed == DEFAULT_SEED == 20240917
        assert config.samples == 5
        assert config.max_tuples == 0
        assert config.default_encoding == 'utf-8'

    def test_config_load_from_env(self, clean_environment, monkeypatch, tmp_path):
        """Test config loads values from environment variables"""
        monkeypatch.setenv("MONADAL_LOG_DIR", str(tmp_path / "logs"))
        monkeypatch.setenv("MONADAL_OUTPUT_DIR", str(tmp_path / "out"))
        monkeypatch.setenv("MONADAL_THREADS", "4")
        monkeypatch.setenv("MONADAL_SEED", "7")
        monkeypatch.setenv("MONADAL_SAMPLES", "2")
        monkeypatch.setenv("MONADAL_MAX_TUPLES", "16")

        config = MonadalConfig()

        assert config.log_dir == tmp_path / "logs"
        assert config.get_output_dir() == tmp_path / "out"
        assert config.threads == 4
        assert config.seed == 7
        assert config.samples == 2
        assert config.max_tuples == 16

    def test_config_creates_directories(self, clean_environment, tmp_path, monkeypatch):
        """Test config creates log and output directories"""
        log_dir = tmp_path / "logs"
        output_dir = tmp_path / "output"
        monkeypatch.setenv("MONADAL_LOG_DIR", str(log_dir))
        monkeypatch.setenv("MONADAL_OUTPUT_DIR", str(output_dir))

        MonadalConfig()

        assert log_dir.exists()
        assert output_dir.exists()

    def test_config_log_file_path(self, clean_environment, tmp_path, monkeypatch):
        """Test config returns correct log file path"""
        log_dir = tmp_path / "logs"
        monkeypatch.setenv("MONADAL_LOG_DIR", str(log_dir))

        log_file = MonadalConfig().get_log_file_path()

        assert log_file.parent == log_dir
        assert log_file.name == "monadal.log"

    @pytest.mark.parametrize("key", ["MONADAL_THREADS", "MONADAL_SEED",
                                     "MONADAL_SAMPLES", "MONADAL_MAX_TUPLES"])
    def test_config_invalid_integer(self, clean_environment, monkeypatch, key):
        """Test non-integer settings raise ConfigurationError"""
        monkeypatch.setenv(key, "not_a_number")

        with pytest.raises(ConfigurationError):
            MonadalConfig()

    def test_config_zero_threads(self, clean_environment, monkeypatch):
        """Test zero worker threads raises ConfigurationError"""
        monkeypatch.setenv("MONADAL_THREADS", "0")

        with pytest.raises(ConfigurationError):
            MonadalConfig()

    def test_config_negative_samples(self, clean_environment, monkeypatch):
        """Test negative samples raises ConfigurationError"""
        monkeypatch.setenv("MONADAL_SAMPLES", "-1")

        with pytest.raises(ConfigurationError):
            MonadalConfig()

    def test_config_negative_max_tuples(self, clean_environment, monkeypatch):
        """Test negative max_tuples raises ConfigurationError"""
        monkeypatch.setenv("MONADAL_MAX_TUPLES", "-5")

        with pytest.raises(ConfigurationError):
            MonadalConfig()

    def test_config_custom_encoding(self, clean_environment, monkeypatch):
        """Test config with custom encoding"""
        monkeypatch.setenv("MONADAL_DEFAULT_ENCODING", "ascii")
        assert MonadalConfig().default_encoding == "ascii"
