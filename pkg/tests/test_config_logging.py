"""
Tests for settings, run configuration and logging setup
"""

from loguru import logger

from gwpower.core.config import Settings, get_settings
from gwpower.core.logging import setup_logging
from gwpower.utils.helpers import load_run_config


class TestSettings:
    def test_defaults(self, monkeypatch):
        for name in ("DEFAULT_FIELD", "DEFAULT_SEED", "CATALOG_PATH"):
            monkeypatch.delenv(name, raising=False)
        settings = Settings(_env_file=None)
        assert settings.DEFAULT_FIELD == "Q"
        assert settings.DEFAULT_SEED == 20240601
        assert settings.CATALOG_PATH == ""

    def test_environment_override(self, monkeypatch):
        monkeypatch.setenv("DEFAULT_ORDER", "8")
        assert Settings(_env_file=None).DEFAULT_ORDER == 8

    def test_cached(self):
        assert get_settings() is get_settings()


class TestRunConfig:
    def test_sections(self):
        config = load_run_config()
        assert {"sampling", "axioms", "respects", "probe", "verify"} <= set(config)
        assert config["probe"]["max_rank"] == 4
        assert config["probe"]["max_n"] == 6

    def test_class_pools(self):
        pools = load_run_config()["sampling"]["class_pools"]
        assert pools["R"] == [1, -1]
        assert 0 not in pools["Q"]


class TestLogging:
    def test_file_sink(self, tmp_path):
        log_file = tmp_path / "logs" / "gwpower.log"
        setup_logging(level="INFO", log_file=str(log_file))
        logger.info("file sink check")
        logger.complete()
        setup_logging(level="WARNING", log_file="")
        assert "file sink check" in log_file.read_text()
