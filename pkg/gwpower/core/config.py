from functools import lru_cache

from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Run settings from environment variables"""

    # App Info
    APP_NAME: str = "gwpower"
    APP_VERSION: str = "1.0.0"

    # Catalog (empty means the packaged catalog)
    CATALOG_PATH: str = ""

    # Defaults for commands
    DEFAULT_FIELD: str = "Q"
    DEFAULT_ORDER: int = 16
    DEFAULT_SEED: int = 20240601
    AXIOM_CASES: int = 500

    # Logging
    LOG_LEVEL: str = "INFO"
    LOG_FILE: str = ""

    class Config:
        env_file = ".env"
        case_sensitive = True
        extra = "ignore"  # Ignore extra fields in .env


@lru_cache()
def get_settings() -> Settings:
    """Cached settings instance"""
    return Settings()
