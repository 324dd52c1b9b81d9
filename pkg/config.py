from pydantic_settings import BaseSettings, SettingsConfigDict
from functools import lru_cache
from typing import Optional


class Settings(BaseSettings):
    # Stable rank search
    witness_bound: Optional[int] = None

    # Random campaigns
    default_trials: int = 100
    default_maxlen: int = 30
    default_seed: int = 42
    report_timing: bool = False

    # Application
    log_level: str = "WARNING"
    app_name: str = "chv"
    app_version: str = "1.0.0"

    model_config = SettingsConfigDict(
        env_prefix="CHV_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
    )


@lru_cache()
def get_settings():
    return Settings()
