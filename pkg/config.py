"""Application configuration loaded from the environment and .env"""

from pydantic import AliasChoices, Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    # Enumeration budget (number of ORS expansions per call)
    expansion_budget: int = Field(
        default=2_000_000,
        validation_alias=AliasChoices(
            "BRIDGECENSUS_BUDGET", "BRIDGECENSUS_EXPANSION_BUDGET"
        ),
    )

    # EK table ranges
    ek_ci_max: int = 24
    ek_long_max: int = 30

    # Census concurrency
    max_workers: int | None = None
    show_progress: bool = True

    # Logging
    log_level: str = "INFO"
    log_file: str | None = None

    # Output
    schema_version: str = "1"

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="BRIDGECENSUS_",
        extra="ignore",
    )


settings = Settings()
