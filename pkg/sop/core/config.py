"""
Configuration management with Pydantic Settings.

Uses pydantic-settings for environment variable loading with type validation.
Every group can be overridden from the environment or a local `.env` file.
"""

from functools import lru_cache
from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class SolverSettings(BaseSettings):
    """Word problem solver and brute-force oracle configuration."""

    model_config = SettingsConfigDict(env_prefix="SOP_SOLVER_")

    # Breadth-first oracle budget (node expansions)
    oracle_max_nodes: int = Field(default=100_000, ge=1, alias="SOP_ORACLE_MAX_NODES")
    # Oracle length slack, as a multiple of the maximum relation length
    oracle_length_factor: int = Field(default=2, ge=0, le=16, alias="SOP_ORACLE_LENGTH_FACTOR")


class CanonicalSettings(BaseSettings):
    """Canonical labeling configuration."""

    model_config = SettingsConfigDict(env_prefix="SOP_CANONICAL_")

    # Exhaustive relabeling is factorial in the number of generators
    # that actually occur in relations.
    max_active_generators: int = Field(default=9, ge=1, le=12, alias="SOP_MAX_ACTIVE_GENERATORS")


class ExperimentSettings(BaseSettings):
    """Monte Carlo and enumeration configuration."""

    model_config = SettingsConfigDict(env_prefix="SOP_EXPERIMENT_")

    seed: int = Field(default=0, ge=0, lt=2**64, alias="SOP_SEED")
    trials: int = Field(default=2000, ge=1, alias="SOP_TRIALS")
    workers: int = Field(default=1, ge=1, le=256, alias="SOP_WORKERS")
    enumeration_limit: int = Field(default=10**7, ge=1, alias="SOP_ENUMERATION_LIMIT")
    confidence_z: float = Field(default=1.96, gt=0.0, le=10.0, alias="SOP_CONFIDENCE_Z")


class CliSettings(BaseSettings):
    """Command-line display configuration."""

    model_config = SettingsConfigDict(env_prefix="SOP_CLI_")

    # Degrees above this are displayed as ">= cap" in text output only
    degree_display_cap: int = Field(default=64, ge=1, alias="SOP_DEGREE_DISPLAY_CAP")


class Settings(BaseSettings):
    """Main application settings."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # App info
    app_name: str = Field(default="sop", alias="SOP_APP_NAME")
    log_level: str = Field(default="WARNING", alias="SOP_LOG_LEVEL")
    log_file: Optional[str] = Field(default=None, alias="SOP_LOG_FILE")

    # Nested settings
    solver: SolverSettings = Field(default_factory=SolverSettings)
    canonical: CanonicalSettings = Field(default_factory=CanonicalSettings)
    experiment: ExperimentSettings = Field(default_factory=ExperimentSettings)
    cli: CliSettings = Field(default_factory=CliSettings)

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        v_upper = v.upper()
        if v_upper not in valid_levels:
            raise ValueError(f"log_level must be one of: {', '.join(valid_levels)}")
        return v_upper


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()


# Global config instance
config = get_settings()
