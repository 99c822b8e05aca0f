"""Application configuration management with validation and environment support."""
import os
from functools import lru_cache
from typing import Any, Dict, Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


def default_thread_count() -> int:
    """Available parallelism for the fitness worker pool."""
    try:
        return max(1, len(os.sched_getaffinity(0)))
    except AttributeError:  # pragma: no cover - non-Linux platforms
        return max(1, os.cpu_count() or 1)


class Settings(BaseSettings):
    """Process-wide settings read from ``NETBLEND_*`` variables or a ``.env`` file."""

    model_config = SettingsConfigDict(
        env_prefix="NETBLEND_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    environment: str = Field(default="development")
    log_level: str = Field(default="INFO")
    log_format: str = Field(default="auto")

    # Worker pool for fitness evaluation
    threads: int = Field(default_factory=default_thread_count)

    # Optional Prometheus textfile written after each command
    metrics_file: Optional[str] = Field(default=None)

    @field_validator("environment")
    @classmethod
    def validate_environment(cls, v: str) -> str:
        valid_environments = ["development", "production", "testing"]
        if v.lower() not in valid_environments:
            raise ValueError(f"ENVIRONMENT must be one of: {', '.join(valid_environments)}")
        return v.lower()

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        valid_levels = ["CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG"]
        if v.upper() not in valid_levels:
            raise ValueError(f"LOG_LEVEL must be one of: {', '.join(valid_levels)}")
        return v.upper()

    @field_validator("log_format")
    @classmethod
    def validate_log_format(cls, v: str) -> str:
        if v.lower() not in ("auto", "console", "json"):
            raise ValueError("LOG_FORMAT must be one of: auto, console, json")
        return v.lower()

    @field_validator("threads")
    @classmethod
    def validate_threads(cls, v: int) -> int:
        if v < 1:
            raise ValueError("THREADS must be at least 1")
        return v


@lru_cache()
def get_settings() -> Settings:
    """Get cached application settings."""
    return Settings()


def get_config_summary() -> Dict[str, Any]:
    """Get a summary of current configuration for debugging."""
    settings = get_settings()
    return {
        "environment": settings.environment,
        "log_level": settings.log_level,
        "log_format": settings.log_format,
        "threads": settings.threads,
        "metrics_file": settings.metrics_file,
    }
