"""Runtime settings, read from COHERE_* environment variables."""

from functools import lru_cache
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Engine guards and output preferences."""

    model_config = SettingsConfigDict(env_prefix="COHERE_")

    max_atoms: int = Field(16, ge=1, description="World-enumeration guard")
    subset_limit: int = Field(10, ge=1, description="Premise count for subset enumeration")
    oracle_limit: int = Field(6, ge=1, description="Family size for the subset oracle")
    characterization_limit: int = Field(
        4, ge=0, description="Premise count for the conjunction-prevision cross-check"
    )
    decimals: int = Field(6, ge=0, le=30)
    output_format: Literal["human", "machine"] = "human"


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings()


def configure(**overrides) -> Settings:
    """Rebuild the cached settings from the environment, then apply overrides.

    None values are ignored. Overrides from an earlier call do not carry over.
    """
    get_settings.cache_clear()
    settings = get_settings()
    for key, value in overrides.items():
        if value is not None:
            setattr(settings, key, value)
    return settings
