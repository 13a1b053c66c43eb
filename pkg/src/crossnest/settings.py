# src/crossnest/settings.py
from __future__ import annotations

import logging
from functools import lru_cache
from pathlib import Path

from pydantic import Field, field_validator
from pydantic_settings import (
    BaseSettings,
    PydanticBaseSettingsSource,
    SettingsConfigDict,
    YamlConfigSettingsSource,
)

log = logging.getLogger("crossnest.settings")

_DEFAULTS_YAML = Path(__file__).resolve().parent / "config" / "default.yaml"


class Settings(BaseSettings):
    """Runtime knobs. Precedence: init kwargs > CROSSNEST_* env / .env > config/default.yaml."""

    model_config = SettingsConfigDict(
        env_prefix="CROSSNEST_",
        env_file=".env",
        extra="ignore",
        yaml_file=_DEFAULTS_YAML,
    )

    # count cache
    CACHE_PATH: Path = Field(default=Path("~/.cache/crossnest/counts.json"))

    # brute-force bounds
    PARTITION_BOUND: int = Field(default=10, ge=0)
    MATCHING_BOUND: int = Field(default=14, ge=0)
    ORACLE_MAX_ARCS: int = Field(default=16, ge=1)
    ORACLE_MAX_BLOCKS: int = Field(default=12, ge=1)

    # numeric eigen check
    EIGEN_MAX_DIM: int = Field(default=400, ge=1)
    EIGEN_TOLERANCE: float = Field(default=1e-6, gt=0)

    # sharding & memo
    WORKERS: int = Field(default=4, ge=1)
    WALK_MEMO_SIZE: int = Field(default=256, ge=1)

    @field_validator("CACHE_PATH", mode="after")
    @classmethod
    def _expand(cls, v: Path) -> Path:
        return v.expanduser()

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        return (
            init_settings,
            env_settings,
            dotenv_settings,
            YamlConfigSettingsSource(settings_cls),
            file_secret_settings,
        )

    def model_post_init(self, __context: object) -> None:
        log.debug(
            "settings.loaded",
            extra={
                "cache_path": str(self.CACHE_PATH),
                "partition_bound": self.PARTITION_BOUND,
                "matching_bound": self.MATCHING_BOUND,
                "oracle_max_arcs": self.ORACLE_MAX_ARCS,
                "workers": self.WORKERS,
            },
        )


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings()
