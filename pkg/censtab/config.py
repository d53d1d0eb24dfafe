from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings
from typing import List, Optional


class Settings(BaseSettings):
    """Ambient configuration settings."""

    # Logging
    log_level: str = "WARNING"
    log_file: Optional[str] = None

    # Development
    debug: bool = False

    # Check defaults
    default_n_max_margin: int = 4
    default_relation_rings: List[str] = ["F2", "F3", "Z"]

    class Config:
        env_file = ".env"
        env_prefix = "CENSTAB_"
        case_sensitive = False


class Limits(BaseModel):
    """Resource caps for one run. Set from command-line flags only."""

    hom_cap: int = Field(default=100_000, ge=1)
    ambient_cap: int = Field(default=200_000, ge=1)


# Global settings instance
settings = Settings()

DEFAULT_LIMITS = Limits()
