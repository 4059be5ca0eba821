"""Application configuration using Pydantic Settings"""

from enum import Enum

from pydantic import AliasChoices, Field, field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Environment(str, Enum):
    DEVELOPMENT = "development"
    TESTING = "testing"
    PRODUCTION = "production"


class Settings(BaseSettings):
    """Library and CLI settings loaded from QWALK_* environment variables"""

    model_config = SettingsConfigDict(
        env_prefix="QWALK_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
        populate_by_name=True,
    )

    # Application Settings
    APP_NAME: str = "qwalk-transfer"
    APP_VERSION: str = "0.1.0"
    ENVIRONMENT: Environment = Environment.PRODUCTION

    # Numerical tolerances
    CLUSTER_TOL: float = Field(
        default=1e-9, description="Eigenvalues closer than this are merged into one eigenspace"
    )
    SUPPORT_TOL: float = Field(
        default=1e-9, description="Idempotent entries within this of zero are treated as zero"
    )
    COSINE_TOL: float = Field(
        default=1e-9, description="Match tolerance for recognizing cos(p*pi/q)"
    )
    FRAME_TOL: float = Field(default=1e-12, description="Column orthonormality tolerance")
    ORACLE_TOL: float = Field(
        default=1e-7, description="Agreement required between verdicts and the time-evolution oracle"
    )

    # Search and exact-arithmetic limits
    Q_MAX_FLOOR: int = Field(
        default=64, description="Lower bound for the denominator search of rational cosines"
    )
    EXACT_MAX_DIMENSION: int = Field(
        default=48, description="Largest |X| for which exact characteristic polynomials are built"
    )
    DENSE_ORACLE_MAX_ARCS: int = Field(
        default=2100, description="Largest state space for the dense U^t oracle"
    )
    JOBS: int = Field(default=1, ge=1, description="Worker threads for all-pairs analysis")

    # Logging
    LOG_LEVEL: str = Field(
        default="WARNING",
        validation_alias=AliasChoices("QWALK_LOG", "QWALK_LOG_LEVEL", "LOG_LEVEL"),
    )
    LOG_FORMAT: str = "console"

    @field_validator("LOG_LEVEL", mode="before")
    @classmethod
    def normalize_log_level(cls, v: str) -> str:
        level = str(v).strip().upper()
        if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"Unknown log level: {v}")
        return level

    @field_validator("CLUSTER_TOL", "SUPPORT_TOL", "COSINE_TOL", "FRAME_TOL", "ORACLE_TOL")
    @classmethod
    def positive_tolerance(cls, v: float) -> float:
        if v <= 0:
            raise ValueError("Tolerances must be positive")
        return v

    @model_validator(mode="after")
    def check_tolerance_order(self) -> "Settings":
        """Support classification must be finer than the oracle check"""
        if self.SUPPORT_TOL > self.ORACLE_TOL:
            raise ValueError("SUPPORT_TOL must not exceed ORACLE_TOL")
        return self

    def default_q_max(self, dim: int) -> int:
        return max(self.Q_MAX_FLOOR, 2 * dim)

    @property
    def is_development(self) -> bool:
        return self.ENVIRONMENT == Environment.DEVELOPMENT

    @property
    def is_testing(self) -> bool:
        return self.ENVIRONMENT == Environment.TESTING


# Create global settings instance
settings = Settings()
