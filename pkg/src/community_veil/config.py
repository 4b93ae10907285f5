"""
Configuration management for Community-Veil.

Uses pydantic-settings for environment variable support and validation.
"""

from pathlib import Path
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="COMMUNITY_VEIL_",
        case_sensitive=False,
    )

    # Application
    app_name: str = "Community-Veil"
    debug: bool = False
    log_level: str = "INFO"

    # Data
    data_dir: Path = Field(default=Path("data"))
    output_dir: Path = Field(default=Path("results"))

    # Detection
    default_detector: str = "louvain"
    default_seed: int = 1
    label_propagation_max_sweeps: int = Field(default=100, ge=1)

    # Deception / recovery
    budget_fraction: float = Field(default=0.3, gt=0.0, le=1.0)
    recovery_mode: Literal["oracle", "redetect"] = "oracle"
    full_recompute: bool = False  # score graph-level losses from scratch

    # Spectral similarity
    energy_threshold: float = Field(default=0.9, gt=0.0, le=1.0)
    eigen_tolerance: float = 1e-9  # negative eigenvalues above -tol are clamped to 0

    def resolve_dataset(self, path: Path) -> Path:
        """Resolve a dataset path, falling back to data_dir for relative names."""
        if path.exists() or path.is_absolute():
            return path
        candidate = self.data_dir / path
        return candidate if candidate.exists() else path

    def ensure_directories(self) -> None:
        """Create the output directory if it doesn't exist."""
        self.output_dir.mkdir(parents=True, exist_ok=True)


# Global settings instance
settings = Settings()
