"""
Configuration module for the QDKD laboratory.
Handles environment variables and default simulation settings.
"""

from dataclasses import dataclass
import os

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


def _float_env(name: str, default: str) -> float:
    raw = os.getenv(name, default)
    try:
        return float(raw)
    except ValueError as e:
        raise ValueError(f"{name} must be a number, got {raw!r}") from e


def _int_env(name: str, default: str) -> int:
    raw = os.getenv(name, default)
    try:
        return int(raw)
    except ValueError as e:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from e


@dataclass(frozen=True)
class LabConfig:
    """Configuration class for laboratory settings."""

    log_level: str = "INFO"
    log_file: str | None = None

    # Simulation defaults
    seed: int = 20040101
    grid_step: float = 1e-3
    check_probability: float = 0.5
    sacrifice_fraction: float = 0.1
    abort_interval: int = 1000

    # Hilbert space sizes
    a_n_max: int = 1
    b_n_max: int = 2
    ancilla_dim: int = 6

    @classmethod
    def from_env(cls) -> "LabConfig":
        """Create LabConfig instance from environment variables."""
        return cls(
            log_level=os.getenv("LOG_LEVEL", "INFO"),
            log_file=os.getenv("LOG_FILE") or None,
            seed=_int_env("QDKD_SEED", "20040101"),
            grid_step=_float_env("QDKD_GRID_STEP", "1e-3"),
            check_probability=_float_env("QDKD_CHECK_PROBABILITY", "0.5"),
            sacrifice_fraction=_float_env("QDKD_SACRIFICE_FRACTION", "0.1"),
            abort_interval=_int_env("QDKD_ABORT_INTERVAL", "1000"),
            a_n_max=_int_env("QDKD_A_NMAX", "1"),
            b_n_max=_int_env("QDKD_B_NMAX", "2"),
            ancilla_dim=_int_env("QDKD_ANCILLA_DIM", "6"),
        )


# Global config instance
config = LabConfig.from_env()
