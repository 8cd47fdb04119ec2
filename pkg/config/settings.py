"""
Configuration settings for the Hurwitz continued fraction toolkit.
Centralized configuration management for the library, the CLI and the API.
"""

import os
from typing import Optional


def _env_int(name: str, default: int) -> int:
    """Read an integer override from the environment, keeping the default on bad input."""
    raw: Optional[str] = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        return default


class Settings:
    """
    Application settings and configuration.

    Every tunable of the toolkit lives here as a class attribute. A few of
    them can be overridden from the environment:

    - HCF_PRECISION_CAP: cap (in bits) of the ball-refinement loop
    - HCF_FIELD_D: squarefree d of the exact coordinate field Q(sqrt d)
    - HCF_LOG_LEVEL: logging level name
    """

    # Application settings
    APP_NAME: str = "Hurwitz CF Toolkit"
    APP_VERSION: str = "1.0.0"

    # CORS settings (HTTP surface)
    CORS_ORIGINS: list = [
        "http://localhost:3000",
        "http://localhost:5173",
        "*"
    ]

    # Server settings
    HOST: str = "127.0.0.1"
    PORT: int = 8001

    # Logging
    LOG_LEVEL: str = os.getenv("HCF_LOG_LEVEL", "WARNING").upper()

    # Exact arithmetic: coordinates live in Q(sqrt FIELD_D)
    FIELD_D: int = _env_int("HCF_FIELD_D", 3)

    # Ball arithmetic precision policy (bits)
    START_PRECISION_BITS: int = 128
    PRECISION_CAP_BITS: int = _env_int("HCF_PRECISION_CAP", 4096)

    # Geometry
    PROBE_GRID: tuple = (16, 48)  # witness grids of the interior test, coarse then fine
    FALLBACK_BOX: int = 4  # half-width of the sampling box for unbounded regions
    SIGNATURE_GRID: int = 16  # membership grid used to match prototype states

    # Symbolic shift
    DIGIT_SCAN_RADIUS: int = 10  # brute-force validation radius of the transition graph
    EXTREME_DEPTH_BOUND: int = 64  # degenerate steps tracked before giving up
    FULL_EXTENSION_SEARCH_RADIUS: int = 12

    # Regularizer
    REGULARIZE_SLACK: int = 4

    # SVG output
    SVG_VIEWBOX: float = 1.6
    SVG_PANEL_SIZE: int = 320

    # Monte Carlo statistics
    MONTE_CARLO_BOUNDARY_MARGIN: float = 1e-9
    DEFAULT_SAMPLES: int = 2000
    DEFAULT_ORBIT_LENGTH: int = 200
    DEFAULT_SEED: int = 20240601

    # Corpus
    CORPUS_DIR: str = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "corpus")


# Global settings instance
settings = Settings()
