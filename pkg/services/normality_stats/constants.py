"""
Constants for pattern frequencies and the Monte Carlo cylinder estimates.
"""

from config.settings import settings

# Orbit points whose rounding is this close to a half-integer line are skipped
BOUNDARY_MARGIN = settings.MONTE_CARLO_BOUNDARY_MARGIN

# Default Monte Carlo run
DEFAULT_SAMPLES = settings.DEFAULT_SAMPLES
DEFAULT_ORBIT_LENGTH = settings.DEFAULT_ORBIT_LENGTH
DEFAULT_SEED = settings.DEFAULT_SEED

# Below this modulus an orbit point is treated as having hit 0
ZERO_GUARD = 1e-300

# Default bins per side of the orbit histogram grid
DEFAULT_HISTOGRAM_BINS = 8
