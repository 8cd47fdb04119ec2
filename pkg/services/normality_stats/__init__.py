"""
Normality statistics: pattern frequencies, Hamming distance and Monte
Carlo estimates of cylinder measures.

Modules:
- frequencies.py: e(w, x, N), window tables, d_H
- montecarlo.py: vectorised float orbits, mu_h estimates, normality reports
"""

from .frequencies import FrequencyTable, frequency_table, pattern_count, pattern_counts, hamming
from .montecarlo import (
    OrbitBatch,
    MeasureEstimate,
    NormalityRow,
    OrbitHistogram,
    uniform_seeds,
    float_orbits,
    estimate_measure,
    estimate_many,
    estimate_level_one,
    random_point_digits,
    normality_report,
    orbit_histogram,
)

__all__ = [
    # Frequencies
    "FrequencyTable",
    "frequency_table",
    "pattern_count",
    "pattern_counts",
    "hamming",

    # Monte Carlo
    "OrbitBatch",
    "MeasureEstimate",
    "NormalityRow",
    "OrbitHistogram",
    "uniform_seeds",
    "float_orbits",
    "estimate_measure",
    "estimate_many",
    "estimate_level_one",
    "random_point_digits",
    "normality_report",
    "orbit_histogram",
]
