"""
HCF engine: expansions, convergents and certified evaluation.

Modules:
- constants.py: precision policy and psi
- balls.py: ComplexBall (mpmath midpoint-radius balls)
- expansion.py: the Gauss map, exact and ball expansions
- convergents.py: p_n/q_n, finite evaluation, mirror formula, tail identity
- evaluation.py: lambda_bar and lambda_valid
"""

from .constants import PSI
from .balls import ComplexBall
from .expansion import Expansion, gauss_map, expand, expansion_seq, expand_ball, orbit
from .convergents import (
    ConvergentPair,
    convergents,
    evaluate_finite,
    continued_fraction,
    mirror,
    tail_identity,
    convergent_law_violations,
    gaussian_rational_json,
)
from .evaluation import Evaluation, lambda_bar, lambda_valid, prefix_length_for

__all__ = [
    # Balls
    "PSI",
    "ComplexBall",

    # Expansion
    "Expansion",
    "gauss_map",
    "expand",
    "expansion_seq",
    "expand_ball",
    "orbit",

    # Convergents
    "ConvergentPair",
    "convergents",
    "evaluate_finite",
    "continued_fraction",
    "mirror",
    "tail_identity",
    "convergent_law_violations",
    "gaussian_rational_json",

    # Evaluation
    "Evaluation",
    "lambda_bar",
    "lambda_valid",
    "prefix_length_for",
]
