"""
Word lab: repetition exponent, prefix decompositions, shuffles and the
digit-family generators.

Modules:
- combinatorics.py: r(n, a), W U V U search, shuffles
- generators.py: integer-sequence rules and the thm14 / new families
- growth.py: the convergent growth inequality
"""

from .combinatorics import (
    RepetitionProfile,
    WUVDecomposition,
    repetition,
    repetition_by_index,
    repetition_profile,
    find_wuv,
    normalize_even,
    shuffle,
    alternating_twos,
)
from .generators import SequenceRule, a_sequence, theorem14_digits, gen_theorem14, gen_theorem_new
from .growth import GrowthCheck, check_growth_inequality

__all__ = [
    # Combinatorics
    "RepetitionProfile",
    "WUVDecomposition",
    "repetition",
    "repetition_by_index",
    "repetition_profile",
    "find_wuv",
    "normalize_even",
    "shuffle",
    "alternating_twos",

    # Generators
    "SequenceRule",
    "a_sequence",
    "theorem14_digits",
    "gen_theorem14",
    "gen_theorem_new",

    # Growth
    "GrowthCheck",
    "check_growth_inequality",
]
