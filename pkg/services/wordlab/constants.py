"""
Constants for word combinatorics and the digit-family generators.
"""

# r(n, a) compares windows of length n + REPETITION_EXTRA
REPETITION_EXTRA = 2

# Integer-sequence rules accepted by the generators
RULE_POWER_POSITIONS = "power-positions"
RULE_SQUARE_POSITIONS = "square-positions"
RULE_FIBONACCI = "fibonacci-word"
RULE_EXPLICIT = "explicit"
RULE_PERIODIC = "periodic"

SEQUENCE_RULES = (
    RULE_POWER_POSITIONS,
    RULE_SQUARE_POSITIONS,
    RULE_FIBONACCI,
    RULE_EXPLICIT,
    RULE_PERIODIC,
)

# Rules that carry their own non-periodicity argument
APERIODIC_RULES = (RULE_POWER_POSITIONS, RULE_SQUARE_POSITIONS, RULE_FIBONACCI)

# Digit families
FAMILY_THM14 = "thm14"
FAMILY_NEW_I = "new-i"
FAMILY_NEW_II = "new-ii"
FAMILIES = (FAMILY_THM14, FAMILY_NEW_I, FAMILY_NEW_II)

# Letters allowed in the A sequence of family new-ii
NEW_II_LETTERS = ((2, 0), (0, 2), (-2, 0), (0, -2))

# Minimum |B_n| per family
MIN_B = {FAMILY_THM14: 3, FAMILY_NEW_I: 2, FAMILY_NEW_II: 2}
