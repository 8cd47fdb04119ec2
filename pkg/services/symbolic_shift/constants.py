"""
Constants for the symbolic shift.

Word classification tags, state naming and the search limits of the
transition graph, read from the central settings.
"""

from config.settings import settings

# Classification tags
REGULAR_FULL = "regular-full"
REGULAR_NOT_FULL = "regular-not-full"
IRREGULAR_VALID = "irregular-valid"
EXTREMELY_IRREGULAR = "extremely-irregular"
INVALID = "invalid"
VALID_UNKNOWN_DEGENERATE = "valid-unknown-degenerate"

WORD_TAGS = (
    REGULAR_FULL,
    REGULAR_NOT_FULL,
    IRREGULAR_VALID,
    EXTREMELY_IRREGULAR,
    INVALID,
    VALID_UNKNOWN_DEGENERATE,
)

REGULAR_TAGS = (REGULAR_FULL, REGULAR_NOT_FULL)

# Name of the full open square
SQUARE_STATE = "SQ"

# Number of open prototype sets
CATALOGUE_SIZE = 13

# Membership grid used to recognise a computed open prototype
SIGNATURE_GRID = settings.SIGNATURE_GRID

# Brute-force validation radius of the transition graph
DIGIT_SCAN_RADIUS = settings.DIGIT_SCAN_RADIUS

# Degenerate steps tracked by the extremely-irregular point test
EXTREME_DEPTH_BOUND = settings.EXTREME_DEPTH_BOUND

# Search box (max |Re|, |Im|) of find_full_extension
FULL_EXTENSION_SEARCH_RADIUS = settings.FULL_EXTENSION_SEARCH_RADIUS

# Holes of the inverted square never reach digits beyond this box
HOLE_SCAN_RADIUS = 4
