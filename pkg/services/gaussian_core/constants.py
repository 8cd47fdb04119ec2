"""
Constants for the Gaussian core.

Field selection, the excluded small digits and the lattice neighbourhood
used by every geometric construction.
"""

from config.settings import settings

# Session field Q(sqrt d)
FIELD_D = settings.FIELD_D

# Gaussian integers that are never HCF digits
EXCLUDED_DIGITS = ((0, 0), (1, 0), (0, 1), (-1, 0), (0, -1))

# Units of Z[i], counter-clockwise from 1
UNITS = ((1, 0), (0, 1), (-1, 0), (0, -1))

# Diagonal neighbours, counter-clockwise from 1+i
DIAGONALS = ((1, 1), (-1, 1), (-1, -1), (1, -1))

# The eight lattice neighbours of 0
NEIGHBOURS = UNITS + DIAGONALS
