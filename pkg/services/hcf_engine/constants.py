"""
Constants for the HCF engine: the ball precision policy and the growth constant.
"""

import mpmath

from config.settings import settings

# Precision policy for ball arithmetic (bits)
START_PRECISION_BITS = settings.START_PRECISION_BITS
PRECISION_CAP_BITS = settings.PRECISION_CAP_BITS

# Guard bits added on top of the precision a target radius needs
GUARD_BITS = 64

# psi = sqrt((1 + sqrt 5)/2); |q_n| >= psi^(n-1)
PSI = mpmath.sqrt((1 + mpmath.sqrt(5)) / 2)
