"""
Constants for the regularizer.
"""

from config.settings import settings

# Breakpoints are scanned up to out_len + REGULARIZE_SLACK
REGULARIZE_SLACK = settings.REGULARIZE_SLACK

# Digits of the tail used when checking a breakpoint value numerically
BREAKPOINT_TAIL_DIGITS = 80

# Trace record keys, in emission order
TRACE_FIELDS = ("N", "j", "digit", "replacement", "mir", "tail_symmetry", "prefix")
