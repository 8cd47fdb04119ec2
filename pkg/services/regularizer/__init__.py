"""
Regularizer: rewrite an irregular valid sequence into the closed regular
shift without changing its value.

Modules:
- smap.py: the S substitution and its paired reflection
- algorithm.py: RewriteState, breakpoints, rewrite rounds, regularize
- certify.py: value certificates, closure preimages and breakpoint oracles
"""

from .smap import s_map, in_s_domain, paired_reflection, substitute
from .algorithm import (
    RewriteState,
    Regularization,
    find_breakpoint,
    rewrite_step,
    iterate_rewrites,
    run_regularizer,
    check_valid,
    regularize,
)
from .certify import (
    GapReport,
    certify_gap,
    closure_preimage,
    breakpoint_value,
    on_half_line,
    absorption_violations,
)

__all__ = [
    # S map
    "s_map",
    "in_s_domain",
    "paired_reflection",
    "substitute",

    # Algorithm
    "RewriteState",
    "Regularization",
    "find_breakpoint",
    "rewrite_step",
    "iterate_rewrites",
    "run_regularizer",
    "check_valid",
    "regularize",

    # Certificates
    "GapReport",
    "certify_gap",
    "closure_preimage",
    "breakpoint_value",
    "on_half_line",
    "absorption_violations",
]
