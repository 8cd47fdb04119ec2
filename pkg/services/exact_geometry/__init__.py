"""
Exact geometry of circlines and regions.

Modules:
- circline.py: Hermitian-form circlines, Moebius transport, boxes
- analysis.py: one-dimensional analysis along a carrier (exact and mpmath backends)
- region.py: normalized regions, intersect / invert / translate / mobius
- svg.py: deterministic SVG rendering
"""

from .circline import Box, Circline, adjugate, apply_mobius, as_matrix, mobius_at_infinity
from .analysis import ArcPiece, PointPiece
from .region import (
    Constraint,
    Region,
    TWO_DIM,
    SEGMENT,
    POINT,
    POINTS,
    EMPTY,
    re_at_most,
    re_at_least,
    im_at_most,
    im_at_least,
    inside_circle,
    outside_circle,
    fundamental_domain,
    closed_fundamental_domain,
    open_fundamental_domain,
    intersect,
    invert,
    translate,
    mobius,
    remove_disk,
    grid_signature,
)
from .svg import emit_svg, emit_panels


def has_nonempty_interior(r: Region) -> bool:
    """True iff the region contains an open disk."""
    return r.has_interior()


__all__ = [
    # Circlines
    "Box",
    "Circline",
    "adjugate",
    "apply_mobius",
    "as_matrix",
    "mobius_at_infinity",

    # Regions
    "Constraint",
    "Region",
    "ArcPiece",
    "PointPiece",
    "TWO_DIM",
    "SEGMENT",
    "POINT",
    "POINTS",
    "EMPTY",
    "re_at_most",
    "re_at_least",
    "im_at_most",
    "im_at_least",
    "inside_circle",
    "outside_circle",
    "fundamental_domain",
    "closed_fundamental_domain",
    "open_fundamental_domain",

    # Operations
    "intersect",
    "invert",
    "translate",
    "mobius",
    "remove_disk",
    "grid_signature",
    "has_nonempty_interior",

    # Output
    "emit_svg",
    "emit_panels",
]
