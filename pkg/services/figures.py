"""
Figure registry: deterministic SVG renderings of the open prototype sets,
their inversions and the irregular configurations met by the regularizer.
"""

import logging
from functools import lru_cache
from typing import Callable, Dict, List, Sequence, Tuple

from services.errors import UnknownFigure
from services.exact_geometry import Region, emit_panels, invert
from services.gaussian_core import IDENTITY, MIR1, MIR2, GaussianInt, Symmetry
from services.symbolic_shift import (
    Word,
    build_sofic_graph,
    digits_in_box,
    prototype_region,
    representative_words,
    state_by_name,
)

logger = logging.getLogger("hcf.figures")

SET_STYLE = {"fill": "#9ecae1", "stroke": "#08519c"}
IMAGE_STYLE = {"fill": "#fdd0a2", "stroke": "#a63603"}
SEGMENT_STYLE = {"stroke": "#cb181d", "stroke-width": "0.03"}

# The digit a_{j_N} in the identity configuration, and the scan box for a_{j_N + 1}
ALG_PIVOT = GaussianInt(-2, 1)
ALG_SCAN_RADIUS = 3
ALG_MAX_PANELS = 4

Panels = List[Tuple[str, Sequence[Tuple[Region, dict]]]]


def _state_panel(name: str, title: str) -> Tuple[str, Sequence[Tuple[Region, dict]]]:
    return title, [(state_by_name(name).region(), SET_STYLE)]


def _set_and_inversion(name: str, title: str, image_title: str) -> Panels:
    state = state_by_name(name)
    closure = state.closure_region()
    if closure.contains(0):
        closure = closure.punctured(0)
    return [
        (title, [(state.region(), SET_STYLE)]),
        (image_title, [(invert(closure), IMAGE_STYLE)]),
    ]


def open_prototypes() -> Panels:
    return [
        _state_panel("SQ", "F°"),
        _state_panel("SQ-D(1)", "F°_1(-2)"),
        _state_panel("SQ-D(1-i)", "F°_1(-2+i)"),
        _state_panel("SQ-D(1)-D(-i)", "F°_1(-1+i)"),
    ]


def irregular_configurations(s: Symmetry) -> Panels:
    """
    Prototype sets F(a_1, ..., a_{j+1}) of irregular valid words whose digit
    a_j is the pivot -2+i and Re(a_{j+1}) >= 1, carried over by s.
    """
    graph = build_sofic_graph()
    seen: Dict[str, Tuple[str, Region]] = {}
    for name, rep in sorted(representative_words(graph).items()):
        head = rep + ALG_PIVOT
        if not graph.is_regular(head):
            continue
        for b in digits_in_box(ALG_SCAN_RADIUS):
            if b.re < 1 or graph.is_regular(head + b):
                continue
            word = (head + b).apply_symmetry(s)
            region = prototype_region(word)
            if region.is_empty():
                continue
            seen.setdefault(region.describe(), (str(word), region))
            if len(seen) >= ALG_MAX_PANELS:
                break
        if len(seen) >= ALG_MAX_PANELS:
            break
    logger.info(f"{len(seen)} irregular configurations under {s.name}")
    return [(title, [(region, SEGMENT_STYLE)]) for title, region in seen.values()]


FIGURES: Dict[str, Callable[[], Panels]] = {
    "open-prototypes": open_prototypes,
    "b5ii": lambda: _set_and_inversion("SQ-D(1+i)", "F° minus D(1+i)", "ι[F minus D(1+i)]"),
    "b5iii": lambda: _set_and_inversion("SQ-D(-1)", "F° minus D(-1)", "ι[F minus D(-1)]"),
    "b5iv": lambda: _set_and_inversion("SQ-D(i)-D(-1)", "F° minus D(i), D(-1)", "ι[F minus D(i), D(-1)]"),
    "alg-id": lambda: irregular_configurations(IDENTITY),
    "alg-mir2": lambda: irregular_configurations(MIR2),
    "alg-mir1mir2": lambda: irregular_configurations(MIR1.compose(MIR2)),
}


@lru_cache(maxsize=None)
def plot_figure(name: str) -> str:
    """
    Render a registered figure as an SVG document.

    Raises:
        UnknownFigure: name is not registered.
    """
    if name not in FIGURES:
        raise UnknownFigure(f"unknown figure {name!r}; known figures: {', '.join(FIGURES)}")
    return emit_panels(FIGURES[name]())
