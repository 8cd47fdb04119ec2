"""
Symbolic shift: words, prototype sets, the sofic graph and the word taxonomy.

Modules:
- constants.py: classification tags and search limits
- words.py: Word and the lazily produced DigitSeq
- catalogue.py: the thirteen open prototype sets
- prototypes.py: prototype sets and cylinders of finite words
- graph.py: the sofic transition graph (networkx)
- classify.py: classification, gluing and the shift metric
"""

from .constants import (
    REGULAR_FULL,
    REGULAR_NOT_FULL,
    IRREGULAR_VALID,
    EXTREMELY_IRREGULAR,
    INVALID,
    VALID_UNKNOWN_DEGENERATE,
    WORD_TAGS,
)
from .words import Word, DigitSeq, EMPTY_WORD, as_digit_seq
from .catalogue import PrototypeState, CATALOGUE, SQUARE, match_region, state_by_name
from .prototypes import (
    prototype_step,
    prototype_chain,
    prototype_region,
    open_prototype,
    convergent_matrix,
    cylinder_region,
)
from .graph import SoficGraph, Walk, build_sofic_graph, digits_in_box, large_digit_target, transition_target
from .classify import (
    WordClass,
    classify,
    classify_by_geometry,
    is_regular_prefix_closed,
    factor_check,
    in_witness_set,
    concat_regular,
    find_full_extension,
    full_extension_candidates,
    feeble_witness,
    shift_distance,
    is_extremely_irregular_point,
    representative_words,
    irregular_extension_states,
    targets_after_digit,
    level_one_change_norms,
    state_of,
)

__all__ = [
    # Tags
    "REGULAR_FULL",
    "REGULAR_NOT_FULL",
    "IRREGULAR_VALID",
    "EXTREMELY_IRREGULAR",
    "INVALID",
    "VALID_UNKNOWN_DEGENERATE",
    "WORD_TAGS",

    # Words
    "Word",
    "DigitSeq",
    "EMPTY_WORD",
    "as_digit_seq",

    # Prototype sets
    "PrototypeState",
    "CATALOGUE",
    "SQUARE",
    "match_region",
    "state_by_name",
    "prototype_step",
    "prototype_chain",
    "prototype_region",
    "open_prototype",
    "convergent_matrix",
    "cylinder_region",

    # Graph
    "SoficGraph",
    "Walk",
    "build_sofic_graph",
    "digits_in_box",
    "large_digit_target",
    "transition_target",

    # Classification
    "WordClass",
    "classify",
    "classify_by_geometry",
    "is_regular_prefix_closed",
    "factor_check",
    "in_witness_set",
    "concat_regular",
    "find_full_extension",
    "full_extension_candidates",
    "feeble_witness",
    "shift_distance",
    "is_extremely_irregular_point",

    # Oracles
    "representative_words",
    "irregular_extension_states",
    "targets_after_digit",
    "level_one_change_norms",
    "state_of",
]
