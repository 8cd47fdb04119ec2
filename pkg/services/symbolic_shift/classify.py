"""
Word taxonomy and the operations built on it.

Regularity is decided by walking the sofic graph. Once the walk breaks,
the word is handed to exact half-open prototype tracking, which decides
between invalid, irregular and extremely irregular.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Set

import networkx as nx

from services.errors import FieldOverflow, InternalInvariantViolation, PreconditionViolated
from services.exact_geometry import EMPTY, POINT, TWO_DIM, Region
from services.gaussian_core import GaussianInt, QuadComplex, nearest_gaussian, pm, zeta
from .catalogue import CATALOGUE, SQUARE, PrototypeState, match_region
from .constants import (
    EXTREME_DEPTH_BOUND,
    EXTREMELY_IRREGULAR,
    FULL_EXTENSION_SEARCH_RADIUS,
    INVALID,
    IRREGULAR_VALID,
    REGULAR_FULL,
    REGULAR_NOT_FULL,
    REGULAR_TAGS,
    VALID_UNKNOWN_DEGENERATE,
)
from .graph import SoficGraph, build_sofic_graph, digits_in_box
from .prototypes import open_prototype, prototype_chain
from .words import DigitSeq, Word

logger = logging.getLogger("hcf.shift")


@dataclass
class WordClass:
    """Classification report of a finite word."""

    tag: str
    word: Word
    states: List[str] = field(default_factory=list)
    broke_at: Optional[int] = None
    region: Optional[Region] = None

    @property
    def is_regular(self) -> bool:
        return self.tag in REGULAR_TAGS

    @property
    def is_full(self) -> bool:
        return self.tag == REGULAR_FULL

    @property
    def is_valid(self) -> bool:
        """False only for words known to be invalid."""
        return self.tag != INVALID

    def to_json(self) -> dict:
        data = {
            "word": self.word.to_json(),
            "tag": self.tag,
            "states": list(self.states),
            "broke_at": self.broke_at,
        }
        if self.region is not None:
            data["region"] = self.region.to_json()
        return data


def _graph(graph: Optional[SoficGraph]) -> SoficGraph:
    return graph if graph is not None else build_sofic_graph()


# ============================================================================
# CLASSIFICATION
# ============================================================================

def classify(w: Word, graph: Optional[SoficGraph] = None) -> WordClass:
    """
    Classify a finite word.

    Args:
        w: the word (every letter is already a checked digit)
        graph: the sofic graph; the shared cached one by default

    Returns:
        WordClass: the tag together with the visited states and, for
        non-regular words, the exact prototype set that decided the tag

    Example:
        >>> classify(Word.from_json([[-2, 0], [1, 3]])).tag
        'irregular-valid'
    """
    walk = _graph(graph).walk(w)
    names = [s.name for s in walk.states]
    if walk.regular:
        tag = REGULAR_FULL if walk.final is SQUARE else REGULAR_NOT_FULL
        return WordClass(tag, w, names)

    if len(w) - walk.broke_at > EXTREME_DEPTH_BOUND:
        logger.warning(f"{len(w) - walk.broke_at} degenerate steps exceed the tracking bound; {w} left undecided")
        return WordClass(VALID_UNKNOWN_DEGENERATE, w, names, walk.broke_at)

    try:
        chain = prototype_chain(w)
    except FieldOverflow as e:
        logger.warning(f"Degenerate tracking of {w} left the exact field: {e}")
        return WordClass(VALID_UNKNOWN_DEGENERATE, w, names, walk.broke_at)

    region = chain[-1] if len(chain) == len(w) + 1 else Region.empty()
    if region.kind == EMPTY:
        tag = INVALID
    elif region.kind == POINT:
        tag = EXTREMELY_IRREGULAR
    elif region.kind == TWO_DIM:
        raise InternalInvariantViolation(f"{w} has no graph path but its prototype set has interior")
    else:
        tag = IRREGULAR_VALID
    return WordClass(tag, w, names, walk.broke_at, region)


def classify_by_geometry(w: Word) -> str:
    """
    Regular tags from direct open-prototype construction, with no graph.

    Non-regular words come back as the empty string; the comparison with
    classify is only meaningful on the regular side.
    """
    state = SQUARE
    for k in range(1, len(w) + 1):
        region = open_prototype(w[:k])
        if not region.has_interior():
            return ""
        state = match_region(region)
    return REGULAR_FULL if state is SQUARE else REGULAR_NOT_FULL


def is_regular_prefix_closed(w: Word, graph: Optional[SoficGraph] = None) -> bool:
    """True iff every prefix of w is regular (vacuous for the empty word)."""
    return _graph(graph).walk(w).regular


def factor_check(w: Word, graph: Optional[SoficGraph] = None) -> bool:
    """True iff every factor of w is regular; suffix walks cover every factor."""
    g = _graph(graph)
    return all(g.walk(w[k:]).regular for k in range(len(w)))


def in_witness_set(w: Word, graph: Optional[SoficGraph] = None) -> bool:
    """Membership in the gluing set: nonempty, regular and pm(last) >= 3."""
    return bool(w) and pm(w.last) >= 3 and _graph(graph).walk(w).regular


# ============================================================================
# GLUING
# ============================================================================

def concat_regular(u: Word, v: Word, graph: Optional[SoficGraph] = None) -> Word:
    """
    Concatenate a regular word ending in a large digit with any regular word.

    Raises:
        PreconditionViolated: u is empty or not regular, pm(last of u) < 3,
            or v is not regular.
        InternalInvariantViolation: the concatenation fails regularity.
    """
    g = _graph(graph)
    if not u:
        raise PreconditionViolated("the left word must be nonempty")
    if pm(u.last) < 3:
        raise PreconditionViolated(f"pm({u.last}) = {pm(u.last)}; the left word must end in a digit with pm >= 3")
    if not g.walk(u).regular:
        raise PreconditionViolated(f"the left word {u} is not regular")
    if not g.walk(v).regular:
        raise PreconditionViolated(f"the right word {v} is not regular")
    uv = u + v
    if not g.walk(uv).regular:
        raise InternalInvariantViolation(f"{u} followed by {v} should be regular")
    return uv


def full_extension_candidates(radius: int = FULL_EXTENSION_SEARCH_RADIUS) -> List[GaussianInt]:
    """Digits with pm >= 3 by increasing norm, ties broken toward larger Re then larger Im."""
    cands = [b for b in digits_in_box(radius) if pm(b) >= 3]
    return sorted(cands, key=lambda b: (b.norm(), -b.re, -b.im))


def find_full_extension(w: Word, graph: Optional[SoficGraph] = None) -> GaussianInt:
    """
    The first candidate b (pm(b) >= 3) for which w b is full.

    Raises:
        PreconditionViolated: w is not regular.
        InternalInvariantViolation: no candidate within the search radius works.
    """
    g = _graph(graph)
    walk = g.walk(w)
    if not walk.regular:
        raise PreconditionViolated(f"{w} is not regular")
    for b in full_extension_candidates():
        if g.step(walk.final, b) is SQUARE:
            return b
    raise InternalInvariantViolation(f"no full extension of {w} within radius {FULL_EXTENSION_SEARCH_RADIUS}")


def feeble_witness(v: Word, graph: Optional[SoficGraph] = None) -> Word:
    """
    v with its last letter replaced by the full extension of the rest.

    The result has the length of v, differs from it in at most the last
    letter and lies in the gluing set.
    """
    if not v:
        raise PreconditionViolated("the feeble witness needs a nonempty word")
    return v.with_last(find_full_extension(v[:-1], graph))


def shift_distance(a, b, horizon: int) -> Fraction:
    """2^-k for the first disagreement index k <= horizon, else 0."""
    a = a if isinstance(a, DigitSeq) else DigitSeq.finite(a)
    b = b if isinstance(b, DigitSeq) else DigitSeq.finite(b)
    for k in range(1, horizon + 1):
        if a.digit(k) != b.digit(k):
            return Fraction(1, 2 ** k)
    return Fraction(0)


# ============================================================================
# POINTS
# ============================================================================

def is_extremely_irregular_point(xi: QuadComplex, depth: int = EXTREME_DEPTH_BOUND) -> Optional[bool]:
    """
    Whether some orbit point T^n(xi), n >= 0, equals zeta4.

    Returns None when neither zeta4 nor 0 shows up within depth steps.
    """
    target = zeta(4)
    z = QuadComplex.lift(xi)
    for _ in range(depth + 1):
        if z == target:
            return True
        if z.is_zero():
            return False
        w = z.inverse()
        z = w - nearest_gaussian(w)
    return None


# ============================================================================
# ORACLES
# ============================================================================

def representative_words(graph: Optional[SoficGraph] = None) -> Dict[str, Word]:
    """A shortest word reaching each state from SQ."""
    g = _graph(graph)
    paths = nx.single_source_shortest_path(g.graph, SQUARE.name)
    return {
        name: Word(g.edge_digit(u, v) for u, v in zip(path, path[1:]))
        for name, path in paths.items()
    }


def irregular_extension_states(graph: Optional[SoficGraph] = None) -> Set[str]:
    """
    States after whose representative word some single digit gives an
    irregular (valid but not regular) extension.
    """
    g = _graph(graph)
    found = set()
    for name, word in representative_words(g).items():
        state = g.states[name]
        for (src, b), target in g.table.items():
            if src != name or target is not None:
                continue
            tag = classify(word + b, g).tag
            if tag in (IRREGULAR_VALID, EXTREMELY_IRREGULAR):
                found.add(name)
                logger.debug(f"{word + b} is {tag} after {state.name}")
                break
    return found


def targets_after_digit(b: GaussianInt, graph: Optional[SoficGraph] = None) -> Set[str]:
    """Every state an edge labelled b can lead to."""
    g = _graph(graph)
    out = set()
    for s in CATALOGUE:
        t = g.step(s, b)
        if t is not None:
            out.add(t.name)
    return out


def level_one_change_norms(radius: int = 4, graph: Optional[SoficGraph] = None) -> Set[int]:
    """
    Norms of digits b where some state P steps somewhere other than SQ does
    (or nowhere). Regular extensions only change the level-one picture for
    norms in this set.
    """
    g = _graph(graph)
    norms = set()
    for b in digits_in_box(radius):
        base = g.step(SQUARE, b)
        for s in CATALOGUE:
            t = g.step(s, b)
            if t is not None and t is not base:
                norms.add(b.norm())
    return norms


def state_of(w: Word, graph: Optional[SoficGraph] = None) -> Optional[PrototypeState]:
    """The final state of a regular word, None when the walk breaks."""
    walk = _graph(graph).walk(w)
    return walk.final if walk.regular else None
