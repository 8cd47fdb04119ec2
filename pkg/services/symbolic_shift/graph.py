"""
The sofic transition graph on the thirteen open prototype sets.

An edge P --b--> Q exists iff F° ∩ τ_{-b} ι(P minus 0) has interior, and Q
is that open set. Edges are computed exactly for every digit whose closed
square F̄ + b touches one of the disks missing from ι(P); beyond that cut
the large-digit rule applies:

    P --b--> SQ  iff  Re(u b) <= 0 for every removed unit u of P,

and there is no edge otherwise.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Tuple

import networkx as nx

from services.exact_geometry import Box
from services.gaussian_core import GaussianInt, QuadComplex, QuadScalar, is_digit
from .catalogue import CATALOGUE, SQUARE, PrototypeState, match_region, state_by_name
from .constants import DIGIT_SCAN_RADIUS, HOLE_SCAN_RADIUS
from .prototypes import open_step
from .words import Word

logger = logging.getLogger("hcf.shift")

HALF = Fraction(1, 2)


def digits_in_box(radius: int) -> List[GaussianInt]:
    """All digits with |Re|, |Im| <= radius, by norm then (Re, Im)."""
    out = [GaussianInt(x, y) for x in range(-radius, radius + 1) for y in range(-radius, radius + 1)]
    return sorted((b for b in out if is_digit(b)), key=lambda b: (b.norm(), b.re, b.im))


def digits_up_to_norm(n: int) -> List[GaussianInt]:
    """All digits b with |b|^2 <= n."""
    r = 0
    while (r + 1) * (r + 1) <= n:
        r += 1
    return [b for b in digits_in_box(r) if b.norm() <= n]


def transition_target(state: PrototypeState, b: GaussianInt) -> Optional[PrototypeState]:
    """The exact transition; None when the image has empty interior."""
    image = open_step(state.region(), b)
    if not image.has_interior():
        return None
    return match_region(image)


def large_digit_target(state: PrototypeState, b: GaussianInt) -> Optional[PrototypeState]:
    """The transition for digits beyond the cut of the state."""
    for u in state.removed_units():
        if (u * b).re > 0:
            return None
    return SQUARE


def bcut_sq(state: PrototypeState) -> int:
    """Largest |b|^2 of a digit whose closed square F̄ + b meets a hole of ι(P)."""
    best = 0
    for b in digits_in_box(HOLE_SCAN_RADIUS):
        box = Box(QuadScalar(b.re - HALF), QuadScalar(b.re + HALF),
                  QuadScalar(b.im - HALF), QuadScalar(b.im + HALF))
        for c in state.holes():
            if box.min_dist_sq(QuadComplex.lift(c)) <= 1:
                best = max(best, b.norm())
                break
    return best


@dataclass
class Walk:
    """The states visited by a word; broke_at is the first digit without an edge."""

    states: List[PrototypeState]
    broke_at: Optional[int] = None

    @property
    def regular(self) -> bool:
        return self.broke_at is None

    @property
    def final(self) -> PrototypeState:
        return self.states[-1]

    def to_json(self) -> dict:
        return {"states": [s.name for s in self.states], "broke_at": self.broke_at}


@dataclass
class SoficGraph:
    """
    Deterministic labelled graph on the open prototype sets.

    The networkx multigraph holds the exception table (every edge computed
    by geometry); digits outside the table follow the large-digit rule.
    """

    graph: nx.MultiDiGraph
    table: Dict[Tuple[str, GaussianInt], Optional[str]]
    cuts: Dict[str, int]
    states: Dict[str, PrototypeState] = field(default_factory=dict)

    # ------------------------------------------------------------------
    # transitions
    # ------------------------------------------------------------------

    def state(self, name: str) -> PrototypeState:
        return self.states[name] if name in self.states else state_by_name(name)

    def bcut_sq(self, state: PrototypeState) -> int:
        return self.cuts[state.name]

    def step(self, state: PrototypeState, b: GaussianInt) -> Optional[PrototypeState]:
        """The state after digit b, or None when the extension is not regular."""
        if b.norm() <= self.cuts[state.name]:
            target = self.table.get((state.name, b))
            return None if target is None else self.states[target]
        return large_digit_target(state, b)

    def walk(self, word: Iterable[GaussianInt], start: PrototypeState = SQUARE) -> Walk:
        states = [start]
        for k, b in enumerate(word, start=1):
            nxt = self.step(states[-1], b)
            if nxt is None:
                return Walk(states, k)
            states.append(nxt)
        return Walk(states)

    def is_regular(self, word: Word) -> bool:
        return self.walk(word).regular

    def reachable(self, start: PrototypeState = SQUARE) -> List[PrototypeState]:
        """States reachable from start, in breadth-first order."""
        view = nx.DiGraph(self.graph)
        # every state sends its large digits to SQ
        view.add_edges_from((s.name, SQUARE.name) for s in CATALOGUE)
        return [self.states[name] for name in nx.bfs_tree(view, start.name)]

    def edge_digit(self, source: str, target: str) -> GaussianInt:
        """The least digit (by norm, then Re, Im) labelling an edge source -> target."""
        labels = (data["digit"] for data in self.graph[source][target].values())
        return min(labels, key=lambda b: (b.norm(), b.re, b.im))

    # ------------------------------------------------------------------
    # checks
    # ------------------------------------------------------------------

    def exception_edge_count(self) -> int:
        return self.graph.number_of_edges()

    def validate_large_digit_rule(self, radius: int = DIGIT_SCAN_RADIUS) -> List[dict]:
        """
        Compare the rule with exact geometry for every digit beyond the cut
        with |Re|, |Im| <= radius. Returns the mismatches (none expected).
        """
        mismatches = []
        for state in CATALOGUE:
            cut = self.cuts[state.name]
            for b in digits_in_box(radius):
                if b.norm() <= cut:
                    continue
                exact = transition_target(state, b)
                rule = large_digit_target(state, b)
                if exact is not rule:
                    mismatches.append({
                        "state": state.name,
                        "digit": b.to_json(),
                        "geometry": None if exact is None else exact.name,
                        "rule": None if rule is None else rule.name,
                    })
        if mismatches:
            logger.warning(f"Large-digit rule disagrees with geometry on {len(mismatches)} transitions")
        return mismatches

    # ------------------------------------------------------------------
    # export
    # ------------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "vertices": [s.to_json() for s in CATALOGUE],
            "cuts": dict(self.cuts),
            "edges": [
                {"source": u, "label": data["digit"].to_json(), "target": v}
                for u, v, data in self.graph.edges(data=True)
            ],
            "large_digit_rule": "beyond the cut: SQ if Re(u b) <= 0 for every removed unit u, else no edge",
        }

    def to_dot(self) -> str:
        lines = ["digraph sofic {"]
        for s in CATALOGUE:
            lines.append(f'  "{s.name}";')
        for u, v, data in self.graph.edges(data=True):
            lines.append(f'  "{u}" -> "{v}" [label="{data["label"]}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


@lru_cache(maxsize=1)
def build_sofic_graph() -> SoficGraph:
    """
    Build the transition graph once; later calls return the same object.

    Raises:
        CatalogueViolation: when a computed open set matches no catalogued state.
    """
    graph = nx.MultiDiGraph()
    for s in CATALOGUE:
        graph.add_node(s.name, removed=[c.to_json() for c in s.removed])
    table: Dict[Tuple[str, GaussianInt], Optional[str]] = {}
    cuts: Dict[str, int] = {}
    for s in CATALOGUE:
        cuts[s.name] = bcut_sq(s)
        for b in digits_up_to_norm(cuts[s.name]):
            target = transition_target(s, b)
            table[(s.name, b)] = None if target is None else target.name
            if target is not None:
                graph.add_edge(s.name, target.name, key=str(b), label=str(b), digit=b)
    logger.info(f"Sofic graph built: {len(CATALOGUE)} states, {graph.number_of_edges()} table edges")
    return SoficGraph(graph, table, cuts, {s.name: s for s in CATALOGUE})
