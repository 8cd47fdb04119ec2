"""
The thirteen open prototype sets.

Every open prototype set is the open square F° with at most two closed unit
disks removed:

- SQ, the square itself
- SQ-D(u) for a unit u in {1, i, -1, -i}
- SQ-D(v) for a diagonal neighbour v in {1+i, -1+i, -1-i, 1-i}
- SQ-D(u)-D(iu) for the four pairs of adjacent units

Computed regions are recognised by their membership signature on a fixed
grid of F rather than by their constraint list: a removed diagonal disk can
hide behind a removed unit disk, so different constraint lists describe
the same open set.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Tuple

from services.errors import CatalogueViolation
from services.exact_geometry import (
    Region,
    grid_signature,
    im_at_least,
    im_at_most,
    outside_circle,
    re_at_least,
    re_at_most,
)
from services.gaussian_core import GaussianInt, Symmetry, apply_symmetry
from services.gaussian_core.constants import DIAGONALS, NEIGHBOURS, UNITS
from .constants import CATALOGUE_SIZE, SIGNATURE_GRID, SQUARE_STATE

logger = logging.getLogger("hcf.shift")

_ORDER = {GaussianInt(*p): k for k, p in enumerate(NEIGHBOURS)}
_UNIT_SET = {GaussianInt(*p) for p in UNITS}
HALF = Fraction(1, 2)


def _disk_label(c: GaussianInt) -> str:
    return f"D({c})"


class PrototypeState:
    """
    One open prototype set, identified by the lattice disks it removes.

    Instances are interned: PrototypeState.of(...) always returns the same
    object for the same removed set, so states compare by identity.
    """

    _interned: Dict[Tuple[GaussianInt, ...], "PrototypeState"] = {}

    def __init__(self, removed: Tuple[GaussianInt, ...]):
        self.removed = removed
        self.name = SQUARE_STATE + "".join("-" + _disk_label(c) for c in removed)
        self._region = None
        self._closure = None
        self._signature = None

    @classmethod
    def of(cls, removed: Iterable[GaussianInt]) -> "PrototypeState":
        key = tuple(sorted(set(removed), key=lambda c: _ORDER[c]))
        if key not in cls._interned:
            cls._interned[key] = cls(key)
        return cls._interned[key]

    # ------------------------------------------------------------------
    # geometry
    # ------------------------------------------------------------------

    def region(self) -> Region:
        """The open set F° minus the removed closed disks."""
        if self._region is None:
            constraints = [re_at_least(-HALF, True), re_at_most(HALF, True),
                           im_at_least(-HALF, True), im_at_most(HALF, True)]
            constraints += [outside_circle(c, 1, closed=False) for c in self.removed]
            self._region = Region.build(constraints)
        return self._region

    def closure_region(self) -> Region:
        """The closure: the closed square minus the removed open disks."""
        if self._closure is None:
            constraints = [re_at_least(-HALF), re_at_most(HALF), im_at_least(-HALF), im_at_most(HALF)]
            constraints += [outside_circle(c, 1, closed=True) for c in self.removed]
            self._closure = Region.build(constraints)
        return self._closure

    @property
    def signature(self) -> int:
        if self._signature is None:
            self._signature = grid_signature(self.region(), SIGNATURE_GRID)
        return self._signature

    def removed_units(self) -> List[GaussianInt]:
        return [c for c in self.removed if c in _UNIT_SET]

    def removed_diagonals(self) -> List[GaussianInt]:
        return [c for c in self.removed if c not in _UNIT_SET]

    def holes(self) -> List[GaussianInt]:
        """
        Centers of the closed unit disks missing from the inverted set.

        The image of F° under 1/z misses the closed disks at the four units;
        a removed diagonal disk at v adds the disk at conj(v). Removed unit
        disks become half-planes instead of disks.
        """
        return [GaussianInt(*u) for u in UNITS] + [v.conj() for v in self.removed_diagonals()]

    def is_square(self) -> bool:
        return not self.removed

    # ------------------------------------------------------------------
    # symmetry and output
    # ------------------------------------------------------------------

    def apply_symmetry(self, s: Symmetry) -> "PrototypeState":
        return PrototypeState.of(apply_symmetry(s, c) for c in self.removed)

    def to_json(self) -> dict:
        return {"name": self.name, "removed": [c.to_json() for c in self.removed]}

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"PrototypeState({self.name})"


SQUARE = PrototypeState.of(())


def _build_catalogue() -> Tuple[PrototypeState, ...]:
    states = [SQUARE]
    states += [PrototypeState.of([GaussianInt(*u)]) for u in UNITS]
    states += [PrototypeState.of([GaussianInt(*v)]) for v in DIAGONALS]
    for u in UNITS:
        unit = GaussianInt(*u)
        states.append(PrototypeState.of([unit, unit * GaussianInt(0, 1)]))
    return tuple(states)


CATALOGUE: Tuple[PrototypeState, ...] = _build_catalogue()


def state_by_name(name: str) -> PrototypeState:
    for state in CATALOGUE:
        if state.name == name:
            return state
    raise CatalogueViolation(f"no catalogued open prototype set is called {name}")


@lru_cache(maxsize=1)
def _signature_index() -> Dict[int, PrototypeState]:
    index = {}
    for state in CATALOGUE:
        sig = state.signature
        if sig in index:
            raise CatalogueViolation(f"{state.name} and {index[sig].name} share a signature")
        index[sig] = state
    if len(index) != CATALOGUE_SIZE:
        raise CatalogueViolation(f"expected {CATALOGUE_SIZE} open prototype sets, found {len(index)}")
    logger.debug(f"Signature index ready for {len(index)} open prototype sets")
    return index


def match_region(region: Region) -> PrototypeState:
    """
    Name the catalogued open prototype set equal to an open region.

    Raises:
        CatalogueViolation: when the region has no interior or matches no state.
    """
    if not region.has_interior():
        raise CatalogueViolation(f"cannot match a region without interior: {region.describe()}")
    sig = grid_signature(region, SIGNATURE_GRID)
    state = _signature_index().get(sig)
    if state is None:
        raise CatalogueViolation(f"open region matches no catalogued prototype set: {region.describe()}")
    return state
