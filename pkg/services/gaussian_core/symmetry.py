"""
The dihedral group D8 acting on C, on digits and on regions.

An element is stored as (k, reflect): z -> i^k * (conj(z) if reflect else z).
Named elements:

- ROTA:  z -> i*z
- MIR1:  z -> conj(z)
- MIR2:  z -> -conj(z)
"""

from dataclasses import dataclass
from typing import Iterator

from services.errors import UsageError
from .gaussian import GaussianInt
from .scalars import QuadComplex

_I_POWERS = (GaussianInt(1, 0), GaussianInt(0, 1), GaussianInt(-1, 0), GaussianInt(0, -1))


@dataclass(frozen=True)
class Symmetry:
    """An element of D8, applied as z -> i^k * (conj z if reflect else z)."""

    k: int = 0
    reflect: bool = False

    def __post_init__(self):
        object.__setattr__(self, "k", self.k % 4)

    @property
    def rotation(self) -> GaussianInt:
        """The unit i^k."""
        return _I_POWERS[self.k]

    def compose(self, other: "Symmetry") -> "Symmetry":
        """self after other."""
        k = self.k - other.k if self.reflect else self.k + other.k
        return Symmetry(k, self.reflect != other.reflect)

    def inverse(self) -> "Symmetry":
        if self.reflect:
            return self
        return Symmetry(-self.k, False)

    def __call__(self, x):
        return apply_symmetry(self, x)

    @property
    def name(self) -> str:
        for label, sym in NAMED.items():
            if sym == self:
                return label
        return f"rot{self.k}" + ("-mir" if self.reflect else "")

    def __str__(self) -> str:
        return self.name

    @classmethod
    def all(cls) -> Iterator["Symmetry"]:
        for reflect in (False, True):
            for k in range(4):
                yield cls(k, reflect)

    @classmethod
    def from_name(cls, name: str) -> "Symmetry":
        key = name.strip().lower()
        if key not in NAMED:
            raise UsageError(f"unknown symmetry '{name}'; expected one of {sorted(NAMED)}")
        return NAMED[key]


IDENTITY = Symmetry(0, False)
ROTA = Symmetry(1, False)
MIR1 = Symmetry(0, True)
MIR2 = Symmetry(2, True)

NAMED = {
    "id": IDENTITY,
    "rota": ROTA,
    "rota2": Symmetry(2, False),
    "rota3": Symmetry(3, False),
    "mir1": MIR1,
    "mir2": MIR2,
    "mir1mir2": MIR1.compose(MIR2),
}


def apply_symmetry(s: Symmetry, x):
    """
    Apply a D8 element to a GaussianInt, a QuadComplex, or anything that
    implements apply_symmetry(s) itself (words, regions, digit sequences).
    """
    if isinstance(x, GaussianInt):
        y = x.conj() if s.reflect else x
        return s.rotation * y
    if isinstance(x, QuadComplex):
        y = x.conj() if s.reflect else x
        return y * s.rotation
    method = getattr(x, "apply_symmetry", None)
    if method is None:
        raise UsageError(f"D8 does not act on {type(x).__name__}")
    return method(s)
