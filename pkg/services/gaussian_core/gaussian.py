"""
Gaussian integers and the HCF digit set.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, Tuple, Union

from services.errors import InvalidDigit, UsageError
from .constants import EXCLUDED_DIGITS


@dataclass(frozen=True, order=True)
class GaussianInt:
    """
    An element re + im*i of Z[i].

    Supports ring arithmetic with other GaussianInt values and Python ints.
    Ordering is lexicographic on (re, im) and only used for deterministic
    sorting, never for mathematics.
    """

    re: int
    im: int = 0

    def __post_init__(self):
        if isinstance(self.re, bool) or isinstance(self.im, bool):
            raise UsageError("GaussianInt parts must be integers, not booleans")
        if not isinstance(self.re, int) or not isinstance(self.im, int):
            raise UsageError(f"GaussianInt parts must be integers, got {self.re!r}, {self.im!r}")

    @staticmethod
    def _lift(other) -> "GaussianInt":
        if isinstance(other, GaussianInt):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return GaussianInt(other, 0)
        return NotImplemented

    def __add__(self, other):
        other = GaussianInt._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = GaussianInt._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = GaussianInt._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = GaussianInt._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianInt(self.re * other.re - self.im * other.im,
                           self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __neg__(self) -> "GaussianInt":
        return GaussianInt(-self.re, -self.im)

    def conj(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        """Squared absolute value |z|^2."""
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __iter__(self) -> Iterator[int]:
        yield self.re
        yield self.im

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        coef = "" if abs(self.im) == 1 else str(abs(self.im))
        if self.re == 0:
            return f"{'-' if self.im < 0 else ''}{coef}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{coef}i"

    def to_json(self) -> list:
        return [self.re, self.im]

    @classmethod
    def from_json(cls, value: Union[list, tuple, dict, int, "GaussianInt"]) -> "GaussianInt":
        """
        Parse the wire form [re, im] (a dict {"re", "im"} and a bare int are accepted too).
        """
        if isinstance(value, GaussianInt):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return cls(value, 0)
        if isinstance(value, dict):
            return cls(int(value.get("re", 0)), int(value.get("im", 0)))
        if isinstance(value, (list, tuple)) and len(value) == 2:
            re, im = value
            if int(re) != re or int(im) != im:
                raise UsageError(f"Gaussian integer parts must be integral: {value!r}")
            return cls(int(re), int(im))
        raise UsageError(f"Cannot read a Gaussian integer from {value!r}")


ZERO = GaussianInt(0, 0)
ONE = GaussianInt(1, 0)
I = GaussianInt(0, 1)


def is_digit(a: GaussianInt) -> bool:
    """True iff a is an HCF digit, i.e. a lies in Z[i] minus {0, +-1, +-i}."""
    return (a.re, a.im) not in EXCLUDED_DIGITS


def require_digit(a: GaussianInt) -> GaussianInt:
    """Return a unchanged or raise InvalidDigit."""
    if not is_digit(a):
        raise InvalidDigit(f"{a} is not an HCF digit")
    return a


def pm(a: GaussianInt) -> int:
    """The smaller of |Re a| and |Im a|."""
    return min(abs(a.re), abs(a.im))


def digits_from_pairs(pairs: Iterable) -> Tuple[GaussianInt, ...]:
    """Read a sequence of wire-form digits."""
    return tuple(GaussianInt.from_json(p) for p in pairs)
