"""
Midpoint-radius complex balls over mpmath.

A ComplexBall encloses one complex value: every operation adds the
propagated error of its inputs and a rounding term for its own midpoint,
so the enclosure survives arbitrary chains of arithmetic.
"""

from typing import Tuple, Union

import mpmath

from services.errors import UsageError, ZeroDenominator
from services.gaussian_core import GaussianInt, QuadComplex, Symmetry
from .constants import START_PRECISION_BITS


def _ulp(prec: int) -> mpmath.mpf:
    return mpmath.ldexp(mpmath.mpf(1), 1 - prec)


def _up(x, prec: int) -> mpmath.mpf:
    """x as an mpf of prec bits, rounded towards +infinity."""
    return mpmath.mpf(x, prec=prec, rounding="u")


class ComplexBall:
    """
    The closed disk of radius rad around mid, at a working precision.

    Example:
        >>> b = ComplexBall.exact(qc(1, 2), 128)
        >>> b.contains(qc(1, 2))
        True
    """

    __slots__ = ("mid", "rad", "prec")

    def __init__(self, mid, rad=0, prec: int = START_PRECISION_BITS):
        self.prec = prec
        with mpmath.workprec(prec):
            self.mid = mpmath.mpc(mid)
        self.rad = _up(rad, prec)
        if self.rad < 0:
            raise UsageError("a ball radius cannot be negative")

    # ------------------------------------------------------------------
    # construction
    # ------------------------------------------------------------------

    @classmethod
    def exact(cls, z: Union[QuadComplex, GaussianInt, int], prec: int = START_PRECISION_BITS) -> "ComplexBall":
        """The tightest ball around an exact value at this precision."""
        z = QuadComplex.lift(z)
        mid = z.to_mpc(prec)
        return cls(mid, abs(mid) * _ulp(prec), prec)

    @classmethod
    def from_json(cls, value: dict, prec: int = START_PRECISION_BITS) -> "ComplexBall":
        """Read {"mid": ["re", "im"], "rad": "x"} with decimal strings."""
        try:
            re, im = value["mid"]
            with mpmath.workprec(prec):
                return cls(mpmath.mpc(mpmath.mpf(str(re)), mpmath.mpf(str(im))), mpmath.mpf(str(value.get("rad", 0))), prec)
        except (KeyError, TypeError, ValueError) as e:
            raise UsageError(f"cannot read a ball from {value!r}: {e}")

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------

    def _lift(self, other) -> "ComplexBall":
        if isinstance(other, ComplexBall):
            return other
        return ComplexBall.exact(other, self.prec)

    def _rounded(self, mid, rad) -> "ComplexBall":
        """Pad rad for the rounding of mid and of the nearest-rounded abs() that fed rad."""
        with mpmath.workprec(self.prec):
            pad = mpmath.fmul(mpmath.fadd(abs(mid), rad, rounding="u"), _ulp(self.prec - 2), rounding="u")
            return ComplexBall(mid, mpmath.fadd(rad, pad, rounding="u"), self.prec)

    def __add__(self, other) -> "ComplexBall":
        other = self._lift(other)
        with mpmath.workprec(self.prec):
            return self._rounded(self.mid + other.mid, mpmath.fadd(self.rad, other.rad, rounding="u"))

    __radd__ = __add__

    def __sub__(self, other) -> "ComplexBall":
        other = self._lift(other)
        with mpmath.workprec(self.prec):
            return self._rounded(self.mid - other.mid, mpmath.fadd(self.rad, other.rad, rounding="u"))

    def __rsub__(self, other) -> "ComplexBall":
        return self._lift(other) - self

    def __neg__(self) -> "ComplexBall":
        return ComplexBall(-self.mid, self.rad, self.prec)

    def __mul__(self, other) -> "ComplexBall":
        other = self._lift(other)
        with mpmath.workprec(self.prec):
            cross = mpmath.fadd(mpmath.fmul(abs(self.mid), other.rad, rounding="u"),
                                mpmath.fmul(abs(other.mid), self.rad, rounding="u"), rounding="u")
            rad = mpmath.fadd(cross, mpmath.fmul(self.rad, other.rad, rounding="u"), rounding="u")
            return self._rounded(self.mid * other.mid, rad)

    __rmul__ = __mul__

    def inverse(self) -> "ComplexBall":
        """
        1/(m + e) for |e| <= r.

        Raises:
            ZeroDenominator: when the ball contains 0.
        """
        with mpmath.workprec(self.prec):
            m = mpmath.fmul(abs(self.mid), 1 - _ulp(self.prec - 1), rounding="d")
            if m <= self.rad:
                raise ZeroDenominator("the ball contains 0 and cannot be inverted")
            gap = mpmath.fsub(m, self.rad, rounding="d")
            rad = mpmath.fdiv(self.rad, mpmath.fmul(m, gap, rounding="d"), rounding="u")
            return self._rounded(1 / self.mid, rad)

    def __truediv__(self, other) -> "ComplexBall":
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other) -> "ComplexBall":
        return self._lift(other) * self.inverse()

    # ------------------------------------------------------------------
    # queries
    # ------------------------------------------------------------------

    def bounds(self) -> Tuple[mpmath.mpf, mpmath.mpf, mpmath.mpf, mpmath.mpf]:
        """(re_lo, re_hi, im_lo, im_hi) of the enclosing box."""
        return (self.mid.real - self.rad, self.mid.real + self.rad,
                self.mid.imag - self.rad, self.mid.imag + self.rad)

    def contains(self, z) -> bool:
        if isinstance(z, ComplexBall):
            return abs(self.mid - z.mid) + z.rad <= self.rad
        value = QuadComplex.lift(z).to_mpc(self.prec + 32)
        with mpmath.workprec(self.prec + 32):
            return abs(self.mid - value) <= self.rad

    def contains_zero(self) -> bool:
        return abs(self.mid) <= self.rad

    def overlaps(self, other: "ComplexBall") -> bool:
        with mpmath.workprec(max(self.prec, other.prec)):
            return abs(self.mid - other.mid) <= self.rad + other.rad

    def distance_upper(self, other: "ComplexBall") -> mpmath.mpf:
        """An upper bound on the distance between the enclosed values."""
        with mpmath.workprec(max(self.prec, other.prec)):
            return mpmath.fadd(mpmath.fadd(abs(self.mid - other.mid), self.rad, rounding="u"), other.rad, rounding="u")

    def with_precision(self, prec: int) -> "ComplexBall":
        return ComplexBall(self.mid, self.rad, prec)

    def conj(self) -> "ComplexBall":
        return ComplexBall(mpmath.conj(self.mid), self.rad, self.prec)

    def apply_symmetry(self, s: Symmetry) -> "ComplexBall":
        """D8 acts isometrically, so only the midpoint moves."""
        mid = mpmath.conj(self.mid) if s.reflect else self.mid
        unit = s.rotation
        with mpmath.workprec(self.prec):
            return ComplexBall(mid * mpmath.mpc(unit.re, unit.im), self.rad, self.prec)

    def to_json(self, digits: int = 40) -> dict:
        """The printed ball still encloses this one: rad is padded for both roundings."""
        with mpmath.workprec(self.prec):
            mid_error = (abs(self.mid.real) + abs(self.mid.imag) + 1) * mpmath.mpf(10) ** (1 - digits)
            rad = (self.rad + mid_error) * (1 + mpmath.mpf(10) ** -5)
        return {
            "mid": [mpmath.nstr(self.mid.real, digits), mpmath.nstr(self.mid.imag, digits)],
            "rad": mpmath.nstr(rad, 6),
        }

    def __repr__(self) -> str:
        return f"ComplexBall({mpmath.nstr(self.mid, 20)} +/- {mpmath.nstr(self.rad, 3)})"
