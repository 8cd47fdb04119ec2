"""
Exact scalars of Q(sqrt d) and complex numbers over them.

QuadScalar holds a + b*sqrt(d) with rational a and b. Comparisons are exact:
the sign of a + b*sqrt(d) is decided by comparing a^2 with d*b^2, so no
floating point ever enters a geometric decision.

QuadComplex pairs two QuadScalar values as real and imaginary parts.
"""

import math
from fractions import Fraction
from functools import lru_cache, total_ordering
from typing import Optional, Union

import mpmath

from services.errors import FieldOverflow, UsageError
from .constants import FIELD_D
from .gaussian import GaussianInt


RationalLike = Union[int, Fraction, str]


@lru_cache(maxsize=64)
def is_squarefree(d: int) -> bool:
    """True iff d >= 1 has no repeated prime factor."""
    if d < 1:
        return False
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


def rational_sqrt(q: Fraction) -> Optional[Fraction]:
    """Exact square root of a non-negative rational, or None when it is irrational."""
    if q < 0:
        return None
    q = Fraction(q)
    num, den = q.numerator, q.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def _as_fraction(value: RationalLike) -> Fraction:
    if isinstance(value, bool):
        raise UsageError("booleans are not numbers here")
    if isinstance(value, float):
        raise UsageError(f"floating point value {value!r} cannot enter exact arithmetic")
    try:
        return Fraction(value)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"cannot read a rational from {value!r}") from exc


@total_ordering
class QuadScalar:
    """
    An element a + b*sqrt(d) of Q(sqrt d).

    A value with b == 0 is rational and combines freely with values of any
    field. Two irrational values of different fields never mix.

    Example:
        >>> x = QuadScalar(Fraction(-1, 2), Fraction(1, 2), 3)
        >>> (x * x) == QuadScalar(1, Fraction(-1, 2), 3)
        True
    """

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, a: RationalLike = 0, b: RationalLike = 0, d: Optional[int] = None):
        d = FIELD_D if d is None else int(d)
        if d != 0 and not is_squarefree(d):
            raise UsageError(f"field parameter d={d} must be 0 or a squarefree positive integer")
        self._a = _as_fraction(a)
        self._b = _as_fraction(b)
        self._d = d
        if d < 2:
            # sqrt(0) and sqrt(1) are rational
            self._a += self._b * d
            self._b = Fraction(0)

    # ------------------------------------------------------------------
    # accessors
    # ------------------------------------------------------------------

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def d(self) -> int:
        return self._d

    def is_rational(self) -> bool:
        return self._b == 0

    # ------------------------------------------------------------------
    # coercion
    # ------------------------------------------------------------------

    def _coerce(self, other) -> "QuadScalar":
        if isinstance(other, QuadScalar):
            if other._d == self._d or other._b == 0:
                return other
            if self._b == 0:
                return other
            raise FieldOverflow(f"cannot mix Q(sqrt {self._d}) with Q(sqrt {other._d})")
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadScalar(other, 0, self._d)
        return NotImplemented

    def _field_with(self, other: "QuadScalar") -> int:
        if self._b == 0:
            return other._d
        return self._d

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadScalar(self._a + other._a, self._b + other._b, self._field_with(other))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadScalar(self._a - other._a, self._b - other._b, self._field_with(other))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self._field_with(other)
        a = self._a * other._a + d * self._b * other._b
        b = self._a * other._b + self._b * other._a
        return QuadScalar(a, b, d)

    __rmul__ = __mul__

    def inverse(self) -> "QuadScalar":
        """1/(a + b*sqrt d) = (a - b*sqrt d)/(a^2 - d*b^2)."""
        norm = self._a * self._a - self._d * self._b * self._b
        if norm == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt d)")
        return QuadScalar(self._a / norm, -self._b / norm, self._d)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self) -> "QuadScalar":
        return QuadScalar(-self._a, -self._b, self._d)

    def __pos__(self) -> "QuadScalar":
        return self

    def __abs__(self) -> "QuadScalar":
        return -self if self.sign() < 0 else self

    def conjugate_root(self) -> "QuadScalar":
        """The Galois conjugate a - b*sqrt d."""
        return QuadScalar(self._a, -self._b, self._d)

    # ------------------------------------------------------------------
    # exact ordering
    # ------------------------------------------------------------------

    def sign(self) -> int:
        """Exact sign in {-1, 0, 1}."""
        a, b = self._a, self._b
        if b == 0:
            return (a > 0) - (a < 0)
        sb = 1 if b > 0 else -1
        if a == 0:
            return sb
        sa = 1 if a > 0 else -1
        if sa == sb:
            return sa
        lhs = a * a
        rhs = b * b * self._d
        if lhs > rhs:
            return sa
        if lhs < rhs:
            return sb
        return 0

    def is_zero(self) -> bool:
        return self._a == 0 and self._b == 0

    def __eq__(self, other) -> bool:
        try:
            other = self._coerce(other)
        except FieldOverflow:
            return False
        if other is NotImplemented:
            return NotImplemented
        return self._a == other._a and self._b == other._b

    def __lt__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() < 0

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b, self._d))

    def __bool__(self) -> bool:
        return not self.is_zero()

    # ------------------------------------------------------------------
    # roots and rounding
    # ------------------------------------------------------------------

    def sqrt(self) -> "QuadScalar":
        """
        Exact non-negative square root inside the field.

        Raises:
            FieldOverflow: when the root is not an element of Q(sqrt d).
        """
        root = self.try_sqrt()
        if root is None:
            raise FieldOverflow(f"sqrt({self}) is not in Q(sqrt {self._d})")
        return root

    def try_sqrt(self) -> Optional["QuadScalar"]:
        """Like sqrt but returns None instead of raising."""
        s = self.sign()
        if s < 0:
            return None
        if s == 0:
            return QuadScalar(0, 0, self._d)
        a, b, d = self._a, self._b, self._d
        if b == 0:
            r = rational_sqrt(a)
            if r is not None:
                return QuadScalar(r, 0, d)
            r = rational_sqrt(a / d) if d > 1 else None
            if r is not None:
                return QuadScalar(0, r, d)
            return None
        s_norm = rational_sqrt(a * a - d * b * b)
        if s_norm is None:
            return None
        for p_sq in ((a + s_norm) / 2, (a - s_norm) / 2):
            p = rational_sqrt(p_sq)
            if p is None or p == 0:
                continue
            q = b / (2 * p)
            cand = QuadScalar(p, q, d)
            if cand * cand == self:
                return cand if cand.sign() >= 0 else -cand
        return None

    def floor(self) -> int:
        """Exact floor."""
        if self._b == 0:
            return math.floor(self._a)
        guess = int(mpmath.floor(self.to_mpf(64)))
        while QuadScalar(guess, 0, self._d) > self:
            guess -= 1
        while QuadScalar(guess + 1, 0, self._d) <= self:
            guess += 1
        return guess

    # ------------------------------------------------------------------
    # conversions
    # ------------------------------------------------------------------

    def to_mpf(self, prec: int = 53) -> mpmath.mpf:
        """Nearest-rounded value at the given binary precision."""
        with mpmath.workprec(prec + 10):
            value = mpmath.mpf(self._a.numerator) / self._a.denominator
            if self._b:
                value += (mpmath.mpf(self._b.numerator) / self._b.denominator) * mpmath.sqrt(self._d)
        with mpmath.workprec(prec):
            return +value

    def __float__(self) -> float:
        return float(self.to_mpf(64))

    def __str__(self) -> str:
        if self._b == 0:
            return str(self._a)
        root = f"sqrt({self._d})"
        coeff = "" if abs(self._b) == 1 else f"{abs(self._b)}*"
        sign = "-" if self._b < 0 else "+"
        if self._a == 0:
            return f"{'-' if self._b < 0 else ''}{coeff}{root}"
        return f"{self._a}{sign}{coeff}{root}"

    def __repr__(self) -> str:
        return f"QuadScalar({self._a!s}, {self._b!s}, d={self._d})"

    def to_json(self) -> dict:
        return {"a": str(self._a), "b": str(self._b), "d": self._d}

    @classmethod
    def from_json(cls, value, d: Optional[int] = None) -> "QuadScalar":
        """Read {"a", "b", "d"}, a rational string such as "-1/2", or an int."""
        if isinstance(value, QuadScalar):
            return value
        if isinstance(value, dict):
            return cls(_as_fraction(value.get("a", 0)), _as_fraction(value.get("b", 0)),
                       value.get("d", d))
        return cls(_as_fraction(value), 0, d)


def _scalar(value, d: Optional[int] = None) -> QuadScalar:
    if isinstance(value, QuadScalar):
        return value
    return QuadScalar(value, 0, d)


class QuadComplex:
    """
    A complex number re + im*i with QuadScalar parts.

    Gaussian integers and rationals coerce automatically. Equality and hashing
    are exact, so values can key dictionaries and sets.
    """

    __slots__ = ("_re", "_im")

    def __init__(self, re=0, im=0, d: Optional[int] = None):
        re = _scalar(re, d)
        im = _scalar(im, d)
        if re.d != im.d and not (re.is_rational() or im.is_rational()):
            raise FieldOverflow("real and imaginary parts come from different fields")
        if re.is_rational() and not im.is_rational():
            re = QuadScalar(re.a, 0, im.d)
        elif im.is_rational() and not re.is_rational():
            im = QuadScalar(im.a, 0, re.d)
        self._re = re
        self._im = im

    @property
    def re(self) -> QuadScalar:
        return self._re

    @property
    def im(self) -> QuadScalar:
        return self._im

    @property
    def d(self) -> int:
        return self._re.d

    @classmethod
    def lift(cls, value) -> "QuadComplex":
        if isinstance(value, QuadComplex):
            return value
        if isinstance(value, GaussianInt):
            return cls(value.re, value.im)
        if isinstance(value, (int, Fraction, QuadScalar)) and not isinstance(value, bool):
            return cls(value, 0)
        raise UsageError(f"cannot use {value!r} as an exact complex number")

    def _coerce(self, other):
        try:
            return QuadComplex.lift(other)
        except UsageError:
            return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadComplex(self._re + other._re, self._im + other._im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadComplex(self._re - other._re, self._im - other._im)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadComplex(self._re * other._re - self._im * other._im,
                           self._re * other._im + self._im * other._re)

    __rmul__ = __mul__

    def __neg__(self) -> "QuadComplex":
        return QuadComplex(-self._re, -self._im)

    def conj(self) -> "QuadComplex":
        return QuadComplex(self._re, -self._im)

    def norm(self) -> QuadScalar:
        """Squared absolute value |z|^2, exact."""
        return self._re * self._re + self._im * self._im

    def is_zero(self) -> bool:
        return self._re.is_zero() and self._im.is_zero()

    def inverse(self) -> "QuadComplex":
        n = self.norm()
        if n.is_zero():
            raise ZeroDivisionError("inverse of 0")
        inv = n.inverse()
        return QuadComplex(self._re * inv, -self._im * inv)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._re == other._re and self._im == other._im

    def __hash__(self) -> int:
        return hash((self._re, self._im))

    def is_gaussian_rational(self) -> bool:
        return self._re.is_rational() and self._im.is_rational()

    def sort_key(self) -> tuple:
        """Deterministic exact key (real part first) for ordering points."""
        return (self._re.a, self._re.b, self._im.a, self._im.b)

    def to_mpc(self, prec: int = 53) -> mpmath.mpc:
        with mpmath.workprec(prec):
            return mpmath.mpc(self._re.to_mpf(prec), self._im.to_mpf(prec))

    def __complex__(self) -> complex:
        return complex(float(self._re), float(self._im))

    def __str__(self) -> str:
        return f"({self._re}) + ({self._im})i"

    def __repr__(self) -> str:
        return f"QuadComplex({self._re!r}, {self._im!r})"

    def to_json(self) -> dict:
        return {"re": self._re.to_json(), "im": self._im.to_json()}

    @classmethod
    def from_json(cls, value, d: Optional[int] = None) -> "QuadComplex":
        """
        Read {"re": scalar, "im": scalar} or a Gaussian pair [re, im].

        Scalars may be QuadScalar objects {"a","b","d"} or rational strings.
        """
        if isinstance(value, QuadComplex):
            return value
        if isinstance(value, dict):
            return cls(QuadScalar.from_json(value.get("re", 0), d), QuadScalar.from_json(value.get("im", 0), d))
        if isinstance(value, (list, tuple)) and len(value) == 2:
            return cls(QuadScalar.from_json(value[0], d), QuadScalar.from_json(value[1], d))
        if isinstance(value, (int, str)) and not isinstance(value, bool):
            return cls(QuadScalar.from_json(value, d), 0)
        raise UsageError(f"cannot read an exact complex number from {value!r}")


def qc(re: RationalLike = 0, im: RationalLike = 0, d: Optional[int] = None) -> QuadComplex:
    """Shorthand for a Gaussian-rational QuadComplex."""
    return QuadComplex(QuadScalar(re, 0, d), QuadScalar(im, 0, d))
