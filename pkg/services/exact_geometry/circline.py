"""
Generalized circles (circlines) as Hermitian forms.

A circline is f(z) = A|z|^2 + 2 Re(conj(beta) z) + D with A, D real and beta
complex, all exact. The Hermitian matrix is H = [[A, beta], [conj(beta), D]]
and f(z) = [conj z, 1] H [z, 1]^T. The set {f < 0} is a side of the circline:
the open disk for a circle written as |z - c|^2 - r^2, a half-plane for a line.

Moving a side through a Moebius map h uses the matrix N of h^-1:
H' = N* H N. Positive rescaling never changes a side, so the adjugate can
stand in for the inverse.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import mpmath

from services.errors import UsageError
from services.gaussian_core import GaussianInt, QuadComplex, QuadScalar

Matrix = Tuple[Tuple[QuadComplex, QuadComplex], Tuple[QuadComplex, QuadComplex]]


def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    """Lift a 2x2 nested sequence of numbers into a QuadComplex matrix."""
    (a, b), (c, d) = rows
    return ((QuadComplex.lift(a), QuadComplex.lift(b)), (QuadComplex.lift(c), QuadComplex.lift(d)))


def adjugate(m: Matrix) -> Matrix:
    """Adjugate [[d, -b], [-c, a]], the inverse up to the factor det."""
    (a, b), (c, d) = m
    return ((d, -b), (-c, a))


def apply_mobius(m: Matrix, z: QuadComplex) -> Optional[QuadComplex]:
    """h(z) = (az + b)/(cz + d); None stands for the point at infinity."""
    (a, b), (c, d) = m
    den = c * z + d
    if den.is_zero():
        return None
    return (a * z + b) / den


def mobius_at_infinity(m: Matrix) -> Optional[QuadComplex]:
    """h(infinity) = a/c, or None when h fixes infinity."""
    (a, _), (c, _) = m
    if c.is_zero():
        return None
    return a / c


def _key_component(x: QuadScalar) -> Tuple[Fraction, Fraction]:
    return (x.a, x.b)


@dataclass(frozen=True)
class Circline:
    """
    The Hermitian form f(z) = A|z|^2 + 2 Re(conj(beta) z) + D.

    Example:
        >>> c = Circline.circle(qc(1), 1)        # |z - 1|^2 - 1
        >>> c.evaluate(qc(0))
        QuadScalar(0, 0, d=3)
    """

    A: QuadScalar
    beta: QuadComplex
    D: QuadScalar

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------

    @classmethod
    def circle(cls, center, radius_sq) -> "Circline":
        """|z - c|^2 - r^2; the negative side is the open disk."""
        c = QuadComplex.lift(center)
        r2 = radius_sq if isinstance(radius_sq, QuadScalar) else QuadScalar(radius_sq)
        return cls(QuadScalar(1), -c, c.norm() - r2)

    @classmethod
    def line(cls, lam, c) -> "Circline":
        """Re(conj(lam) z) - c; the negative side is Re(conj(lam) z) < c."""
        lam = QuadComplex.lift(lam)
        if lam.is_zero():
            raise UsageError("a line needs a non-zero normal")
        c = c if isinstance(c, QuadScalar) else QuadScalar(c)
        half = Fraction(1, 2)
        return cls(QuadScalar(0), QuadComplex(lam.re * half, lam.im * half), -c)

    @classmethod
    def vertical(cls, k) -> "Circline":
        """Re z - k."""
        return cls.line(GaussianInt(1, 0), k)

    @classmethod
    def horizontal(cls, k) -> "Circline":
        """Im z - k."""
        return cls.line(GaussianInt(0, 1), k)

    @classmethod
    def through(cls, p: QuadComplex, q: QuadComplex) -> "Circline":
        """The line through two distinct points."""
        normal = (q - p) * GaussianInt(0, 1)
        return cls.line(normal, (normal.conj() * p).re)

    # ------------------------------------------------------------------
    # evaluation
    # ------------------------------------------------------------------

    def evaluate(self, z) -> QuadScalar:
        z = QuadComplex.lift(z)
        linear = self.beta.re * z.re + self.beta.im * z.im
        return self.A * z.norm() + linear * 2 + self.D

    def sign_at(self, z) -> int:
        return self.evaluate(z).sign()

    def evaluate_mp(self, z: mpmath.mpc, prec: int = 53) -> mpmath.mpf:
        """Floating evaluation used by the uncertified fallback."""
        with mpmath.workprec(prec):
            A = self.A.to_mpf(prec)
            br, bi = self.beta.re.to_mpf(prec), self.beta.im.to_mpf(prec)
            D = self.D.to_mpf(prec)
            return A * (z.real ** 2 + z.imag ** 2) + 2 * (br * z.real + bi * z.imag) + D

    # ------------------------------------------------------------------
    # shape
    # ------------------------------------------------------------------

    def is_line(self) -> bool:
        return self.A.is_zero()

    def is_constant(self) -> bool:
        return self.A.is_zero() and self.beta.is_zero()

    def center(self) -> QuadComplex:
        if self.is_line():
            raise UsageError("a line has no center")
        return -self.beta / self.A

    def radius_sq(self) -> QuadScalar:
        c = self.center()
        return c.norm() - self.D / self.A

    def coefficients(self) -> Tuple[QuadScalar, QuadScalar, QuadScalar, QuadScalar]:
        return (self.A, self.beta.re, self.beta.im, self.D)

    def _leading(self) -> QuadScalar:
        for x in self.coefficients():
            if not x.is_zero():
                return x
        return QuadScalar(0)

    def scaled(self, s) -> "Circline":
        return Circline(self.A * s, self.beta * s, self.D * s)

    def negated(self) -> "Circline":
        return Circline(-self.A, -self.beta, -self.D)

    def side_key(self) -> tuple:
        """Exact key equal for forms that differ by a positive factor."""
        lead = self._leading()
        if lead.is_zero():
            return ("zero",)
        s = abs(lead).inverse()
        return tuple(_key_component(x * s) for x in self.coefficients())

    def carrier_key(self) -> tuple:
        """Exact key equal for forms with the same zero set."""
        lead = self._leading()
        if lead.is_zero():
            return ("zero",)
        s = lead.inverse()
        return tuple(_key_component(x * s) for x in self.coefficients())

    def same_carrier(self, other: "Circline") -> bool:
        return self.carrier_key() == other.carrier_key()

    def is_opposite(self, other: "Circline") -> bool:
        """True iff other = -c * self for some c > 0."""
        return self.same_carrier(other) and self.side_key() != other.side_key()

    # ------------------------------------------------------------------
    # transport
    # ------------------------------------------------------------------

    def pulled_back(self, n: Matrix) -> "Circline":
        """
        The form w -> f(n(w)) (times |cw + d|^2) for the Moebius matrix n.

        If h sends z to w, pulling back by the matrix of h^-1 gives the image side.
        """
        (n11, n12), (n21, n22) = n
        A, beta, D = QuadComplex.lift(self.A), self.beta, QuadComplex.lift(self.D)
        bc = beta.conj()
        h00 = A * n11.conj() * n11 + beta * n11.conj() * n21 + bc * n11 * n21.conj() + D * n21.conj() * n21
        h01 = n11.conj() * (A * n12 + beta * n22) + n21.conj() * (bc * n12 + D * n22)
        h11 = A * n12.conj() * n12 + beta * n12.conj() * n22 + bc * n12 * n22.conj() + D * n22.conj() * n22
        return Circline(h00.re, h01, h11.re)

    def mobius_image(self, m: Matrix) -> "Circline":
        """The image of the circline (with its sides) under h with matrix m."""
        return self.pulled_back(adjugate(m))

    def inverted(self) -> "Circline":
        """Image under z -> 1/z: (A, beta, D) -> (D, conj beta, A)."""
        return Circline(self.D, self.beta.conj(), self.A)

    def translated(self, a) -> "Circline":
        """Image under z -> z + a."""
        a = QuadComplex.lift(a)
        return Circline(self.A, self.beta - a * self.A, self.A * a.norm() - (a.conj() * self.beta).re * 2 + self.D)

    def conjugated(self) -> "Circline":
        """Image under z -> conj z."""
        return Circline(self.A, self.beta.conj(), self.D)

    # ------------------------------------------------------------------
    # boxes
    # ------------------------------------------------------------------

    def meets_box(self, box: "Box") -> bool:
        """True iff the zero set meets the closed box."""
        if self.is_constant():
            return self.D.is_zero()
        if self.is_line():
            signs = {self.sign_at(p) for p in box.corners()}
            return 0 in signs or (1 in signs and -1 in signs)
        c = self.center()
        r2 = self.radius_sq()
        return box.min_dist_sq(c) <= r2 <= box.max_dist_sq(c)

    # ------------------------------------------------------------------
    # wire format
    # ------------------------------------------------------------------

    def to_json(self) -> dict:
        return {"A": self.A.to_json(), "beta": self.beta.to_json(), "D": self.D.to_json()}

    def describe(self) -> str:
        if self.is_constant():
            return f"constant {self.D}"
        if self.is_line():
            return f"line Re(conj({self.beta}) z) = {-self.D / 2}"
        return f"circle C({self.center()}; r^2={self.radius_sq()})"


@dataclass(frozen=True)
class Box:
    """A closed axis-parallel box [x0, x1] x [y0, y1] with exact corners."""

    x0: QuadScalar
    x1: QuadScalar
    y0: QuadScalar
    y1: QuadScalar

    def corners(self):
        return (QuadComplex(self.x0, self.y0), QuadComplex(self.x1, self.y0),
                QuadComplex(self.x1, self.y1), QuadComplex(self.x0, self.y1))

    def is_empty(self) -> bool:
        return self.x0 > self.x1 or self.y0 > self.y1

    def _clamp(self, v: QuadScalar, lo: QuadScalar, hi: QuadScalar) -> QuadScalar:
        return lo if v < lo else hi if v > hi else v

    def min_dist_sq(self, c: QuadComplex) -> QuadScalar:
        dx = c.re - self._clamp(c.re, self.x0, self.x1)
        dy = c.im - self._clamp(c.im, self.y0, self.y1)
        return dx * dx + dy * dy

    def max_dist_sq(self, c: QuadComplex) -> QuadScalar:
        return max((p - c).norm() for p in self.corners())

    def float_bounds(self) -> Tuple[float, float, float, float]:
        return float(self.x0), float(self.x1), float(self.y0), float(self.y1)
