"""
Nearest Gaussian integer and the fundamental domain F.

F = {z : -1/2 <= Re z < 1/2, -1/2 <= Im z < 1/2}. The half-open edges are
the tie-breaking rule of the nearest-integer map: [z] = floor(z + (1+i)/2).
"""

import logging
from fractions import Fraction
from typing import Union

import mpmath

from services.errors import Undecidable, UsageError
from .gaussian import GaussianInt
from .scalars import QuadComplex, QuadScalar

logger = logging.getLogger("hcf.gaussian")

HALF = Fraction(1, 2)


def _floor_half(x: QuadScalar) -> int:
    return (x + HALF).floor()


def _floor_half_interval(lo, hi, what: str) -> int:
    a = int(mpmath.floor(lo + mpmath.mpf(0.5)))
    b = int(mpmath.floor(hi + mpmath.mpf(0.5)))
    if a != b:
        logger.debug(f"Ball rounding undecided on the {what} axis: [{lo}, {hi}]")
        raise Undecidable(f"{what} part of the ball straddles a rounding line near {a} + 1/2")
    return a


def nearest_gaussian(z: Union[QuadComplex, GaussianInt, "object"]) -> GaussianInt:
    """
    The nearest Gaussian integer [z] = floor(Re z + 1/2) + i*floor(Im z + 1/2).

    Args:
        z: an exact QuadComplex (or GaussianInt), or any ball-like object
           exposing bounds() -> (re_lo, re_hi, im_lo, im_hi).

    Returns:
        GaussianInt: the rounding of z.

    Raises:
        Undecidable: when a ball contains points rounding to different integers.

    Example:
        >>> nearest_gaussian(qc(Fraction(1, 2), Fraction(-1, 2)))
        GaussianInt(re=1, im=0)
    """
    if isinstance(z, GaussianInt):
        return z
    if isinstance(z, QuadComplex):
        return GaussianInt(_floor_half(z.re), _floor_half(z.im))
    bounds = getattr(z, "bounds", None)
    if bounds is None:
        raise UsageError(f"nearest_gaussian cannot round {type(z).__name__}")
    re_lo, re_hi, im_lo, im_hi = bounds()
    return GaussianInt(_floor_half_interval(re_lo, re_hi, "real"),
                       _floor_half_interval(im_lo, im_hi, "imaginary"))


def in_fundamental_domain(z: QuadComplex) -> bool:
    """True iff z lies in F, with the half-open edge convention."""
    z = QuadComplex.lift(z)
    return (-HALF <= z.re < HALF) and (-HALF <= z.im < HALF)


def in_closed_domain(z: QuadComplex) -> bool:
    """True iff z lies in the closure of F."""
    z = QuadComplex.lift(z)
    return (-HALF <= z.re <= HALF) and (-HALF <= z.im <= HALF)


def alpha(d: int = 3) -> QuadScalar:
    """alpha = (2 - sqrt 3)/2, the height of the irregular segment endpoints."""
    if d != 3:
        raise UsageError("alpha lives in Q(sqrt 3); start the session with d=3")
    return QuadScalar(1, Fraction(-1, 2), 3)


def zeta(k: int) -> QuadComplex:
    """
    The four extremely irregular points:
    zeta1 = -1/2 + i*alpha, zeta2 = -1/2 - i*alpha, zeta3 = -alpha - i/2, zeta4 = alpha - i/2.
    """
    a = alpha(3)
    half = QuadScalar(HALF, 0, 3)
    table = {
        1: QuadComplex(-half, a),
        2: QuadComplex(-half, -a),
        3: QuadComplex(-a, -half),
        4: QuadComplex(a, -half),
    }
    if k not in table:
        raise UsageError(f"there is no zeta{k}; choose 1..4")
    return table[k]
