"""
The complex Gauss map and HCF expansions.

Exact input (QuadComplex) is expanded exactly and never fails. Ball input
is expanded at a working precision that doubles on every Undecidable
rounding until the configured cap.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, List, Tuple, Union

from config.settings import settings
from services.errors import PreconditionViolated, Undecidable, ZeroDenominator, ZeroInput
from services.gaussian_core import GaussianInt, QuadComplex, in_fundamental_domain, nearest_gaussian
from services.symbolic_shift import DigitSeq, Word
from .balls import ComplexBall
from .constants import PRECISION_CAP_BITS, START_PRECISION_BITS
from .convergents import convergents, gaussian_rational_json

logging.basicConfig(level=getattr(logging, settings.LOG_LEVEL, logging.WARNING))
logger = logging.getLogger("hcf.engine")


@dataclass
class Expansion:
    """
    First digits of z = a0 + [0; a1, a2, ...].

    terminated is True when the orbit reached 0, which happens exactly for
    Gaussian-rational input.
    """

    a0: GaussianInt
    digits: List[GaussianInt]
    terminated: bool = False
    orbit: List[Union[QuadComplex, ComplexBall]] = field(default_factory=list)
    precision: int = 0

    @property
    def word(self) -> Word:
        return Word(self.digits)

    def convergent_values(self) -> List[dict]:
        """p_k/q_k for k = 0 .. n as exact {"re", "im"} strings, a0 included."""
        return [gaussian_rational_json(c.value()) for c in convergents(self.word, self.a0)]

    def to_json(self) -> dict:
        data = {
            "a0": self.a0.to_json(),
            "digits": [a.to_json() for a in self.digits],
            "terminated": self.terminated,
        }
        if self.precision:
            data["precision"] = self.precision
        return data


# ============================================================================
# EXACT
# ============================================================================

def gauss_map(z: QuadComplex) -> Tuple[GaussianInt, QuadComplex]:
    """
    One step of T(z) = 1/z - [1/z].

    Args:
        z: an exact point of F other than 0

    Returns:
        (digit, next): the digit [1/z] and the point T(z), again in F

    Raises:
        ZeroInput: z is 0.
        PreconditionViolated: z lies outside F.
    """
    z = QuadComplex.lift(z)
    if z.is_zero():
        raise ZeroInput("the Gauss map is undefined at 0")
    if not in_fundamental_domain(z):
        raise PreconditionViolated(f"{z} is outside the fundamental domain")
    w = z.inverse()
    digit = nearest_gaussian(w)
    return digit, w - digit


def expand(z: QuadComplex, n_digits: int) -> Expansion:
    """
    Peel a0 = [z] and produce up to n_digits digits of z - a0.

    The expansion stops early iff the orbit hits 0.
    """
    z = QuadComplex.lift(z)
    a0 = nearest_gaussian(z)
    t = z - a0
    digits, orbit = [], [t]
    while len(digits) < n_digits and not t.is_zero():
        a, t = gauss_map(t)
        digits.append(a)
        orbit.append(t)
    return Expansion(a0, digits, t.is_zero(), orbit)


def expansion_seq(z: QuadComplex) -> DigitSeq:
    """
    The digit sequence of a point of F, produced lazily.

    Gaussian rationals give the finite (complete) expansion.
    """
    z = QuadComplex.lift(z)
    if not in_fundamental_domain(z):
        raise PreconditionViolated(f"{z} is outside the fundamental domain")
    if z.is_gaussian_rational():
        exp = expand(z, 10 ** 9)
        return DigitSeq.finite(exp.digits, f"expansion of {z}")

    produced: List[GaussianInt] = []
    state = [z]

    def produce(n: int) -> GaussianInt:
        while len(produced) < n:
            a, state[0] = gauss_map(state[0])
            produced.append(a)
        return produced[n - 1]

    return DigitSeq.from_function(produce, None, f"expansion of {z}")


def orbit(z: QuadComplex, steps: int) -> List[QuadComplex]:
    """[z, T z, ..., T^steps z], shorter if the orbit reaches 0."""
    return expand(z, steps).orbit


# ============================================================================
# BALLS
# ============================================================================

def _expand_ball_once(ball: ComplexBall, n_digits: int) -> Expansion:
    a0 = nearest_gaussian(ball)
    t = ball - a0
    digits, orbit_balls = [], [t]
    while len(digits) < n_digits:
        if t.contains_zero():
            if t.mid == 0 and t.rad == 0:
                return Expansion(a0, digits, True, orbit_balls, ball.prec)
            raise Undecidable(f"orbit ball at step {len(digits)} contains 0")
        try:
            w = t.inverse()
        except ZeroDenominator as e:
            raise Undecidable(str(e))
        a = nearest_gaussian(w)
        t = w - a
        digits.append(a)
        orbit_balls.append(t)
    return Expansion(a0, digits, False, orbit_balls, ball.prec)


def expand_ball(source: Union[QuadComplex, ComplexBall, Callable[[int], ComplexBall]], n_digits: int,
                start_prec: int = START_PRECISION_BITS, cap: int = PRECISION_CAP_BITS) -> Expansion:
    """
    Expand a value given as a ball, refining precision on demand.

    Args:
        source: an exact value, a fixed ball, or a callable returning the
            value's ball at a requested precision
        n_digits: number of digits wanted
        start_prec: initial working precision in bits
        cap: largest precision tried

    Raises:
        Undecidable: the digits are still undecided at the cap, or a fixed
            ball is too coarse.
    """
    if isinstance(source, ComplexBall):
        return _expand_ball_once(source, n_digits)
    if isinstance(source, (QuadComplex, GaussianInt, int)):
        exact = QuadComplex.lift(source)
        source = lambda prec: ComplexBall.exact(exact, prec)
    prec = start_prec
    while True:
        try:
            return _expand_ball_once(source(prec), n_digits)
        except Undecidable as e:
            if prec * 2 > cap:
                logger.error(f"Expansion undecided at the {cap}-bit cap: {e}")
                raise Undecidable(f"{e} (precision cap {cap} bits reached)")
            prec *= 2
            logger.info(f"Ball expansion undecided, doubling precision to {prec} bits")
