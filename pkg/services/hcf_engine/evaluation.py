"""
Certified evaluation of digit sequences.

lambda_bar evaluates members of the closed regular shift: the prefix length
m is the least one with 2/psi^(m-1) <= target radius, and the ball around
p_m/q_m gets radius 1/|q_m|^2 plus rounding.
"""

import logging
from dataclasses import dataclass

import mpmath

from services.errors import NotInClosedShift, PreconditionViolated
from services.symbolic_shift import DigitSeq, SoficGraph, Word, as_digit_seq, build_sofic_graph
from .balls import ComplexBall
from .constants import GUARD_BITS, PSI, START_PRECISION_BITS
from .convergents import convergents

logger = logging.getLogger("hcf.engine")


@dataclass
class Evaluation:
    """A certified ball for the value of a digit sequence and the prefix that produced it."""

    ball: ComplexBall
    prefix_length: int
    target_radius: mpmath.mpf

    def to_json(self) -> dict:
        return {
            "ball": self.ball.to_json(),
            "prefix_length": self.prefix_length,
            "target_radius": mpmath.nstr(self.target_radius, 6),
        }


def prefix_length_for(target_radius) -> int:
    """Least m >= 1 with 2/psi^(m-1) <= target_radius."""
    target = mpmath.mpf(target_radius)
    if target <= 0:
        raise PreconditionViolated("the target radius must be positive")
    m = 1
    with mpmath.workdps(30):
        while 2 / PSI ** (m - 1) > target:
            m += 1
    return m


def _precision_for(target) -> int:
    bits = int(-mpmath.log(mpmath.mpf(target), 2)) if target < 1 else 0
    return max(START_PRECISION_BITS, bits + GUARD_BITS)


def _ball_at(word: Word, prec: int, complete: bool = False) -> ComplexBall:
    """Ball around p_n/q_n; a complete finite word is its own value."""
    last = convergents(word)[-1]
    with mpmath.workprec(prec):
        p = mpmath.mpc(last.p.re, last.p.im)
        q = mpmath.mpc(last.q.re, last.q.im)
        mid = p / q
        tail = 0 if complete else mpmath.fdiv(1, last.q.norm(), rounding="u")
        rad = mpmath.fadd(tail, mpmath.fmul(abs(mid), mpmath.ldexp(1, 3 - prec), rounding="u"), rounding="u")
    return ComplexBall(mid, rad, prec)


def lambda_valid(seq, n: int, prec: int = START_PRECISION_BITS) -> ComplexBall:
    """
    Ball around the value of a valid sequence from its first n digits.

    The value lies in the cylinder of the prefix, hence within 1/|q_n|^2 of p_n/q_n.
    Validity is the caller's claim; nothing is checked here.
    """
    return _ball_at(as_digit_seq(seq).take(n), prec)


def lambda_bar(seq, target_radius, graph: SoficGraph = None) -> Evaluation:
    """
    Certified value of a sequence of the closed regular shift.

    Args:
        seq: a DigitSeq, Word or wire-form digit list
        target_radius: largest acceptable ball radius

    Returns:
        Evaluation: ball of radius <= target_radius (up to rounding) containing the limit

    Raises:
        NotInClosedShift: a prefix of the sequence fails regularity.
    """
    seq: DigitSeq = as_digit_seq(seq)
    target = mpmath.mpf(target_radius)
    m = seq.available(prefix_length_for(target))
    word = seq.take(m)
    walk = (graph or build_sofic_graph()).walk(word)
    if not walk.regular:
        logger.error(f"lambda_bar: prefix of length {walk.broke_at} is not regular")
        raise NotInClosedShift(f"the prefix of length {walk.broke_at} of {seq.description} is not regular")
    ball = _ball_at(word, _precision_for(target), seq.is_finite() and m == seq.length)
    logger.debug(f"lambda_bar used {m} digits, radius {mpmath.nstr(ball.rad, 3)}")
    return Evaluation(ball, m, target)
