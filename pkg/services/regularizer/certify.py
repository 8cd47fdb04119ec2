"""
Numerical certificates around the regularizer and its closure-point use.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

import mpmath

from services.errors import PreconditionViolated
from services.gaussian_core import IDENTITY, MIR1, MIR2, GaussianInt, QuadComplex, in_closed_domain, pm
from services.hcf_engine import PSI, ComplexBall, expansion_seq, lambda_valid
from services.symbolic_shift import CATALOGUE, SQUARE, SoficGraph, as_digit_seq, build_sofic_graph, digits_in_box
from .algorithm import Regularization, run_regularizer
from .constants import BREAKPOINT_TAIL_DIGITS, REGULARIZE_SLACK

logger = logging.getLogger("hcf.regularizer")

HALF = Fraction(1, 2)


@dataclass
class GapReport:
    """Upper bound on |value(b) - value(a)| from prefixes of length n."""

    n: int
    gap_upper: mpmath.mpf
    bound: mpmath.mpf
    tolerance: Optional[mpmath.mpf] = None

    @property
    def within_bound(self) -> bool:
        return self.gap_upper <= self.bound

    @property
    def within_tolerance(self) -> bool:
        """Against the caller's tolerance, or the cylinder bound when none was given."""
        limit = self.bound if self.tolerance is None else self.tolerance
        return self.gap_upper <= limit

    def to_json(self) -> dict:
        return {
            "prefix_length": self.n,
            "gap_upper": mpmath.nstr(self.gap_upper, 6),
            "bound": mpmath.nstr(self.bound, 6),
            "within_bound": self.within_bound,
            "tolerance": None if self.tolerance is None else mpmath.nstr(self.tolerance, 6),
            "within_tolerance": self.within_tolerance,
        }


def certify_gap(a, b, n: Optional[int] = None, tolerance=None) -> GapReport:
    """
    Certified gap between the value of the input a and of its regularization b.

    Both values lie within 1/|q_n|^2 of their n-th convergent, so the
    reported gap is an upper bound. The comparison bound is 2/psi^(n-1).

    Raises:
        PreconditionViolated: no digits to compare, a non-positive tolerance,
            or a prefix of a whose denominator vanishes.
    """
    if tolerance is not None:
        tolerance = mpmath.mpf(str(tolerance))
        if tolerance <= 0:
            raise PreconditionViolated("the gap tolerance must be positive")
    seq_a, seq_b = as_digit_seq(a), as_digit_seq(b)
    n = n if n is not None else seq_b.available(10 ** 9)
    n = min(n, seq_a.available(n), seq_b.available(n))
    if n < 1:
        raise PreconditionViolated("certify_gap needs at least one digit of each sequence")
    try:
        ball_a = lambda_valid(seq_a, n)
    except ZeroDivisionError:
        raise PreconditionViolated(f"the first {n} digits of {seq_a.description} have a vanishing denominator")
    ball_b = lambda_valid(seq_b, n)
    gap = ball_a.distance_upper(ball_b)
    with mpmath.workdps(30):
        bound = 2 / PSI ** (n - 1) + ball_a.rad + ball_b.rad
    report = GapReport(n, gap, bound, tolerance)
    if not report.within_tolerance:
        logger.warning(f"certify_gap: gap {mpmath.nstr(gap, 6)} exceeds the tolerance after {n} digits")
    return report


# ============================================================================
# CLOSURE POINTS
# ============================================================================

def _edge_reflection(z: QuadComplex):
    sym = IDENTITY
    if z.im == HALF:
        sym = MIR1.compose(sym)
    if z.re == HALF:
        sym = MIR2.compose(sym)
    return sym


def closure_preimage(z: QuadComplex, out_len: int, slack: int = REGULARIZE_SLACK,
                     graph: Optional[SoficGraph] = None) -> Regularization:
    """
    Digits of a member b of the closed regular shift whose value is z.

    z may lie on the right or top edge of the closed square. Such a point
    is first reflected into F (Mir1 across Im = 1/2, Mir2 across Re = 1/2),
    expanded, regularized, and the digits reflected back.

    Raises:
        PreconditionViolated: z is outside the closed square or a Gaussian rational.
    """
    z = QuadComplex.lift(z)
    if not in_closed_domain(z):
        raise PreconditionViolated(f"{z} is outside the closed fundamental domain")
    if z.is_gaussian_rational():
        raise PreconditionViolated(f"{z} is a Gaussian rational and has no infinite expansion")
    sym = _edge_reflection(z)
    inner = sym.inverse()(z)
    result = run_regularizer(expansion_seq(inner), out_len, slack, validate=False, graph=graph)
    if sym == IDENTITY:
        return result
    logger.info(f"closure_preimage: {z} reflected by {sym.name}")
    return Regularization(result.digits.apply_symmetry(sym), result.trace, result.state)


# ============================================================================
# ORACLES
# ============================================================================

def breakpoint_value(seq, j: int, tail_digits: int = BREAKPOINT_TAIL_DIGITS) -> ComplexBall:
    """
    Ball around [b_{j+1}; b_{j+2}, b_{j+3}, ...] for a valid sequence.
    """
    seq = as_digit_seq(seq)
    head = seq.digit(j + 1)
    tail = seq.shifted(j + 1)
    return lambda_valid(tail, tail.available(tail_digits)) + head


def on_half_line(ball: ComplexBall) -> bool:
    """True when the ball does not exclude Re = 1/2 or Im = 1/2."""
    half = mpmath.mpf(1) / 2
    return abs(ball.mid.real - half) <= ball.rad or abs(ball.mid.imag - half) <= ball.rad


def absorption_violations(radius: int = 4, graph: Optional[SoficGraph] = None) -> List[dict]:
    """
    Regular words (..., c, d) with c in {m, im}, |m| >= 2, must end in the
    state of the single digit d. Returns the transitions where they do not.
    """
    g = graph or build_sofic_graph()
    digits = digits_in_box(radius)
    absorbers = [c for c in digits if pm(c) == 0]
    bad = []
    for p in CATALOGUE:
        for c in absorbers:
            q = g.step(p, c)
            if q is None:
                continue
            for d in digits:
                after = g.step(q, d)
                if after is not None and after is not g.step(SQUARE, d):
                    bad.append({"state": p.name, "c": c.to_json(), "d": d.to_json(), "got": after.name})
    return bad
