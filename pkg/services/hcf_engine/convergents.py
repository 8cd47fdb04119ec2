"""
Convergents, finite evaluation, the mirror formula and the tail identity.

Every value here is an exact Gaussian rational held in a QuadComplex.
"""

from dataclasses import dataclass
from typing import List, Tuple

import mpmath

from services.errors import ZeroDenominator
from services.gaussian_core import ZERO, GaussianInt, QuadComplex, is_digit
from services.symbolic_shift import Word
from .constants import PSI


@dataclass(frozen=True)
class ConvergentPair:
    """p_n / q_n for index n."""

    n: int
    p: GaussianInt
    q: GaussianInt

    def value(self) -> QuadComplex:
        if self.q.is_zero():
            raise ZeroDenominator(f"q_{self.n} = 0")
        return QuadComplex.lift(self.p) / QuadComplex.lift(self.q)

    def to_json(self) -> dict:
        return {"n": self.n, "p": self.p.to_json(), "q": self.q.to_json()}


def gaussian_rational_json(z: QuadComplex) -> dict:
    """{"re": "p/q", "im": "r/s"} for a Gaussian rational."""
    return {"re": str(z.re.a), "im": str(z.im.a)}


def convergents(w: Word, a0: GaussianInt = ZERO) -> List[ConvergentPair]:
    """
    Pairs (p_n, q_n) for n = 0 .. |w| from

        p_n = a_n p_{n-1} + p_{n-2},   q_n = a_n q_{n-1} + q_{n-2}

    with p_{-1} = 1, p_{-2} = 0, q_{-1} = 0, q_{-2} = 1 and a_0 given.
    """
    p_prev2, p_prev = GaussianInt(0), GaussianInt(1)
    q_prev2, q_prev = GaussianInt(1), GaussianInt(0)
    out = []
    for n, a in enumerate((a0,) + tuple(w)):
        p = a * p_prev + p_prev2
        q = a * q_prev + q_prev2
        out.append(ConvergentPair(n, p, q))
        p_prev2, p_prev = p_prev, p
        q_prev2, q_prev = q_prev, q
    return out


def evaluate_finite(w: Word) -> QuadComplex:
    """
    [0; a_1, ..., a_n] = p_n / q_n exactly; the empty word evaluates to 0.

    Raises:
        ZeroDenominator: q_n = 0 (only possible for words that are not valid).
    """
    return convergents(w)[-1].value()


def continued_fraction(digits) -> QuadComplex:
    """
    The formal value <0; d_1, ..., d_k> = 1/(d_1 + 1/(d_2 + ...)).

    Raises:
        ZeroDenominator: an intermediate denominator vanishes.
    """
    t = None
    for d in reversed(tuple(digits)):
        d = QuadComplex.lift(d)
        if t is None:
            t = d
            continue
        if t.is_zero():
            raise ZeroDenominator("intermediate denominator is 0")
        t = d + t.inverse()
    if t is None:
        return QuadComplex.lift(0)
    if t.is_zero():
        raise ZeroDenominator("final denominator is 0")
    return t.inverse()


def mirror(w: Word) -> Tuple[QuadComplex, QuadComplex]:
    """
    Both sides of q_{n-1}/q_n = <0; a_n, a_{n-1}, ..., a_1>.

    Raises:
        ZeroDenominator: q_n = 0 or the reversed evaluation breaks down.
    """
    conv = convergents(w)
    q_n, q_prev = conv[-1].q, conv[-2].q if len(conv) > 1 else GaussianInt(0)
    if q_n.is_zero():
        raise ZeroDenominator(f"q_{len(w)} = 0")
    lhs = QuadComplex.lift(q_prev) / QuadComplex.lift(q_n)
    rhs = continued_fraction(reversed(tuple(w)))
    return lhs, rhs


def tail_identity(word: Word, tail: QuadComplex) -> Tuple[QuadComplex, QuadComplex]:
    """
    Both sides of the tail reconstruction for word = (a_1, ..., a_{n+1}):

        [0; a_1, ..., a_n, a_{n+1} + t]  and
        ((a_{n+1} + t) p_n + p_{n-1}) / ((a_{n+1} + t) q_n + q_{n-1}).

    Raises:
        ZeroDenominator: either side has a vanishing denominator.
    """
    if not word:
        raise ZeroDenominator("the tail identity needs at least one digit")
    t = QuadComplex.lift(tail)
    head = word[:-1]
    last = QuadComplex.lift(word.last) + t
    conv = convergents(head)
    p_n, q_n = conv[-1].p, conv[-1].q
    p_prev, q_prev = (conv[-2].p, conv[-2].q) if len(conv) > 1 else (GaussianInt(1), GaussianInt(0))
    den = last * q_n + q_prev
    if den.is_zero():
        raise ZeroDenominator("the reconstruction denominator is 0")
    rhs = (last * p_n + p_prev) / den
    lhs = continued_fraction(tuple(head) + (last,))
    return lhs, rhs


def convergent_law_violations(w: Word) -> List[str]:
    """
    Check digit legality, strict growth of |q_n| and |q_n| >= psi^(n-1).

    Returns the list of broken laws (empty when all hold).
    """
    problems = []
    conv = convergents(w)
    for a in w:
        if not is_digit(a):
            problems.append(f"{a} is not a digit")
    norms = [c.q.norm() for c in conv]
    for n in range(1, len(norms)):
        if norms[n] <= norms[n - 1]:
            problems.append(f"|q_{n}| does not exceed |q_{n - 1}|")
        # |q_n|^2 >= psi^(2(n-1)), compared with guard digits
        with mpmath.workdps(30):
            if mpmath.mpf(norms[n]) < PSI ** (2 * (n - 1)) * (1 - mpmath.mpf(10) ** -25):
                problems.append(f"|q_{n}| < psi^{n - 1}")
    return problems
