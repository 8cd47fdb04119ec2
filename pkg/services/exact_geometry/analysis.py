"""
One-dimensional analysis of a region along a carrier circline.

The carrier is parametrized by a real t: a line as z0 + t*dir, a circle
stereographically as c + r((1 - t^2) + 2ti)/(1 + t^2), with t = infinity
standing for c - r. Every other constraint restricted to the carrier becomes
a polynomial of degree at most two in t. Its roots cut the parameter line
into breakpoints and open intervals; one sample per piece decides membership
and the maximal runs of members become arcs or isolated points.

Two arithmetic backends share the code. ExactArith works in Q(sqrt d) and
raises FieldOverflow when a root leaves the field. FloatArith works with
mpmath at a fixed precision and is only used for uncertified results and
for locating interior witnesses, which are then re-verified exactly.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import mpmath

from services.gaussian_core import QuadComplex, QuadScalar
from .circline import Circline

logger = logging.getLogger("hcf.geometry")


class _Marker:
    def __init__(self, name: str):
        self.name = name

    def __repr__(self) -> str:
        return self.name


INFINITY = _Marker("INFINITY")
IDENTICAL = _Marker("IDENTICAL")


# ============================================================================
# ARITHMETIC BACKENDS
# ============================================================================

class ExactArith:
    """Exact arithmetic in Q(sqrt d)."""

    exact = True

    def scalar(self, q: QuadScalar):
        return q

    def number(self, n):
        return QuadScalar(n)

    def sqrt(self, x: QuadScalar) -> QuadScalar:
        return x.sqrt()

    def sign(self, x) -> int:
        return x.sign()

    def complex(self, re, im) -> QuadComplex:
        return QuadComplex(re, im)

    def re(self, z: QuadComplex):
        return z.re

    def im(self, z: QuadComplex):
        return z.im

    def point(self, z: QuadComplex) -> QuadComplex:
        return z

    def evaluate(self, circline: Circline, z):
        return circline.evaluate(z)

    def same_point(self, p, q) -> bool:
        return p == q


class FloatArith:
    """mpmath arithmetic with a sign tolerance of about half the working precision."""

    exact = False

    def __init__(self, prec: int = 160):
        self.prec = prec
        with mpmath.workprec(prec):
            self.tol = mpmath.mpf(2) ** (-(prec // 2))

    def scalar(self, q: QuadScalar):
        return q.to_mpf(self.prec)

    def number(self, n):
        with mpmath.workprec(self.prec):
            return mpmath.mpf(n.numerator) / n.denominator if isinstance(n, Fraction) else mpmath.mpf(n)

    def sqrt(self, x):
        with mpmath.workprec(self.prec):
            return mpmath.sqrt(max(x, mpmath.mpf(0)))

    def sign(self, x) -> int:
        if abs(x) <= self.tol:
            return 0
        return 1 if x > 0 else -1

    def complex(self, re, im):
        with mpmath.workprec(self.prec):
            return mpmath.mpc(re, im)

    def re(self, z):
        return z.real

    def im(self, z):
        return z.imag

    def point(self, z):
        if isinstance(z, QuadComplex):
            return z.to_mpc(self.prec)
        return z

    def evaluate(self, circline: Circline, z):
        return circline.evaluate_mp(self.point(z), self.prec)

    def same_point(self, p, q) -> bool:
        return abs(self.point(p) - self.point(q)) <= self.tol


# ============================================================================
# PIECES
# ============================================================================

@dataclass(frozen=True)
class ArcPiece:
    """
    A connected one-dimensional piece on a carrier.

    start/end are None for the unbounded ends of a line. A full circle has
    full=True and no endpoints. mid is an interior point of the piece.
    """

    carrier: Circline
    start: Optional[object]
    end: Optional[object]
    start_included: bool
    end_included: bool
    mid: object
    full: bool = False

    def to_json(self) -> dict:
        def enc(p):
            if p is None:
                return None
            return p.to_json() if isinstance(p, QuadComplex) else [str(p.real), str(p.imag)]
        return {
            "carrier": self.carrier.to_json(),
            "start": enc(self.start),
            "end": enc(self.end),
            "start_included": self.start_included,
            "end_included": self.end_included,
            "full": self.full,
        }


@dataclass(frozen=True)
class PointPiece:
    """An isolated point."""

    z: object

    def to_json(self) -> dict:
        z = self.z
        return {"point": z.to_json() if isinstance(z, QuadComplex) else [str(z.real), str(z.imag)]}


@dataclass
class CarrierRuns:
    """Result of the analysis on one carrier."""

    carrier: Circline
    arcs: List[ArcPiece] = field(default_factory=list)
    isolated: List[object] = field(default_factory=list)


# ============================================================================
# PARAMETRIZATION
# ============================================================================

class _Param:
    """Parametrization of a carrier in a given arithmetic."""

    def __init__(self, carrier: Circline, arith):
        self.carrier = carrier
        self.arith = arith
        self.is_line = carrier.is_line()
        A = arith.scalar(carrier.A)
        br, bi = arith.scalar(carrier.beta.re), arith.scalar(carrier.beta.im)
        D = arith.scalar(carrier.D)
        if self.is_line:
            self.dir_re, self.dir_im = -bi, br
            if arith.sign(br) != 0:
                self.base = arith.complex(-D / (br * 2), arith.number(0))
            else:
                self.base = arith.complex(arith.number(0), -D / (bi * 2))
        else:
            self.c_re, self.c_im = -br / A, -bi / A
            r_sq = self.c_re * self.c_re + self.c_im * self.c_im - D / A
            self.r = arith.sqrt(r_sq)

    def at(self, t):
        a = self.arith
        if self.is_line:
            return a.complex(a.re(self.base) + self.dir_re * t, a.im(self.base) + self.dir_im * t)
        if t is INFINITY:
            return a.complex(self.c_re - self.r, self.c_im)
        w = t * t + 1
        return a.complex(self.c_re + self.r * (1 - t * t) / w, self.c_im + self.r * (t * 2) / w)

    def weight(self, t):
        return 1 if self.is_line else t * t + 1

    def param_of(self, z):
        """Parameter of a point already known to lie on the carrier."""
        a = self.arith
        x, y = a.re(z), a.im(z)
        if self.is_line:
            dx, dy = x - a.re(self.base), y - a.im(self.base)
            return (dx * self.dir_re + dy * self.dir_im) / (self.dir_re * self.dir_re + self.dir_im * self.dir_im)
        u, v = x - self.c_re, y - self.c_im
        den = self.r + u
        if a.sign(den) == 0:
            return INFINITY
        return v / den

    def restricted(self, other: Circline):
        """Coefficients (c2, c1, c0) of other restricted to the carrier, times the weight."""
        a = self.arith
        one = a.number(1)
        p0 = a.evaluate(other, self.at(a.number(0)))
        p1 = a.evaluate(other, self.at(one)) * self.weight(one)
        pm = a.evaluate(other, self.at(-one)) * self.weight(-one)
        c2 = (p1 + pm) / 2 - p0
        c1 = (p1 - pm) / 2
        return c2, c1, p0


def _roots(arith, c2, c1, c0):
    s2, s1 = arith.sign(c2), arith.sign(c1)
    if s2 == 0:
        if s1 == 0:
            return IDENTICAL if arith.sign(c0) == 0 else []
        return [-c0 / c1]
    disc = c1 * c1 - c2 * c0 * 4
    sd = arith.sign(disc)
    if sd < 0:
        return []
    if sd == 0:
        return [-c1 / (c2 * 2)]
    r = arith.sqrt(disc)
    first, second = (-c1 - r) / (c2 * 2), (-c1 + r) / (c2 * 2)
    return [first, second] if first < second else [second, first]


def _unique_sorted(arith, values):
    values = sorted(values)
    out = []
    for v in values:
        if out and arith.sign(v - out[-1]) == 0:
            continue
        out.append(v)
    return out


# ============================================================================
# MEMBERSHIP
# ============================================================================

def member(arith, z, constraints: Sequence, punctures: Sequence) -> bool:
    """Membership of z given (circline, strict) constraints and punctured points."""
    for constraint in constraints:
        s = arith.sign(arith.evaluate(constraint.circline, z))
        if s > 0 or (s == 0 and constraint.strict):
            return False
    for p in punctures:
        if arith.same_point(p, z):
            return False
    return True


# ============================================================================
# RUNS ON A CARRIER
# ============================================================================

def carrier_runs(carrier: Circline, constraints: Sequence, punctures: Sequence, arith) -> CarrierRuns:
    """
    Decompose {z on carrier : z in region} into arcs and isolated points.

    Args:
        carrier: the circline whose zero set is analysed
        constraints: the region constraints (the carrier may be among them)
        punctures: removed points
        arith: ExactArith or FloatArith

    Returns:
        CarrierRuns with arcs and isolated points, both ordered along the carrier.

    Raises:
        FieldOverflow: exact mode only, when a breakpoint leaves Q(sqrt d).
    """
    param = _Param(carrier, arith)
    result = CarrierRuns(carrier)
    breaks = []
    carrier_key = carrier.carrier_key()
    for constraint in constraints:
        other = constraint.circline
        if other.carrier_key() == carrier_key:
            continue
        roots = _roots(arith, *param.restricted(other))
        if roots is IDENTICAL:
            continue
        breaks.extend(roots)
    for p in punctures:
        if arith.sign(arith.evaluate(carrier, p)) == 0:
            t = param.param_of(arith.point(p))
            if t is not INFINITY:
                breaks.append(t)
    finite = _unique_sorted(arith, breaks)

    # element sequence: ("pt", t) breakpoints and ("iv", sample_t, left, right) intervals
    elements = []
    if param.is_line:
        if not finite:
            elements.append(("iv", arith.number(0), None, None))
        else:
            elements.append(("iv", finite[0] - 1, None, finite[0]))
            for k, t in enumerate(finite):
                elements.append(("pt", t))
                if k + 1 < len(finite):
                    elements.append(("iv", (t + finite[k + 1]) / 2, t, finite[k + 1]))
            elements.append(("iv", finite[-1] + 1, finite[-1], None))
    else:
        if not finite:
            elements.append(("pt", INFINITY))
            elements.append(("iv", arith.number(0), INFINITY, INFINITY))
        else:
            for k, t in enumerate(finite):
                elements.append(("pt", t))
                if k + 1 < len(finite):
                    elements.append(("iv", (t + finite[k + 1]) / 2, t, finite[k + 1]))
            elements.append(("iv", finite[-1] + 1, finite[-1], INFINITY))
            elements.append(("pt", INFINITY))
            elements.append(("iv", finite[0] - 1, INFINITY, finite[0]))

    inside = []
    for el in elements:
        z = param.at(el[1])
        inside.append(member(arith, z, constraints, punctures))

    n = len(elements)
    if all(inside):
        if param.is_line:
            mid = param.at(elements[0][1])
            result.arcs.append(ArcPiece(carrier, None, None, False, False, mid))
        else:
            mid = param.at(elements[1][1])
            result.arcs.append(ArcPiece(carrier, None, None, True, True, mid, full=True))
        return result
    if not any(inside):
        return result

    # linearize: lines are already linear, circles are rotated to start outside
    order = list(range(n))
    if not param.is_line:
        first_out = inside.index(False)
        order = order[first_out:] + order[:first_out]

    runs = []
    current = []
    for idx in order:
        if inside[idx]:
            current.append(idx)
        elif current:
            runs.append(current)
            current = []
    if current:
        runs.append(current)

    for run in runs:
        kinds = [elements[i][0] for i in run]
        if "iv" not in kinds:
            result.isolated.extend(param.at(elements[i][1]) for i in run)
            continue
        first, last = elements[run[0]], elements[run[-1]]
        if first[0] == "pt":
            start, s_inc = param.at(first[1]), True
        else:
            start = None if first[2] is None else param.at(first[2])
            s_inc = False
        if last[0] == "pt":
            end, e_inc = param.at(last[1]), True
        else:
            end = None if last[3] is None else param.at(last[3])
            e_inc = False
        intervals = [i for i in run if elements[i][0] == "iv"]
        mid = param.at(elements[intervals[len(intervals) // 2]][1])
        result.arcs.append(ArcPiece(carrier, start, end, s_inc, e_inc, mid))

    logger.debug(f"Carrier {carrier.describe()}: {len(result.arcs)} arcs, {len(result.isolated)} points")
    return result


def interior_candidates(carrier: Circline, constraints: Sequence, punctures: Sequence,
                        prec: int = 160) -> List[Tuple[float, float]]:
    """
    Approximate points just inside the negative side of a carrier, next to
    the middle of every open arc where all the other constraints hold strictly.

    The candidates are only hints: callers re-verify them exactly.
    """
    arith = FloatArith(prec)
    others = [c for c in constraints if c.circline.carrier_key() != carrier.carrier_key()]
    strict_others = [_StrictView(c.circline) for c in others]
    try:
        runs = carrier_runs(carrier, strict_others, punctures, arith)
    except (ZeroDivisionError, ValueError):
        return []
    out = []
    with mpmath.workprec(prec):
        A = carrier.A.to_mpf(prec)
        br, bi = carrier.beta.re.to_mpf(prec), carrier.beta.im.to_mpf(prec)
        for arc in runs.arcs:
            m = arc.mid
            gx, gy = 2 * A * m.real + 2 * br, 2 * A * m.imag + 2 * bi
            g = mpmath.sqrt(gx * gx + gy * gy)
            if g == 0:
                continue
            for k in range(3, 48, 3):
                eps = mpmath.mpf(2) ** (-k)
                out.append((m.real - eps * gx / g, m.imag - eps * gy / g))
    return out


@dataclass(frozen=True)
class _StrictView:
    circline: Circline
    strict: bool = True
