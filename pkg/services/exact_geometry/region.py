"""
Exact regions: finite intersections of circline sides, minus finitely many points.

A Region is a conjunction of constraints f < 0 (strict) or f <= 0 together
with punctured points. Every Region is built through normalization, which
decides exactly which of four shapes it has:

- two-dim: the region has interior; an exact interior witness is kept
- segment: no interior, at least one arc or line segment
- point / points: no interior, only isolated points
- empty

Normalization drops constraints that cannot bite inside the bounding box
given by axis-parallel constraints, then looks for an interior witness on
a rational sample grid and, failing that, near the boundary arcs. Regions
without interior are analysed one carrier at a time in exact arithmetic.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, List, Optional, Sequence, Tuple

import mpmath

from config.settings import settings
from services.errors import FieldOverflow, OriginInRegion, PreconditionViolated
from services.gaussian_core import QuadComplex, QuadScalar, Symmetry, qc
from .analysis import ArcPiece, ExactArith, FloatArith, PointPiece, carrier_runs, interior_candidates
from .circline import Box, Circline, adjugate, apply_mobius, as_matrix, mobius_at_infinity

# Configure logging
logging.basicConfig(level=getattr(logging, settings.LOG_LEVEL, logging.WARNING))
logger = logging.getLogger("hcf.geometry")

HALF = Fraction(1, 2)

TWO_DIM = "two-dim"
SEGMENT = "segment"
POINT = "point"
POINTS = "points"
EMPTY = "empty"


# ============================================================================
# CONSTRAINTS
# ============================================================================

@dataclass(frozen=True)
class Constraint:
    """f < 0 when strict, f <= 0 otherwise."""

    circline: Circline
    strict: bool = False

    def holds(self, z) -> bool:
        s = self.circline.sign_at(z)
        return s < 0 or (s == 0 and not self.strict)

    def holds_strictly(self, z) -> bool:
        return self.circline.sign_at(z) < 0

    def key(self) -> tuple:
        return (self.circline.side_key(), self.strict)

    def mapped(self, fn) -> "Constraint":
        return Constraint(fn(self.circline), self.strict)

    def to_json(self) -> dict:
        return {"circline": self.circline.to_json(), "strict": self.strict}


def re_at_most(k, strict: bool = False) -> Constraint:
    return Constraint(Circline.vertical(k), strict)


def re_at_least(k, strict: bool = False) -> Constraint:
    return Constraint(Circline.vertical(k).negated(), strict)


def im_at_most(k, strict: bool = False) -> Constraint:
    return Constraint(Circline.horizontal(k), strict)


def im_at_least(k, strict: bool = False) -> Constraint:
    return Constraint(Circline.horizontal(k).negated(), strict)


def inside_circle(center, radius_sq, closed: bool = True) -> Constraint:
    return Constraint(Circline.circle(center, radius_sq), not closed)


def outside_circle(center, radius_sq, closed: bool = True) -> Constraint:
    """|z - c| >= r when closed, |z - c| > r otherwise."""
    return Constraint(Circline.circle(center, radius_sq).negated(), not closed)


# ============================================================================
# REGION
# ============================================================================

class Region:
    """
    A normalized region. Build instances with Region.build or the helpers
    below; the constructor trusts its arguments.
    """

    def __init__(self, constraints: Tuple[Constraint, ...], punctures: Tuple[QuadComplex, ...], kind: str,
                 witness: Optional[QuadComplex] = None, pieces: Tuple = (), uncertified: bool = False):
        self.constraints = tuple(constraints)
        self.punctures = tuple(punctures)
        self.kind = kind
        self.witness = witness
        self.pieces = tuple(pieces)
        self.uncertified = uncertified

    # ------------------------------------------------------------------
    # construction
    # ------------------------------------------------------------------

    @classmethod
    def build(cls, constraints: Iterable[Constraint], punctures: Iterable = (),
              allow_uncertified: bool = False, witness_hints: Iterable = ()) -> "Region":
        """Normalize a conjunction of constraints minus punctures."""
        return _normalize(list(constraints), [QuadComplex.lift(p) for p in punctures],
                          allow_uncertified, [h for h in witness_hints if h is not None])

    @classmethod
    def empty(cls) -> "Region":
        return cls((), (), EMPTY)

    @classmethod
    def point(cls, z) -> "Region":
        z = QuadComplex.lift(z)
        return cls.build([re_at_most(z.re), re_at_least(z.re), im_at_most(z.im), im_at_least(z.im)])

    @classmethod
    def segment(cls, p, q, include_p: bool = True, include_q: bool = False) -> "Region":
        """The straight segment between p and q with the given endpoint inclusions."""
        p, q = QuadComplex.lift(p), QuadComplex.lift(q)
        line = Circline.through(p, q)
        direction = q - p
        # Re(conj(dir) (z - p)) >= 0 and Re(conj(dir) (z - q)) <= 0
        lower = Circline.line(direction, (direction.conj() * p).re).negated()
        upper = Circline.line(direction, (direction.conj() * q).re)
        return cls.build([
            Constraint(line), Constraint(line.negated()),
            Constraint(lower, not include_p), Constraint(upper, not include_q),
        ])

    # ------------------------------------------------------------------
    # predicates
    # ------------------------------------------------------------------

    def is_empty(self) -> bool:
        return self.kind == EMPTY

    def has_interior(self) -> bool:
        return self.kind == TWO_DIM

    def contains(self, z) -> bool:
        """Exact membership."""
        if self.kind == EMPTY:
            return False
        z = QuadComplex.lift(z)
        if any(p == z for p in self.punctures):
            return False
        return all(c.holds(z) for c in self.constraints)

    def canonical_key(self) -> tuple:
        cons = tuple(sorted((c.key() for c in self.constraints), key=repr))
        punct = tuple(sorted((p.sort_key() for p in self.punctures)))
        return (self.kind, cons, punct)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Region):
            return NotImplemented
        if self.kind == EMPTY and other.kind == EMPTY:
            return True
        return self.canonical_key() == other.canonical_key()

    def __hash__(self) -> int:
        return hash(self.canonical_key()) if self.kind != EMPTY else hash(EMPTY)

    def point_value(self) -> QuadComplex:
        """The single point of a point-kind region."""
        if self.kind != POINT:
            raise PreconditionViolated(f"region is {self.kind}, not a point")
        return self.pieces[0].z

    def arcs(self) -> List[ArcPiece]:
        return [p for p in self.pieces if isinstance(p, ArcPiece)]

    def isolated_points(self) -> list:
        return [p.z for p in self.pieces if isinstance(p, PointPiece)]

    # ------------------------------------------------------------------
    # transport
    # ------------------------------------------------------------------

    def punctured(self, z) -> "Region":
        if self.kind == EMPTY:
            return self
        return Region.build(self.constraints, self.punctures + (QuadComplex.lift(z),),
                            self.uncertified, [self.witness])

    def apply_symmetry(self, s: Symmetry) -> "Region":
        if self.kind == EMPTY:
            return self
        region = self
        if s.reflect:
            region = Region.build([c.mapped(Circline.conjugated) for c in region.constraints],
                                  [p.conj() for p in region.punctures], region.uncertified,
                                  [region.witness.conj() if region.witness is not None else None])
        if s.k:
            unit = QuadComplex.lift(s.rotation)
            region = mobius(region, ((unit, qc(0)), (qc(0), qc(1))))
        return region

    # ------------------------------------------------------------------
    # output
    # ------------------------------------------------------------------

    def to_json(self) -> dict:
        data = {
            "kind": self.kind,
            "uncertified": self.uncertified,
            "constraints": [c.to_json() for c in self.constraints],
            "punctures": [p.to_json() for p in self.punctures],
            "pieces": [p.to_json() for p in self.pieces],
        }
        if self.witness is not None:
            data["witness"] = self.witness.to_json()
        return data

    def describe(self) -> str:
        if self.kind == EMPTY:
            return "empty"
        if self.kind == TWO_DIM:
            return f"two-dim region ({len(self.constraints)} constraints), witness {self.witness}"
        parts = []
        for piece in self.pieces:
            if isinstance(piece, PointPiece):
                parts.append(f"point {piece.z}")
            elif piece.full:
                parts.append(f"full {piece.carrier.describe()}")
            else:
                lb = "[" if piece.start_included else "("
                rb = "]" if piece.end_included else ")"
                parts.append(f"{lb}{piece.start}, {piece.end}{rb} on {piece.carrier.describe()}")
        flag = " (uncertified)" if self.uncertified else ""
        return f"{self.kind}: " + "; ".join(parts) + flag

    def __repr__(self) -> str:
        return f"Region({self.describe()})"


# ============================================================================
# STANDARD REGIONS
# ============================================================================

def fundamental_domain() -> Region:
    """F = [-1/2, 1/2) x [-1/2, 1/2)."""
    return Region.build([re_at_least(-HALF), re_at_most(HALF, strict=True),
                         im_at_least(-HALF), im_at_most(HALF, strict=True)])


def closed_fundamental_domain() -> Region:
    return Region.build([re_at_least(-HALF), re_at_most(HALF), im_at_least(-HALF), im_at_most(HALF)])


def open_fundamental_domain() -> Region:
    return Region.build([re_at_least(-HALF, True), re_at_most(HALF, True),
                         im_at_least(-HALF, True), im_at_most(HALF, True)])


# ============================================================================
# OPERATIONS
# ============================================================================

def intersect(a: Region, b: Region, allow_uncertified: bool = False) -> Region:
    """
    Exact intersection. Commutative and idempotent after normalization.

    Raises:
        FieldOverflow: when degenerate endpoints leave Q(sqrt d) and
            allow_uncertified is off; with it on the result is flagged uncertified.
    """
    if a.kind == EMPTY or b.kind == EMPTY:
        return Region.empty()
    return Region.build(a.constraints + b.constraints, a.punctures + b.punctures,
                        allow_uncertified or a.uncertified or b.uncertified, [a.witness, b.witness])


def invert(r: Region) -> Region:
    """
    Image under z -> 1/z.

    Raises:
        OriginInRegion: when 0 belongs to r (puncture it first).
    """
    if r.kind == EMPTY:
        return r
    zero = qc(0)
    if r.contains(zero):
        raise OriginInRegion("cannot invert a region that contains 0; puncture it first")
    punctures = [p.inverse() for p in r.punctures if not p.is_zero()] + [zero]
    hint = r.witness.inverse() if r.witness is not None and not r.witness.is_zero() else None
    return Region.build([c.mapped(Circline.inverted) for c in r.constraints], punctures,
                        r.uncertified, [hint])


def translate(r: Region, a) -> Region:
    """Image under z -> z + a."""
    if r.kind == EMPTY:
        return r
    a = QuadComplex.lift(a)
    hint = r.witness + a if r.witness is not None else None
    return Region.build([c.mapped(lambda f: f.translated(a)) for c in r.constraints],
                        [p + a for p in r.punctures], r.uncertified, [hint])


def mobius(r: Region, m) -> Region:
    """
    Image under the Moebius map with matrix m = [[a, b], [c, d]].

    Raises:
        PreconditionViolated: when the pole -d/c of the map lies in r.
    """
    if r.kind == EMPTY:
        return r
    m = as_matrix(m)
    inv = adjugate(m)
    pole = mobius_at_infinity(inv)
    if pole is not None and r.contains(pole):
        raise PreconditionViolated(f"the pole {pole} of the Moebius map lies in the region")
    punctures = [apply_mobius(m, p) for p in r.punctures]
    punctures = [p for p in punctures if p is not None]
    at_infinity = mobius_at_infinity(m)
    if at_infinity is not None:
        punctures.append(at_infinity)
    hint = apply_mobius(m, r.witness) if r.witness is not None else None
    return Region.build([c.mapped(lambda f: f.mobius_image(m)) for c in r.constraints], punctures,
                        r.uncertified, [hint])


def remove_disk(r: Region, center, radius_sq, closed: bool = True) -> Region:
    """r minus the disk of given center and squared radius (closed or open)."""
    return intersect(r, Region.build([outside_circle(center, radius_sq, closed=not closed)]))


def grid_signature(r: Region, grid: int) -> int:
    """
    Membership bitmask of r at the centers of a grid x grid subdivision of F.

    The centers have odd numerators over 2*grid, so for a power-of-two grid
    none of them lies on a line Re or Im = k/2 or on a unit circle around a
    Gaussian integer; punctures are ignored.
    """
    if r.kind == EMPTY:
        return 0
    L = 2 * grid
    coords = [2 * j + 1 - grid for j in range(grid)]
    rational = all(all(x.is_rational() for x in c.circline.coefficients()) for c in r.constraints)
    mask = 0
    bit = 0
    if rational:
        forms = [(f, c.strict) for f, c in zip(_integer_forms(r.constraints), r.constraints)]
        LL = L * L
        for Y in coords:
            for X in coords:
                r2 = X * X + Y * Y
                inside = True
                for (a, p, q, d), strict in forms:
                    v = a * r2 + p * X * L + q * Y * L + d * LL
                    if v > 0 or (v == 0 and strict):
                        inside = False
                        break
                if inside:
                    mask |= 1 << bit
                bit += 1
        return mask
    for Y in coords:
        for X in coords:
            z = qc(Fraction(X, L), Fraction(Y, L))
            if all(c.holds(z) for c in r.constraints):
                mask |= 1 << bit
            bit += 1
    return mask


# ============================================================================
# NORMALIZATION
# ============================================================================

def _axis_bound(c: Constraint):
    f = c.circline
    if not f.is_line():
        return None
    br, bi = f.beta.re, f.beta.im
    if bi.is_zero() and not br.is_zero():
        return ("x", -f.D / (br * 2), br.sign() > 0)
    if br.is_zero() and not bi.is_zero():
        return ("y", -f.D / (bi * 2), bi.sign() > 0)
    return None


def _bounding_box(constraints: Sequence[Constraint]) -> Optional[Box]:
    lo = {"x": None, "y": None}
    hi = {"x": None, "y": None}
    for c in constraints:
        bound = _axis_bound(c)
        if bound is None:
            continue
        axis, value, is_upper = bound
        if is_upper:
            hi[axis] = value if hi[axis] is None or value < hi[axis] else hi[axis]
        else:
            lo[axis] = value if lo[axis] is None or value > lo[axis] else lo[axis]
    if None in (lo["x"], hi["x"], lo["y"], hi["y"]):
        return None
    return Box(lo["x"], hi["x"], lo["y"], hi["y"])


def _dedupe(constraints: Sequence[Constraint]) -> Optional[List[Constraint]]:
    """Merge positive multiples; None when the constraints are contradictory on their own."""
    merged = {}
    for c in constraints:
        f = c.circline
        if f.is_constant():
            s = f.D.sign()
            if s > 0 or (s == 0 and c.strict):
                return None
            continue
        key = f.side_key()
        if key in merged:
            merged[key] = Constraint(merged[key].circline, merged[key].strict or c.strict)
        else:
            merged[key] = c
    out = list(merged.values())
    by_carrier = {}
    for c in out:
        by_carrier.setdefault(c.circline.carrier_key(), []).append(c)
    for group in by_carrier.values():
        if len(group) == 2 and (group[0].strict or group[1].strict):
            return None
    return out


def _has_equality_pair(constraints: Sequence[Constraint]) -> bool:
    seen = {}
    for c in constraints:
        key = c.circline.carrier_key()
        if key in seen and seen[key] != c.circline.side_key():
            return True
        seen[key] = c.circline.side_key()
    return False


def _to_fraction(x) -> Fraction:
    if isinstance(x, QuadScalar):
        if x.is_rational():
            return x.a
        x = x.to_mpf(96)
    man, exp = mpmath.mpf(x).man_exp
    return Fraction(man) * Fraction(2) ** exp


def _sample_bounds(box: Optional[Box]) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
    if box is None:
        b = Fraction(settings.FALLBACK_BOX)
        return -b, b, -b, b
    out = []
    for v in (box.x0, box.x1, box.y0, box.y1):
        out.append(v.a if v.is_rational() else _to_fraction(v).limit_denominator(10 ** 9))
    return tuple(out)


def _integer_forms(constraints: Sequence[Constraint]):
    forms = []
    for c in constraints:
        A, br, bi, D = c.circline.coefficients()
        coefs = (A.a, 2 * br.a, 2 * bi.a, D.a)
        m = 1
        for q in coefs:
            m = lcm(m, q.denominator)
        forms.append(tuple(int(q * m) for q in coefs))
    return forms


def _grid_witness(constraints: Sequence[Constraint], punctures: Sequence[QuadComplex],
                  bounds, grid: int) -> Optional[QuadComplex]:
    x0, x1, y0, y1 = bounds
    if x0 > x1 or y0 > y1:
        return None
    den = 1
    for v in bounds:
        den = lcm(den, v.denominator)
    L = den * 2 * grid
    xs = [int(x0 * L + (2 * i + 1) * (x1 - x0) * L / (2 * grid)) for i in range(grid)]
    ys = [int(y0 * L + (2 * j + 1) * (y1 - y0) * L / (2 * grid)) for j in range(grid)]
    rational = all(all(x.is_rational() for x in c.circline.coefficients()) for c in constraints)
    if rational:
        forms = _integer_forms(constraints)
        LL = L * L
        for Y in ys:
            for X in xs:
                r2 = X * X + Y * Y
                ok = True
                for k, (a, p, q, d) in enumerate(forms):
                    if a * r2 + p * X * L + q * Y * L + d * LL >= 0:
                        ok = False
                        if k:
                            forms.insert(0, forms.pop(k))
                        break
                if ok:
                    z = qc(Fraction(X, L), Fraction(Y, L))
                    if not any(p == z for p in punctures):
                        return z
        return None
    for Y in ys:
        for X in xs:
            z = qc(Fraction(X, L), Fraction(Y, L))
            if all(c.holds_strictly(z) for c in constraints) and not any(p == z for p in punctures):
                return z
    return None


def _boundary_witness(constraints: Sequence[Constraint], punctures: Sequence[QuadComplex]) -> Optional[QuadComplex]:
    seen = set()
    for c in constraints:
        key = c.circline.carrier_key()
        if key in seen:
            continue
        seen.add(key)
        for x, y in interior_candidates(c.circline, constraints, punctures):
            z = qc(_to_fraction(x), _to_fraction(y))
            if all(k.holds_strictly(z) for k in constraints) and not any(p == z for p in punctures):
                return z
    return None


def _find_witness(constraints, punctures, box, hints) -> Optional[QuadComplex]:
    for h in hints:
        h = QuadComplex.lift(h)
        if all(c.holds_strictly(h) for c in constraints) and not any(p == h for p in punctures):
            return h
    bounds = _sample_bounds(box)
    for grid in settings.PROBE_GRID:
        z = _grid_witness(constraints, punctures, bounds, grid)
        if z is not None:
            return z
    return _boundary_witness(constraints, punctures)


def _degenerate_pieces(constraints, punctures, arith):
    carriers = []
    seen = set()
    for c in constraints:
        if c.strict:
            continue
        key = c.circline.carrier_key()
        if key not in seen:
            seen.add(key)
            carriers.append(c.circline)
    runs = [carrier_runs(k, constraints, punctures, arith) for k in carriers]
    arcs = [arc for r in runs for arc in r.arcs]
    points = []
    for r in runs:
        for p in r.isolated:
            if any(arith.same_point(p, q) for q in points):
                continue
            covered = False
            for other in runs:
                if other is r:
                    continue
                if arith.sign(arith.evaluate(other.carrier, p)) != 0:
                    continue
                if not any(arith.same_point(p, q) for q in other.isolated):
                    covered = True
                    break
            if not covered:
                points.append(p)
    return arcs, points


def _normalize(constraints: List[Constraint], punctures: List[QuadComplex],
               allow_uncertified: bool, hints: List) -> Region:
    cons = _dedupe(constraints)
    if cons is None:
        return Region.empty()
    box = _bounding_box(cons)
    if box is not None:
        if box.is_empty():
            return Region.empty()
        center = QuadComplex((box.x0 + box.x1) * HALF, (box.y0 + box.y1) * HALF)
        kept = []
        for c in cons:
            if c.circline.meets_box(box):
                kept.append(c)
            elif c.circline.sign_at(center) > 0:
                return Region.empty()
        cons = kept
    unique_punctures = []
    for p in punctures:
        if any(p == q for q in unique_punctures):
            continue
        if all(c.holds(p) for c in cons):
            unique_punctures.append(p)
    punctures = unique_punctures
    cons = sorted(cons, key=lambda c: repr(c.key()))

    if not _has_equality_pair(cons):
        witness = _find_witness(cons, punctures, box, hints)
        if witness is not None:
            return Region(tuple(cons), tuple(punctures), TWO_DIM, witness=witness)

    uncertified = False
    try:
        arcs, points = _degenerate_pieces(cons, punctures, ExactArith())
    except FieldOverflow:
        if not allow_uncertified:
            raise
        logger.warning("Degenerate region left the exact field; continuing with uncertified numerics")
        arcs, points = _degenerate_pieces(cons, punctures, FloatArith())
        uncertified = True

    if arcs:
        kind = SEGMENT
    elif len(points) == 1:
        kind = POINT
    elif points:
        kind = POINTS
    else:
        return Region.empty()
    pieces = tuple(arcs) + tuple(PointPiece(p) for p in points)
    return Region(tuple(cons), tuple(punctures), kind, pieces=pieces, uncertified=uncertified)
