"""
Gaussian Core and Exact Geometry Test Suite

Tests the exact layer everything else stands on: Gaussian integers and the
digit set, exact scalars of Q(sqrt 3), the nearest-integer map with its
half-open tie rule, the D8 symmetries, and exact regions with SVG output.

Run with: python test_gaussian_geometry.py
"""

import sys
from fractions import Fraction

# Add parent directory to path for imports
sys.path.insert(0, '.')

from services.errors import InvalidDigit, OriginInRegion, UsageError
from services.exact_geometry import (
    EMPTY,
    SEGMENT,
    TWO_DIM,
    Region,
    closed_fundamental_domain,
    emit_panels,
    emit_svg,
    fundamental_domain,
    has_nonempty_interior,
    intersect,
    invert,
    open_fundamental_domain,
    remove_disk,
    translate,
)
from services.gaussian_core import (
    IDENTITY,
    MIR1,
    MIR2,
    ROTA,
    GaussianInt,
    QuadComplex,
    QuadScalar,
    Symmetry,
    alpha,
    in_closed_domain,
    in_fundamental_domain,
    is_digit,
    nearest_gaussian,
    pm,
    qc,
    require_digit,
    zeta,
)

HALF = Fraction(1, 2)


# ============================================================================
# Test 1: Digits
# ============================================================================

def test_digit_set():
    """Test 1: The digit set excludes 0 and the four units only."""
    print("\n🧪 Test 1: Digit set")

    for re, im in [(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)]:
        assert not is_digit(GaussianInt(re, im)), f"{re}+{im}i must not be a digit"
    for re, im in [(1, 1), (-1, 1), (2, 0), (0, -2), (1, 3), (-2, 1)]:
        assert is_digit(GaussianInt(re, im)), f"{re}+{im}i must be a digit"

    try:
        require_digit(GaussianInt(0, 1))
        assert False, "require_digit(i) should raise"
    except InvalidDigit:
        pass

    assert pm(GaussianInt(1, 3)) == 1, "pm(1+3i) = 1"
    assert pm(GaussianInt(-4, 3)) == 3, "pm(-4+3i) = 3"
    assert GaussianInt.from_json([1, -2]) == GaussianInt(1, -2), "wire form [re, im]"
    assert str(GaussianInt(-2, 1)) == "-2+i", f"got {GaussianInt(-2, 1)}"
    assert str(GaussianInt(0, -2)) == "-2i", f"got {GaussianInt(0, -2)}"
    print("   ✅ digits, pm and wire form behave")


def test_gaussian_rejects_booleans():
    """Test 2: Booleans and floats never become Gaussian integers."""
    print("\n🧪 Test 2: Type discipline")

    try:
        GaussianInt(True, 0)
        assert False, "a boolean part should be rejected"
    except UsageError:
        pass
    try:
        GaussianInt.from_json([1.5, 0])
        assert False, "a fractional part should be rejected"
    except UsageError:
        pass
    print("   ✅ bad parts rejected")


# ============================================================================
# Test 3: Exact scalars
# ============================================================================

def test_quadratic_scalars():
    """Test 3: alpha = (2 - sqrt 3)/2 behaves exactly."""
    print("\n🧪 Test 3: Exact scalars in Q(sqrt 3)")

    a = alpha(3)
    assert a > 0, "alpha is positive"
    assert a < Fraction(1, 7), "alpha ~ 0.1340 < 1/7"
    assert a > Fraction(2, 15), "alpha ~ 0.1340 > 2/15"
    # alpha^2 - 2 alpha + 1/4 = 0
    assert a * a - 2 * a + Fraction(1, 4) == 0, "alpha solves x^2 - 2x + 1/4"
    assert (1 / a).b != 0, "1/alpha is irrational"

    x = QuadScalar(Fraction(-1, 2), Fraction(1, 2), 3)
    assert x * x == QuadScalar(1, Fraction(-1, 2), 3), "docstring identity"
    assert QuadScalar.from_json({"a": "1", "b": "-1/2", "d": 3}) == a, "wire form of alpha"

    # d = 0 and d = 1 are rational fields: b*sqrt(d) folds into a
    one = QuadScalar(Fraction(1, 2), Fraction(1, 2), 1)
    assert one.b == 0 and one.a == 1, f"1/2 + 1/2*sqrt 1 is 1, got {one!r}"
    zero_root = QuadScalar(1, 5, 0)
    assert zero_root.b == 0 and zero_root == 1, "sqrt 0 contributes nothing"
    assert QuadScalar(1, 0, 0) + a == a + 1, "rationals of d = 0 mix with Q(sqrt 3)"
    assert QuadScalar(4, 0, 1).sqrt() == 2, "exact roots still work"
    for d in (-3, 4):
        try:
            QuadScalar(1, 0, d)
            assert False, f"d = {d} is not a field parameter"
        except UsageError:
            pass
    print("   ✅ alpha identities hold exactly")


# ============================================================================
# Test 4: Nearest integer and the fundamental domain
# ============================================================================

def test_nearest_gaussian_ties():
    """Test 4: [z] = floor(z + (1+i)/2): ties round up."""
    print("\n🧪 Test 4: Nearest Gaussian integer")

    assert nearest_gaussian(qc(HALF, -HALF)) == GaussianInt(1, 0), "1/2 - i/2 rounds to 1"
    assert nearest_gaussian(qc(-HALF, -HALF)) == GaussianInt(0, 0), "-1/2 - i/2 rounds to 0"
    assert nearest_gaussian(qc(Fraction(-3, 2), Fraction(5, 2))) == GaussianInt(-1, 3), "ties round up"
    assert nearest_gaussian(qc(Fraction(7, 5), Fraction(-8, 5))) == GaussianInt(1, -2), "plain rounding"

    assert in_fundamental_domain(qc(-HALF, -HALF)), "corner -1/2 - i/2 is in F"
    assert not in_fundamental_domain(qc(HALF, 0)), "Re = 1/2 is outside F"
    assert not in_fundamental_domain(qc(0, HALF)), "Im = 1/2 is outside F"
    assert in_closed_domain(qc(HALF, HALF)), "the closure contains 1/2 + i/2"
    print("   ✅ half-open tie rule respected")


def test_zeta_points():
    """Test 5: The four extremely irregular points are where they should be."""
    print("\n🧪 Test 5: zeta points")

    a = alpha(3)
    assert zeta(1) == QuadComplex(QuadScalar(-HALF, 0, 3), a), "zeta1 = -1/2 + i alpha"
    assert zeta(2) == zeta(1).conj(), "zeta2 = conj(zeta1)"
    assert zeta(3) == QuadComplex(-a, QuadScalar(-HALF, 0, 3)), "zeta3 = -alpha - i/2"
    assert zeta(4) == QuadComplex(a, QuadScalar(-HALF, 0, 3)), "zeta4 = alpha - i/2"
    for k in range(1, 5):
        assert in_fundamental_domain(zeta(k)), f"zeta{k} lies in F"
    try:
        zeta(5)
        assert False, "zeta5 does not exist"
    except UsageError:
        pass
    print("   ✅ zeta1..zeta4 exact")


# ============================================================================
# Test 6: Symmetries
# ============================================================================

def test_symmetries():
    """Test 6: Mir1, Mir2 and rotations on digits and points."""
    print("\n🧪 Test 6: D8 action")

    b = GaussianInt(2, 1)
    assert MIR1(b) == GaussianInt(2, -1), "Mir1 conjugates"
    assert MIR2(b) == GaussianInt(-2, 1), "Mir2 is z -> -conj z"
    assert ROTA(b) == GaussianInt(-1, 2), "rotation by i"
    assert MIR1.compose(MIR1) == IDENTITY, "Mir1 is an involution"
    assert MIR2.compose(MIR2) == IDENTITY, "Mir2 is an involution"
    assert MIR1.compose(MIR2) == MIR2.compose(MIR1), "Mir1 and Mir2 commute"
    assert Symmetry.from_name("mir1mir2") == MIR1.compose(MIR2), "named composite"
    assert len(list(Symmetry.all())) == 8, "D8 has eight elements"

    z = qc(Fraction(1, 3), Fraction(-1, 5))
    for s in Symmetry.all():
        assert s.inverse()(s(z)) == z, f"{s.name} inverse fails"
        assert is_digit(s(GaussianInt(1, 3))), f"{s.name} maps digits to digits"
    print("   ✅ D8 acts consistently")


# ============================================================================
# Test 7: Regions
# ============================================================================

def test_fundamental_regions():
    """Test 7: F, its closure and its interior differ only on the edges."""
    print("\n🧪 Test 7: Fundamental regions")

    F = fundamental_domain()
    closed = closed_fundamental_domain()
    opened = open_fundamental_domain()
    corner = qc(-HALF, -HALF)

    assert F.kind == TWO_DIM, "F has interior"
    assert has_nonempty_interior(F) and has_nonempty_interior(opened), "F and its interior contain disks"
    assert F.contains(corner) and closed.contains(corner), "the lower-left corner is in F"
    assert not opened.contains(corner), "the interior misses the corner"
    assert not F.contains(qc(HALF, 0)) and closed.contains(qc(HALF, 0)), "right edge only in the closure"
    assert intersect(F, F).kind == TWO_DIM, "intersection is idempotent"
    print("   ✅ F, closure and interior")


def test_segments_and_disks():
    """Test 8: Half-open segments and removed disks decide membership exactly."""
    print("\n🧪 Test 8: Segments and disks")

    p, q = qc(-HALF, -HALF), qc(-HALF, HALF)
    seg = Region.segment(p, q, include_p=True, include_q=False)
    assert seg.kind == SEGMENT, f"expected a segment, got {seg.kind}"
    assert seg.contains(p), "closed end included"
    assert not seg.contains(q), "open end excluded"
    assert not has_nonempty_interior(seg), "segments have no interior"
    assert seg.contains(QuadComplex(QuadScalar(-HALF, 0, 3), alpha(3))), "zeta1 on the left edge"

    F = fundamental_domain()
    minus = remove_disk(F, GaussianInt(1, 0), 1)
    assert minus.kind == TWO_DIM, "F minus D(1) keeps interior"
    assert not minus.contains(qc(HALF - Fraction(1, 10), 0)), "points close to 1 are removed"
    assert minus.contains(qc(-HALF, 0)), "points far from 1 stay"
    print("   ✅ exact memberships")


def test_inversion_needs_puncture():
    """Test 9: Inverting a region that contains 0 is refused."""
    print("\n🧪 Test 9: Inversion")

    F = fundamental_domain()
    try:
        invert(F)
        assert False, "inverting F should raise OriginInRegion"
    except OriginInRegion:
        pass

    image = invert(F.punctured(0))
    assert image.kind == TWO_DIM, "1/z of the punctured square has interior"
    assert image.contains(qc(-2, 0)), "1/(-1/2) = -2 lies in the image"
    assert not image.contains(qc(2, 0)), "1/2 is outside F, so 2 is outside the image"
    assert not image.contains(qc(Fraction(1, 2), 0)), "|1/z| >= sqrt 2 on the image"
    moved = translate(image, GaussianInt(2, 0))
    assert moved.contains(qc(0, 0)), "translating by 2 brings -2 to 0"
    assert not moved.contains(qc(4, 0)), "translating by 2 keeps 2 out"
    print("   ✅ inversion and translation")


# ============================================================================
# Test 10: SVG output
# ============================================================================

def test_svg_is_deterministic():
    """Test 10: Identical regions give identical SVG bytes."""
    print("\n🧪 Test 10: SVG determinism")

    F = fundamental_domain()
    seg = Region.segment(qc(-HALF, -HALF), qc(-HALF, HALF))
    first = emit_panels([("F", [(F, None)]), ("edge", [(seg, {"stroke": "#cb181d"})])])
    second = emit_panels([("F", [(F, None)]), ("edge", [(seg, {"stroke": "#cb181d"})])])
    assert first == second, "SVG output must be byte-identical"
    assert first.startswith("<?xml"), "SVG carries an XML preamble"
    assert first.rstrip().endswith("</svg>"), "SVG document is closed"

    empty = emit_svg([(Region.empty(), None)])
    assert "empty region" in empty, "empty regions render as a comment"
    assert Region.empty().kind == EMPTY, "empty kind"
    print("   ✅ byte-identical SVG")


# ============================================================================
# Test Runner
# ============================================================================

def run_all_tests():
    """Run all gaussian core and geometry tests."""
    print("=" * 70)
    print("🧮 GAUSSIAN CORE AND EXACT GEOMETRY - TEST SUITE")
    print("=" * 70)

    tests = [
        ("Digit Set", test_digit_set),
        ("Type Discipline", test_gaussian_rejects_booleans),
        ("Exact Scalars", test_quadratic_scalars),
        ("Nearest Gaussian", test_nearest_gaussian_ties),
        ("Zeta Points", test_zeta_points),
        ("Symmetries", test_symmetries),
        ("Fundamental Regions", test_fundamental_regions),
        ("Segments and Disks", test_segments_and_disks),
        ("Inversion", test_inversion_needs_puncture),
        ("SVG Determinism", test_svg_is_deterministic),
    ]

    passed = 0
    failed = 0

    for test_name, test_func in tests:
        try:
            test_func()
            passed += 1
            print(f"   ✅ PASS - {test_name}")
        except AssertionError as e:
            failed += 1
            print(f"   ❌ FAIL - {test_name}")
            print(f"      Error: {str(e)}")
        except Exception as e:
            failed += 1
            print(f"   ❌ ERROR - {test_name}")
            print(f"      {type(e).__name__}: {str(e)}")

    print("\n" + "=" * 70)
    print(f"📊 TEST RESULTS: {passed} passed, {failed} failed")
    print("=" * 70)

    return failed == 0


if __name__ == "__main__":
    success = run_all_tests()
    sys.exit(0 if success else 1)
