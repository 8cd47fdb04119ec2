"""
Regularizer Test Suite

Tests the S substitution, the reproduction of both worked examples, the
rewrite trace, mirror equivariance of the rewrite loop, closure-point
preimages and the breakpoint oracles around breakpoints.

Run with: python test_regularizer.py
"""

import random
import sys
from fractions import Fraction

# Add parent directory to path for imports
sys.path.insert(0, '.')

from services.errors import NotInDomain, NotValid, PreconditionViolated
from services.gaussian_core import MIR1, MIR2, GaussianInt, qc, zeta
from services.hcf_engine import convergent_law_violations, lambda_valid
from services.regularizer import (
    absorption_violations,
    breakpoint_value,
    certify_gap,
    closure_preimage,
    find_breakpoint,
    in_s_domain,
    on_half_line,
    paired_reflection,
    regularize,
    run_regularizer,
    s_map,
)
from services.symbolic_shift import DigitSeq, Word, build_sofic_graph, digits_in_box

SEED = 2718
SEGMENT_BLOCK = [[-2, 0], [1, 3], [-2, 0], [1, -4], [-2, 0], [1, 5]]


def W(*pairs) -> Word:
    return Word.from_json([list(p) for p in pairs])


def segment_input(bs):
    """(-2, 1+iB_1, -2, 1+iB_2, ...) with the B values repeated."""
    block = []
    for b in bs:
        block += [[-2, 0], [1, b]]
    return DigitSeq.periodic(block)


def segment_expected(bs, n: int) -> Word:
    """(-2, iB_1, 2, iB_2, -2, iB_3, ...) cut to n digits."""
    out = []
    k = 0
    while len(out) < n:
        out.append([-2 if k % 2 == 0 else 2, 0])
        out.append([0, bs[k % len(bs)]])
        k += 1
    return Word.from_json(out[:n])


def random_bs(rng: random.Random):
    return [rng.choice([-1, 1]) * rng.randint(3, 9) for _ in range(rng.randint(1, 4))]


# ============================================================================
# Test 1: S map
# ============================================================================

def test_s_map():
    """Test 1: S and its paired reflection on both digit families."""
    print("\n🧪 Test 1: S map")

    assert s_map(GaussianInt(1, 3)) == GaussianInt(0, 3), "S(1+3i) = 3i"
    assert s_map(GaussianInt(-1, -2)) == GaussianInt(0, -2), "S(-1-2i) = -2i"
    assert s_map(GaussianInt(4, -1)) == GaussianInt(4, 0), "S(4-i) = 4"
    assert paired_reflection(GaussianInt(1, 3)) == MIR2, "+-1 + im pairs with Mir2"
    assert paired_reflection(GaussianInt(-3, 1)) == MIR1, "m +- i pairs with Mir1"
    for bad in (GaussianInt(2, 2), GaussianInt(1, 1), GaussianInt(3, 0)):
        assert not in_s_domain(bad), f"{bad} is outside the domain of S"
        try:
            s_map(bad)
            assert False, f"S({bad}) should raise"
        except NotInDomain:
            pass
    print("   ✅ S values and domain")


def test_s_commutes_with_mirrors():
    """Test 2: S o Mir = Mir o S on the whole domain of S."""
    print("\n🧪 Test 2: S and mirrors commute")

    domain = [a for a in digits_in_box(8) if in_s_domain(a)]
    for a in domain:
        for s in (MIR1, MIR2):
            assert in_s_domain(s(a)), f"{s.name} leaves the domain at {a}"
            assert s_map(s(a)) == s(s_map(a)), f"S and {s.name} disagree at {a}"
            assert paired_reflection(s(a)) == paired_reflection(a), f"reflection type changes at {a}"
    print(f"   ✅ {len(domain)} digits checked")


# ============================================================================
# Test 3: Worked examples
# ============================================================================

def test_segment_sequences():
    """Test 3: (-2, 1+iB_n) becomes (-2, iB_1, 2, iB_2, ...) for 40 digits."""
    print("\n🧪 Test 3: Segment sequences")

    bs = [3, -4, 5]
    out = regularize(segment_input(bs), 40, validate=False)
    assert out.take(40) == segment_expected(bs, 40), f"got {out.take(12)}"

    checked = run_regularizer(segment_input(bs), 12)
    assert checked.digits == segment_expected(bs, 12), "validated run agrees"
    assert checked.breakpoints == [1, 3, 5, 7, 9, 11], f"breakpoints {checked.breakpoints}"

    rng = random.Random(SEED)
    for _ in range(50):
        bs = random_bs(rng)
        out = regularize(segment_input(bs), 40, validate=False).take(40)
        assert out == segment_expected(bs, 40), f"B = {bs}: got {out.prefix(8)}"
        assert build_sofic_graph().walk(out).regular, f"B = {bs}: output is not regular"
        assert convergent_law_violations(out) == [], f"B = {bs}: output breaks the convergent laws"
    print("   ✅ 50 random B sequences reproduce the pattern")


def test_zeta1_sequence():
    """Test 4: The expansion of zeta1 becomes (-2, 2i, 2, -2i) repeated."""
    print("\n🧪 Test 4: zeta1 sequence")

    source = DigitSeq.periodic([[1, 2], [-2, 1]], prefix=[[-2, 0]])
    result = run_regularizer(source, 40)
    expected = Word.from_json([[-2, 0], [0, 2], [2, 0], [0, -2]] * 10)
    assert result.digits == expected, f"got {result.digits.prefix(8)}"

    gap = certify_gap(source, result.digits, 40)
    assert gap.within_bound, f"value gap {gap.gap_upper} exceeds {gap.bound}"
    assert certify_gap(source, result.digits, 40, tolerance="1e-6").within_tolerance, "40 digits pin zeta1 to 1e-6"
    assert not certify_gap(source, result.digits, 40, tolerance="1e-300").within_tolerance, "but not to 1e-300"
    try:
        certify_gap(source, result.digits, 40, tolerance="0")
        assert False, "a zero tolerance is refused"
    except PreconditionViolated:
        pass
    assert lambda_valid(result.digits, 40).contains(zeta(1)), "the output still evaluates to zeta1"
    print(f"   ✅ {result.state.N} rewrite rounds")


def test_trace_records():
    """Test 5: Breakpoints increase and every rewritten prefix is regular."""
    print("\n🧪 Test 5: Rewrite trace")

    graph = build_sofic_graph()
    result = run_regularizer(segment_input([3, -4, 5]), 20, validate=False)
    js = [rec["j"] for rec in result.trace]
    assert js == sorted(set(js)), f"breakpoints must strictly increase: {js}"
    assert len(result.trace) == result.state.N, "one record per round"
    for rec in result.trace:
        assert graph.walk(Word.from_json(rec["prefix"])).regular, f"round {rec['N']} left an irregular prefix"
        assert rec["mir"] in (MIR1.name, MIR2.name), "each round reflects by Mir1 or Mir2"
    assert result.to_json()["rounds"] == result.state.N, "JSON summary"
    print(f"   ✅ {len(js)} rounds traced")


def test_find_breakpoint():
    """Test 6: The least breakpoint, or None for regular prefixes."""
    print("\n🧪 Test 6: Breakpoints")

    assert find_breakpoint(W((-2, 0), (1, 3), (2, 0)), 0, 2) == 1, "(-2) regular, (-2, 1+3i) not"
    assert find_breakpoint(W((3, 0), (3, 0), (3, 0)), 0, 2) is None, "large digits never break"
    try:
        find_breakpoint(W((-2, 0), (1, 3), (2, 0)), 2, 2)
        assert False, "a start beyond the breakpoint should raise"
    except PreconditionViolated:
        pass
    print("   ✅ least breakpoint found")


def test_invalid_input_refused():
    """Test 7: Invalid input is refused when validation is on."""
    print("\n🧪 Test 7: Invalid input")

    try:
        run_regularizer(DigitSeq.periodic([[-2, 0], [2, 0]]), 10)
        assert False, "(-2, 2, ...) should raise NotValid"
    except NotValid:
        pass
    try:
        run_regularizer(W((3, 0)), -1)
        assert False, "a negative length should raise"
    except PreconditionViolated:
        pass
    print("   ✅ NotValid raised")


# ============================================================================
# Test 8: Mirror equivariance
# ============================================================================

def test_regularize_commutes_with_mirrors():
    """Test 8: regularize o Mir = Mir o regularize on 200 irregular inputs."""
    print("\n🧪 Test 8: Regularizer equivariance")

    rng = random.Random(SEED + 1)
    for _ in range(200):
        bs = random_bs(rng)
        source = segment_input(bs)
        if rng.random() < 0.5:
            source = source.apply_symmetry(MIR1)
        base = regularize(source, 30, validate=False).take(30)
        for s in (MIR1, MIR2):
            moved = regularize(source.apply_symmetry(s), 30, validate=False).take(30)
            assert moved == base.apply_symmetry(s), f"{s.name} does not commute for B = {bs}"

    zeta1_input = DigitSeq.periodic([[1, 2], [-2, 1]], prefix=[[-2, 0]])
    base = regularize(zeta1_input, 30, validate=False).take(30)
    for s in (MIR1, MIR2):
        moved = regularize(zeta1_input.apply_symmetry(s), 30, validate=False).take(30)
        assert moved == base.apply_symmetry(s), f"{s.name} does not commute on the zeta1 input"
    print("   ✅ 200 inputs, positionwise equal")


# ============================================================================
# Test 9: Closure points
# ============================================================================

def test_closure_preimage():
    """Test 9: Points of the closed square get closed-shift digits with the right value."""
    print("\n🧪 Test 9: Closure preimages")

    inner = closure_preimage(zeta(1), 8)
    assert inner.digits == Word.from_json([[-2, 0], [0, 2], [2, 0], [0, -2]] * 2), f"got {inner.digits}"

    top = MIR1(zeta(3))
    assert top.im == Fraction(1, 2), "Mir1 of zeta3 lies on the top edge"
    edge = closure_preimage(top, 60)
    assert build_sofic_graph().walk(edge.digits).regular, "edge preimage is in the closed shift"
    assert lambda_valid(edge.digits, 60).contains(top), "edge preimage evaluates to the edge point"

    for bad in (qc(Fraction(1, 3), Fraction(1, 5)), qc(1, 0)):
        try:
            closure_preimage(bad, 8)
            assert False, f"{bad} should be refused"
        except PreconditionViolated:
            pass
    print("   ✅ inner and edge points")


# ============================================================================
# Test 10: Breakpoint oracles
# ============================================================================

def test_absorption():
    """Test 10: After m or im with |m| >= 2 the state depends only on the next digit."""
    print("\n🧪 Test 10: Absorption")

    bad = absorption_violations(radius=4)
    assert bad == [], f"absorption fails: {bad[:3]}"
    print("   ✅ no violations to radius 4")


def test_breakpoint_values_on_half_lines():
    """Test 11: The value at a breakpoint sits on Re = 1/2 or Im = 1/2."""
    print("\n🧪 Test 11: Breakpoint values")

    rng = random.Random(SEED + 2)
    for _ in range(20):
        source = segment_input(random_bs(rng))
        j = find_breakpoint(source, 0, 10)
        assert j == 1, f"breakpoint {j}"
        assert on_half_line(breakpoint_value(source, j)), "breakpoint value is off the half lines"
    print("   ✅ 20 breakpoint values")


# ============================================================================
# Test Runner
# ============================================================================

def run_all_tests():
    """Run all regularizer tests."""
    print("=" * 70)
    print("🔧 REGULARIZER - TEST SUITE")
    print("=" * 70)

    tests = [
        ("S Map", test_s_map),
        ("S and Mirrors", test_s_commutes_with_mirrors),
        ("Segment sequences", test_segment_sequences),
        ("zeta1 sequence", test_zeta1_sequence),
        ("Rewrite Trace", test_trace_records),
        ("Breakpoints", test_find_breakpoint),
        ("Invalid Input", test_invalid_input_refused),
        ("Equivariance", test_regularize_commutes_with_mirrors),
        ("Closure Preimages", test_closure_preimage),
        ("Absorption", test_absorption),
        ("Breakpoint Values", test_breakpoint_values_on_half_lines),
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
