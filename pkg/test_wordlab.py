"""
Word Lab Test Suite

Tests the repetition function, W U V U prefix decompositions, shuffles,
the integer-sequence rules, the digit-family generators with their
hypothesis checks, and the convergent growth inequality.

Run with: python test_wordlab.py
"""

import random
import sys
from fractions import Fraction

# Add parent directory to path for imports
sys.path.insert(0, '.')

from services.errors import HypothesisViolated, LengthMismatch, NotValid, PreconditionViolated, UsageError
from services.gaussian_core import GaussianInt
from services.hcf_engine import convergent_law_violations
from services.regularizer import regularize
from services.symbolic_shift import IRREGULAR_VALID, Word, build_sofic_graph, classify
from services.wordlab import (
    SequenceRule,
    alternating_twos,
    check_growth_inequality,
    find_wuv,
    gen_theorem14,
    gen_theorem_new,
    normalize_even,
    repetition,
    repetition_by_index,
    repetition_profile,
    shuffle,
)

SEED = 577
POWER_RULE = {"rule": "power-positions", "base": 3, "bump": 4, "power": 2}


def W(*values) -> Word:
    """Real digits given as integers."""
    return Word(GaussianInt(v) for v in values)


# ============================================================================
# Test 1: Repetitions
# ============================================================================

def test_repetition_small_cases():
    """Test 1: r(n, a) on periodic and short words."""
    print("\n🧪 Test 1: Repetition")

    a = W(*([2, 3] * 6))
    assert repetition(a, 1) == 3, f"r(1) = {repetition(a, 1)}"
    assert repetition(W(2, 3, 4), 1) is None, "no repetition fits in three letters"

    long = W(*([2, 3] * 50))
    for n in range(1, 20):
        expected = n + 1 if n % 2 == 0 else n + 2
        assert repetition(long, n) == expected, f"r({n}) = {repetition(long, n)}, expected {expected}"

    profile = repetition_profile(long, 10)
    assert profile.rep_low is not None and profile.rep_high <= 2, f"ratios {profile.rep_low}..{profile.rep_high}"
    assert "liminf" in profile.to_json()["caveat"], "the estimate carries its caveat"
    print("   ✅ r(n) = n+1 or n+2 on a 2-periodic word")


def test_repetition_implementations_agree():
    """Test 2: The window scan and the first-occurrence index agree."""
    print("\n🧪 Test 2: Repetition cross-check")

    rng = random.Random(SEED)
    for _ in range(100):
        a = W(*(rng.choice([2, 3, -2]) for _ in range(rng.randint(5, 60))))
        for n in range(1, 6):
            assert repetition(a, n) == repetition_by_index(a, n), f"disagreement at n={n} on {a}"
    print("   ✅ 100 random words")


# ============================================================================
# Test 3: Decompositions
# ============================================================================

def test_wuv_decompositions():
    """Test 3: Every W U V U is a prefix; |U| can be made even."""
    print("\n🧪 Test 3: W U V U decompositions")

    a = W(2, 3, 2, 3)
    found = find_wuv(a)
    assert [d.lengths() for d in found] == [(0, 1, 1), (0, 2, 0), (1, 1, 1)], f"got {[d.lengths() for d in found]}"
    for d in found:
        assert d.word() == a[:len(d.word())], f"{d.to_json()} is not a prefix"
    assert found[1].ratio == 0, "W U U has ratio 0"
    assert found[0].ratio == Fraction(1, 1), "U V U with |V| = |U| has ratio 1"
    assert find_wuv(a, min_u=2)[0].lengths() == (0, 2, 0), "min_u filters short U"

    b = W(2, 3, 4, 5, 2, 3, 4)
    odd = [d for d in find_wuv(b) if len(d.U) == 3][0]
    even = normalize_even(odd)
    assert len(even.U) == 2, f"normalized |U| = {len(even.U)}"
    assert even.word() == b[:len(even.word())], "the normalized decomposition is still a prefix"
    print("   ✅ prefixes and normalization")


def test_shuffle():
    """Test 4: s(A, B) interleaves; lengths must match."""
    print("\n🧪 Test 4: Shuffle")

    assert shuffle(alternating_twos(2), W(3, 4)) == W(-2, 3, 2, 4), "interleaving"
    assert alternating_twos(4) == W(-2, 2, -2, 2), "(-1)^k 2"
    try:
        shuffle(W(2), W(3, 4))
        assert False, "lengths 1 and 2 cannot be shuffled"
    except LengthMismatch:
        pass
    print("   ✅ shuffles")


# ============================================================================
# Test 5: Sequence rules
# ============================================================================

def test_sequence_rules():
    """Test 5: Rules produce the documented values."""
    print("\n🧪 Test 5: Sequence rules")

    assert SequenceRule.from_json(POWER_RULE).take(5) == [4, 4, 3, 4, 3], "power positions of 2"
    squares = SequenceRule.from_json({"rule": "square-positions", "base": 3, "bump": 5})
    assert squares.take(9) == [5, 3, 3, 5, 3, 3, 3, 3, 5], f"got {squares.take(9)}"
    fib = SequenceRule.from_json({"rule": "fibonacci-word", "base": 3, "bump": 4}).take(30)
    assert set(fib) == {3, 4}, "the Fibonacci word uses both letters"
    try:
        SequenceRule.from_json({"rule": "no-such-rule"})
        assert False, "unknown rules are usage errors"
    except UsageError:
        pass
    print("   ✅ rule values")


# ============================================================================
# Test 6: Generators
# ============================================================================

def test_theorem14_family():
    """Test 6: (-2, 1+iB_n) digits and their hypothesis checks."""
    print("\n🧪 Test 6: thm14 family")

    seq = gen_theorem14(POWER_RULE, 8)
    expected = Word.from_json([[-2, 0], [1, 4], [-2, 0], [1, 4], [-2, 0], [1, 3], [-2, 0], [1, 4]])
    assert seq.take(8) == expected, f"got {seq.take(8)}"
    assert classify(seq.take(2)).tag == IRREGULAR_VALID, "(-2, 1+iB_1) is irregular"

    bad_specs = [
        {"rule": "periodic", "values": [3, 4]},
        {"rule": "power-positions", "base": 2, "bump": 4, "power": 2},
        {"rule": "explicit", "values": [3, 4, 5, 3]},
        {"rule": "power-positions", "base": 3, "bump": 3, "power": 2},
    ]
    for spec in bad_specs:
        try:
            gen_theorem14(spec, 8)
            assert False, f"{spec} should break a hypothesis"
        except HypothesisViolated:
            pass

    asserted = gen_theorem14({"rule": "explicit", "values": [3, 4, 5, 3], "assert_aperiodic": True}, 8)
    assert asserted.take(8)[7] == GaussianInt(1, 3), "explicit values are used in order"
    print("   ✅ digits and hypotheses")


def test_new_families():
    """Test 7: new-i and new-ii digits, letters and validity."""
    print("\n🧪 Test 7: new families")

    rule = {"rule": "power-positions", "base": 2, "bump": 3, "power": 2}
    seq = gen_theorem_new(None, rule, 10, family="new-i")
    assert seq.take(2) == Word.from_json([[-2, 0], [1, 3]]), f"got {seq.take(2)}"

    seq = gen_theorem_new("alternating", POWER_RULE, 8, family="new-ii", b_form="imaginary")
    assert seq.take(4) == Word.from_json([[-2, 0], [0, 4], [2, 0], [0, 4]]), f"got {seq.take(4)}"
    assert build_sofic_graph().walk(seq.take(8)).regular, "(-2, iB_1, 2, iB_2, ...) is regular"

    # after -2 every point has Re(1/z) <= 1/2, so a real B_1 >= 2 leaves F
    try:
        gen_theorem_new("alternating", POWER_RULE, 8, family="new-ii", b_form="real")
        assert False, "(-2, 4, ...) should be invalid"
    except NotValid:
        pass
    try:
        gen_theorem_new({"rule": "cycle", "digits": [[3, 0]]}, POWER_RULE, 8, family="new-ii")
        assert False, "A letters must be +-2 or +-2i"
    except HypothesisViolated:
        pass
    print("   ✅ families generated")


# ============================================================================
# Test 8: Growth inequality
# ============================================================================

def test_generated_outputs_regularize_cleanly():
    """Test 8: Regularized thm14 outputs obey the convergent laws."""
    print("\n🧪 Test 8: Regularized generator output")

    for spec in (POWER_RULE, {"rule": "square-positions", "base": 3, "bump": -5},
                 {"rule": "fibonacci-word", "base": -3, "bump": 4}):
        out = regularize(gen_theorem14(spec, 64), 60, validate=False).take(60)
        assert build_sofic_graph().walk(out).regular, f"{spec['rule']}: output is not regular"
        assert convergent_law_violations(out) == [], f"{spec['rule']}: convergent laws fail"
    print("   ✅ three rules")


def test_growth_monotone_in_eps():
    """Test 9: A triple that holds at eps also holds at every smaller eps."""
    print("\n🧪 Test 9: Growth inequality")

    out = regularize(gen_theorem14(POWER_RULE, 84), 80, validate=False)
    triples = [(w, u, v) for w in range(0, 6) for u in range(1, 6) for v in range(0, 4)]
    levels = [0, Fraction(1, 100), Fraction(1, 10), Fraction(1, 2), 1]
    results = [check_growth_inequality(out, triples, float(eps)) for eps in levels]

    assert all(c.holds for c in results[0]), "at eps = 0 every instance holds"
    for smaller, larger in zip(results, results[1:]):
        for s, l in zip(smaller, larger):
            assert s.lhs == l.lhs, "the left side does not depend on eps"
            assert not l.holds or s.holds, f"(w, u, v) = {(s.w, s.u, s.v)} is not monotone in eps"

    try:
        check_growth_inequality(out, [(30, 10, 10)], 0.1)
        assert False, "q_100 needs 100 digits"
    except PreconditionViolated:
        pass
    print(f"   ✅ {len(triples)} triples at {len(levels)} levels")


# ============================================================================
# Test Runner
# ============================================================================

def run_all_tests():
    """Run all word lab tests."""
    print("=" * 70)
    print("🔤 WORD LAB - TEST SUITE")
    print("=" * 70)

    tests = [
        ("Repetition", test_repetition_small_cases),
        ("Repetition Cross-check", test_repetition_implementations_agree),
        ("W U V U Decompositions", test_wuv_decompositions),
        ("Shuffle", test_shuffle),
        ("Sequence Rules", test_sequence_rules),
        ("thm14 Family", test_theorem14_family),
        ("new Families", test_new_families),
        ("Regularized Generator Output", test_generated_outputs_regularize_cleanly),
        ("Growth Inequality", test_growth_monotone_in_eps),
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
