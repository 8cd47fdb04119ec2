"""
Normality Statistics Test Suite

Tests sliding-window pattern counts, the Hamming distance, the Monte Carlo
cylinder estimates and the normality report built on them.

Run with: python test_stats.py
"""

import json
import math
import os
import random
import sys
import time
from fractions import Fraction

import numpy as np

# Add parent directory to path for imports
sys.path.insert(0, '.')

from services.errors import LengthMismatch, NotRegular, PreconditionViolated
from services.gaussian_core import GaussianInt
from services.symbolic_shift import DigitSeq, Word
from services.normality_stats import (
    estimate_level_one,
    estimate_many,
    estimate_measure,
    float_orbits,
    frequency_table,
    hamming,
    normality_report,
    orbit_histogram,
    pattern_count,
    pattern_counts,
    random_point_digits,
)

SAMPLES = 800
ORBIT = 80
SEED = 4242
LOCKED_VALUES = os.path.join("corpus", "locked", "stats_seed_4242.json")


def W(*pairs) -> Word:
    return Word.from_json([list(p) for p in pairs])


# ============================================================================
# Test 1: Pattern counts
# ============================================================================

def test_pattern_count_matches_table():
    """Test 1: e(w, x, N) agrees with the one-pass window table."""
    print("\n🧪 Test 1: Pattern counts")

    rng = random.Random(SEED)
    letters = [GaussianInt(2), GaussianInt(-2), GaussianInt(0, 2)]
    x = Word(rng.choice(letters) for _ in range(300))
    for length in (1, 2, 3):
        table = pattern_counts(x, length, 250)
        for pattern, count in table.items():
            assert pattern_count(x, pattern, 250) == count, f"count of {pattern} differs"
        assert sum(table.values()) == 250, "every start position 1..N is counted once"

    c = GaussianInt(-2)
    assert pattern_count(Word([c] * 5), Word([c]), 4) == 4, "docstring example"
    assert pattern_count(Word([c] * 3), Word([c] * 5), 3) == 0, "patterns longer than x never match"

    rows = frequency_table(DigitSeq.periodic([[2, 0], [3, 0]]), [[[2, 0]], [[2, 0], [3, 0]]], 100)
    assert rows.count(W((2, 0))) == 50, "half the letters are 2"
    assert rows.frequency(W((2, 0), (3, 0))) == 0.5, "half the windows are (2, 3)"
    print("   ✅ counts agree")


def test_hamming():
    """Test 2: d_H is a fraction of differing positions."""
    print("\n🧪 Test 2: Hamming distance")

    assert hamming(W((2, 0), (3, 0), (4, 0)), W((2, 0), (3, 1), (4, 0))) == Fraction(1, 3), "one of three"
    assert hamming(W((2, 0)), W((2, 0))) == 0, "identical words"
    for v, w in ((W((2, 0)), W((2, 0), (3, 0))), (Word(()), Word(()))):
        try:
            hamming(v, w)
            assert False, "lengths must match and be nonzero"
        except LengthMismatch:
            pass
    print("   ✅ distances and mismatches")


# ============================================================================
# Test 3: Monte Carlo estimates
# ============================================================================

def test_float_orbits_stay_in_square():
    """Test 3: Float orbits land in F and report their digits."""
    print("\n🧪 Test 3: Float orbits")

    rng = np.random.default_rng(SEED)
    seeds = rng.uniform(-0.5, 0.5, 50) + 1j * rng.uniform(-0.5, 0.5, 50)
    batch = float_orbits(seeds, 40, rng)
    assert batch.re.shape == (50, 40), f"shape {batch.re.shape}"
    pts = batch.points[batch.valid]
    assert np.all(np.abs(pts.real) <= 0.5) and np.all(np.abs(pts.imag) <= 0.5), "orbit left F"
    norms = batch.re[batch.valid] ** 2 + batch.im[batch.valid] ** 2
    assert np.all(norms >= 2), "digits of F have norm at least 2"
    print(f"   ✅ {batch.boundary_skips} boundary skips")


def test_level_one_sums_to_one():
    """Test 4: Level-1 estimates form a probability vector."""
    print("\n🧪 Test 4: Level-1 estimates")

    level = estimate_level_one(samples=SAMPLES, orbit_len=ORBIT, rng_seed=SEED)
    total = sum(e.estimate for e in level.values())
    assert abs(total - 1) < 1e-9, f"total {total}"

    a, b = level[GaussianInt(2, 1)], level[GaussianInt(2, -1)]
    spread = 4 * math.sqrt(a.stderr ** 2 + b.stderr ** 2)
    assert abs(a.estimate - b.estimate) <= spread, f"Mir1 pair {a.estimate} vs {b.estimate}"
    print(f"   ✅ {len(level)} digits, mu(2+i) ~ {a.estimate:.4f}")


def test_estimates_are_deterministic():
    """Test 5: The same seed gives the same estimate."""
    print("\n🧪 Test 5: Determinism")

    w = W((-2, 0), (0, 2))
    first = estimate_measure(w, samples=SAMPLES, orbit_len=ORBIT, rng_seed=SEED)
    second = estimate_measure(w, samples=SAMPLES, orbit_len=ORBIT, rng_seed=SEED)
    assert first.to_json() == second.to_json(), "estimates differ for one seed"

    shared = estimate_many([w, W((2, 0))], samples=SAMPLES, orbit_len=ORBIT, rng_seed=SEED)
    assert shared[0].estimate == first.estimate, "a shared batch gives the same number"
    assert random_point_digits(30, SEED).take(30) == random_point_digits(30, SEED).take(30), "seeded orbit"
    print(f"   ✅ mu(-2, 2i) ~ {first.estimate:.5f}")


def test_estimates_refuse_bad_input():
    """Test 6: Irregular words and empty runs are refused."""
    print("\n🧪 Test 6: Refusals")

    try:
        estimate_measure(W((-2, 0), (1, 3)), samples=10, orbit_len=10)
        assert False, "(-2, 1+3i) is irregular"
    except NotRegular:
        pass
    try:
        estimate_measure(W((2, 0)), samples=0, orbit_len=10)
        assert False, "zero samples"
    except PreconditionViolated:
        pass
    print("   ✅ refused")


# ============================================================================
# Test 7: Reports
# ============================================================================

def test_normality_report():
    """Test 7: Report rows are deterministic; irregular patterns have mu_h = 0."""
    print("\n🧪 Test 7: Normality report")

    x = random_point_digits(400, SEED)
    patterns = [[[2, 1]], [[-2, 0], [1, 3]]]
    rows = normality_report(x, patterns, 300, samples=SAMPLES, orbit_len=ORBIT, rng_seed=SEED)
    again = normality_report(x, patterns, 300, samples=SAMPLES, orbit_len=ORBIT, rng_seed=SEED)
    assert [r.to_json() for r in rows] == [r.to_json() for r in again], "reports differ"
    assert rows[1].estimate.estimate == 0.0, "irregular patterns carry no measure"
    assert rows[1].frequency == 0.0, "a typical orbit never shows an irregular word"
    assert normality_report(x, [], 300) == [], "no patterns, no rows"
    print(f"   ✅ z-score of 2+i: {rows[0].z_score:.2f}")


def test_orbit_histogram():
    """Test 8: The histogram counts every step once."""
    print("\n🧪 Test 8: Orbit histogram")

    level = estimate_level_one(samples=SAMPLES, orbit_len=ORBIT, rng_seed=SEED)
    hist = orbit_histogram(0.1234 + 0.2345j, 500, bins=4, level_one=level, rng_seed=SEED)
    assert hist.counts.shape == (4, 4), f"shape {hist.counts.shape}"
    assert int(hist.counts.sum()) == 500, "every orbit point lands in a bin"
    assert sum(hist.digit_counts.values()) == 500 - hist.boundary_skips, "skipped digits are not counted"
    assert hist.chi_square >= 0, "chi-square is nonnegative"
    assert len(hist.to_json()["grid"]) == 4, "grid rows"
    try:
        orbit_histogram(0.1 + 0.1j, 10, bins=0, level_one=level)
        assert False, "bins must be positive"
    except PreconditionViolated:
        pass
    print(f"   ✅ chi-square {hist.chi_square:.1f}")


# ============================================================================
# Test 9: Locked regression values
# ============================================================================

def _seeded_values() -> dict:
    w = estimate_measure(W((-2, 0), (0, 2)), samples=SAMPLES, orbit_len=ORBIT, rng_seed=SEED)
    level = estimate_level_one(samples=SAMPLES, orbit_len=ORBIT, rng_seed=SEED)
    return {
        "seed": SEED,
        "samples": SAMPLES,
        "orbit_len": ORBIT,
        "mu(-2, 2i)": [w.estimate, w.stderr],
        "mu(2+i)": [level[GaussianInt(2, 1)].estimate, level[GaussianInt(2, 1)].stderr],
        "mu(2-i)": [level[GaussianInt(2, -1)].estimate, level[GaussianInt(2, -1)].stderr],
        "boundary_skips": w.boundary_skips,
    }


def test_locked_regression_values():
    """Test 9: Seeded estimates equal the values locked on the first run."""
    print("\n🧪 Test 9: Locked regression values")

    values = _seeded_values()
    if not os.path.exists(LOCKED_VALUES):
        os.makedirs(os.path.dirname(LOCKED_VALUES), exist_ok=True)
        with open(LOCKED_VALUES, "w", encoding="utf-8") as fh:
            json.dump({"provenance": "DERIVED", "oracle": "first seeded run", "values": values}, fh, indent=2)
        print(f"   ✅ locked {LOCKED_VALUES}")
        return

    with open(LOCKED_VALUES, encoding="utf-8") as fh:
        locked = json.load(fh)["values"]
    # floats survive a JSON round trip exactly
    assert json.loads(json.dumps(values)) == locked, f"seeded estimates drifted: {values} vs {locked}"
    print(f"   ✅ mu(2+i) = {values['mu(2+i)'][0]!r} as locked")


# ============================================================================
# Test 10: Runtime budget
# ============================================================================

def test_million_steps_in_budget():
    """Test 10: 10^6 Gauss map steps finish within 30 seconds."""
    print("\n🧪 Test 10: Runtime budget")

    start = time.perf_counter()
    result = estimate_measure(W((2, 1)), samples=5000, orbit_len=200, rng_seed=SEED)
    elapsed = time.perf_counter() - start
    assert result.samples > 0, "the run produced usable windows"
    assert elapsed < 30.0, f"10^6 steps took {elapsed:.1f} s"
    print(f"   ✅ 10^6 steps in {elapsed:.2f} s")


# ============================================================================
# Test Runner
# ============================================================================

def run_all_tests():
    """Run all statistics tests."""
    print("=" * 70)
    print("📈 NORMALITY STATISTICS - TEST SUITE")
    print("=" * 70)

    tests = [
        ("Pattern Counts", test_pattern_count_matches_table),
        ("Hamming Distance", test_hamming),
        ("Float Orbits", test_float_orbits_stay_in_square),
        ("Level-1 Estimates", test_level_one_sums_to_one),
        ("Determinism", test_estimates_are_deterministic),
        ("Refusals", test_estimates_refuse_bad_input),
        ("Normality Report", test_normality_report),
        ("Orbit Histogram", test_orbit_histogram),
        ("Locked Regression Values", test_locked_regression_values),
        ("Runtime Budget", test_million_steps_in_budget),
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
