"""
Fixture Corpus Test Suite

Loads the JSON fixtures under corpus/, checks the partial-output matcher,
runs every fixture through the CLI and resolves the source files cited
in DESIGN.md.

Run with: python test_corpus.py
"""

import json
import os
import re
import sys
import tempfile

# Add parent directory to path for imports
sys.path.insert(0, '.')

from services.corpus import load_fixtures, match, run_corpus
from services.errors import UsageError


# ============================================================================
# Test 1: Loading
# ============================================================================

def test_fixtures_load():
    """Test 1: Every fixture parses and is traced to its source."""
    print("\n🧪 Test 1: Fixture loading")

    fixtures = load_fixtures()
    assert len(fixtures) >= 13, f"only {len(fixtures)} fixtures"
    ids = [fx.id for fx in fixtures]
    assert len(ids) == len(set(ids)), "fixture ids are unique"
    for fx in fixtures:
        assert fx.provenance != "PAPER" or fx.anchor, f"{fx.id} lacks an anchor"
        assert fx.provenance != "DERIVED" or fx.oracle, f"{fx.id} lacks an oracle"
    print(f"   ✅ {len(fixtures)} fixtures")


def test_bad_fixture_rejected():
    """Test 2: A DERIVED fixture without an oracle is a usage error."""
    print("\n🧪 Test 2: Fixture schema")

    with tempfile.TemporaryDirectory() as tmp:
        with open(os.path.join(tmp, "bad.json"), "w", encoding="utf-8") as fh:
            json.dump({"id": "bad", "command": "graph", "input": {}, "provenance": "DERIVED"}, fh)
        try:
            load_fixtures(tmp)
            assert False, "a DERIVED fixture needs an oracle"
        except UsageError:
            pass
    print("   ✅ rejected")


# ============================================================================
# Test 3: Matching
# ============================================================================

def test_partial_matching():
    """Test 3: Only listed keys are compared; #len and #contains select matchers."""
    print("\n🧪 Test 3: Partial matching")

    actual = {"tag": "regular-full", "states": ["SQ", "SQ"], "extra": 1}
    assert match({"tag": "regular-full"}, actual) is None, "extra keys are ignored"
    assert match({"states#len": 2}, actual) is None, "length matcher"
    assert match({"states#len": 3}, actual) is not None, "wrong length"
    assert "missing" in match({"region": {}}, actual), "missing key"
    assert match({"tag": "invalid"}, actual) is not None, "wrong value"
    assert match({"a": {"b": 1}}, {"a": {"b": 1, "c": 2}}) is None, "nested dicts match recursively"

    ball = {"mid": ["0.5", "0"], "rad": "0.001"}
    assert match({"ball#contains": {"re": "1/2", "im": "0"}}, {"ball": ball}) is None, "ball contains 1/2"
    assert match({"ball#contains": {"re": "1", "im": "0"}}, {"ball": ball}) is not None, "ball misses 1"
    print("   ✅ matchers")


# ============================================================================
# Test 4: Running
# ============================================================================

def test_corpus_passes():
    """Test 4: Every fixture passes through the CLI."""
    print("\n🧪 Test 4: Corpus run")

    report = run_corpus()
    failures = [f"{r.id}: {r.message}" for r in report.failures]
    assert report.passed, "; ".join(failures)
    assert report.to_json()["failed"] == 0, "report counts agree"
    print(f"   ✅ {len(report.results)} fixtures passed")


# ============================================================================
# Test 5: Ledger citations
# ============================================================================

def test_ledger_citations_resolve():
    """Test 5: Every source file cited in DESIGN.md exists."""
    print("\n🧪 Test 5: Ledger citations")

    root = os.path.join("examples", "other_examples")
    if not os.path.isdir(root):
        print("   ✅ no reference sources checked out, nothing to resolve")
        return
    with open("DESIGN.md", encoding="utf-8") as fh:
        ledger = fh.read()
    present = {name for _, _, files in os.walk(root) for name in files}
    cited = set(re.findall(r"r\d{3}__[A-Za-z0-9_.-]+?\.py", ledger))
    missing = sorted(cited - present)
    assert cited, "the ledger cites source files"
    assert not missing, f"cited but absent: {missing}"
    for path in re.findall(r"OE/([A-Za-z0-9_./-]+?\.py)", ledger):
        assert os.path.exists(os.path.join(root, path)), f"no such path {path}"
    print(f"   ✅ {len(cited)} cited files resolve")


# ============================================================================
# Test Runner
# ============================================================================

def run_all_tests():
    """Run all corpus tests."""
    print("=" * 70)
    print("📚 FIXTURE CORPUS - TEST SUITE")
    print("=" * 70)

    tests = [
        ("Fixture Loading", test_fixtures_load),
        ("Fixture Schema", test_bad_fixture_rejected),
        ("Partial Matching", test_partial_matching),
        ("Corpus Run", test_corpus_passes),
        ("Ledger Citations", test_ledger_citations_resolve),
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
