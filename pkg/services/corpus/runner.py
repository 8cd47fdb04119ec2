"""
Fixture corpus runner.

Every fixture is a JSON file in corpus/ naming a CLI subcommand, its
payload and the expected output. run_corpus drives each fixture through
the CLI exactly as a user would (`hcf <command> --payload <input>`) and
compares the output with the expectation.

Expected outputs are partial: only the listed keys are compared, nested
dicts recursively. Two key suffixes change the comparison:

- "key#len": the length of output[key]
- "key#contains": output[key] is a ball that must contain the exact value
"""

import io
import json
import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional

from pydantic import ValidationError

from cli.main import run
from schemas import Fixture
from services.errors import UsageError
from services.gaussian_core import QuadComplex
from services.hcf_engine import ComplexBall
from .constants import CONTAINS_SUFFIX, CORPUS_DIR, CORPUS_WORKERS, LEN_SUFFIX

logger = logging.getLogger("hcf.corpus")


@dataclass
class FixtureResult:
    id: str
    passed: bool
    message: str = ""

    def to_json(self) -> dict:
        return {"id": self.id, "passed": self.passed, "message": self.message}


@dataclass
class CorpusReport:
    results: List[FixtureResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> List[FixtureResult]:
        return [r for r in self.results if not r.passed]

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "total": len(self.results),
            "failed": len(self.failures),
            "results": [r.to_json() for r in self.results],
        }


# ============================================================================
# LOADING
# ============================================================================

def load_fixtures(directory: str = CORPUS_DIR) -> List[Fixture]:
    """
    Every *.json fixture in directory, sorted by file name.

    Raises:
        UsageError: a file is not valid JSON or breaks the fixture schema.
    """
    fixtures = []
    for name in sorted(os.listdir(directory)):
        if not name.endswith(".json"):
            continue
        path = os.path.join(directory, name)
        with open(path, encoding="utf-8") as fh:
            try:
                fixtures.append(Fixture.model_validate(json.load(fh)))
            except (json.JSONDecodeError, ValidationError) as e:
                raise UsageError(f"bad fixture file {name}: {e}")
    return fixtures


# ============================================================================
# MATCHING
# ============================================================================

def match(expected: dict, actual, path: str = "") -> Optional[str]:
    """None when actual satisfies expected, else a description of the first mismatch."""
    if not isinstance(actual, dict):
        return f"{path or 'output'}: expected an object, got {type(actual).__name__}"
    for key, want in expected.items():
        if key.endswith(LEN_SUFFIX):
            base = key[:-len(LEN_SUFFIX)]
            got = actual.get(base)
            if got is None or len(got) != want:
                return f"{path}{base}: expected length {want}, got {None if got is None else len(got)}"
            continue
        if key.endswith(CONTAINS_SUFFIX):
            base = key[:-len(CONTAINS_SUFFIX)]
            if base not in actual:
                return f"{path}{base}: missing"
            ball = ComplexBall.from_json(actual[base])
            if not ball.contains(QuadComplex.from_json(want)):
                return f"{path}{base}: ball does not contain {want}"
            continue
        if key not in actual:
            return f"{path}{key}: missing"
        if isinstance(want, dict):
            problem = match(want, actual[key], f"{path}{key}.")
            if problem:
                return problem
        elif actual[key] != want:
            return f"{path}{key}: expected {want!r}, got {actual[key]!r}"
    return None


# ============================================================================
# RUNNING
# ============================================================================

def run_fixture(fx: Fixture) -> FixtureResult:
    """Run one fixture through the CLI."""
    out = io.StringIO()
    code = run([fx.command, "--payload", json.dumps(fx.input)], stdout=out)
    if code != fx.exit_code:
        return FixtureResult(fx.id, False, f"exit code {code}, expected {fx.exit_code}")
    if not fx.expected:
        return FixtureResult(fx.id, True)
    try:
        actual = json.loads(out.getvalue())
    except json.JSONDecodeError:
        return FixtureResult(fx.id, False, "output is not JSON")
    problem = match(fx.expected, actual)
    return FixtureResult(fx.id, problem is None, problem or "")


def run_corpus(directory: str = CORPUS_DIR, workers: int = CORPUS_WORKERS) -> CorpusReport:
    """
    Run every fixture and collect a pass/fail report.

    Results come back in file order whatever the scheduling.
    """
    fixtures = load_fixtures(directory)
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        results = list(pool.map(run_fixture, fixtures))
    report = CorpusReport(results)
    for r in report.failures:
        logger.warning(f"Fixture {r.id} failed: {r.message}")
    logger.info(f"Corpus: {len(results) - len(report.failures)}/{len(results)} fixtures passed")
    return report
