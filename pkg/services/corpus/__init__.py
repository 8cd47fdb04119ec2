"""
Fixture corpus: JSON fixtures under corpus/ driven through the CLI.

Modules:
- runner.py: loading, matching and running fixtures
"""

from .runner import CorpusReport, FixtureResult, load_fixtures, match, run_fixture, run_corpus

__all__ = [
    "CorpusReport",
    "FixtureResult",
    "load_fixtures",
    "match",
    "run_fixture",
    "run_corpus",
]
