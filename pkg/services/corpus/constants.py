"""
Constants for the fixture corpus.
"""

from config.settings import settings

CORPUS_DIR = settings.CORPUS_DIR

# Suffixes of expected-output keys that select a matcher other than equality
LEN_SUFFIX = "#len"
CONTAINS_SUFFIX = "#contains"

# Fixtures are independent; they run on this many worker threads
CORPUS_WORKERS = 4
