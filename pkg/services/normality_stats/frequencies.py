"""
Sliding-window pattern counts e(w, x, N) and the Hamming distance of words.
"""

from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from services.errors import LengthMismatch
from services.gaussian_core import GaussianInt
from services.symbolic_shift import DigitSeq, Word, as_digit_seq


def _prefix(x, n: int) -> Tuple[GaussianInt, ...]:
    if isinstance(x, (DigitSeq, Word)):
        return tuple(as_digit_seq(x).take(n))
    return tuple(x)[:n]


# ============================================================================
# COUNTS
# ============================================================================

def pattern_count(x, w: Sequence, N: int) -> int:
    """
    e(w, x, N) = #{j in 1..N : (x_j, ..., x_{j+|w|-1}) = w}.

    Windows running past the end of a finite x are not counted, so a pattern
    longer than the available prefix counts 0.

    Example:
        >>> c = GaussianInt(-2)
        >>> pattern_count(Word([c] * 5), Word([c]), 4)
        4
    """
    pattern = tuple(w)
    k = len(pattern)
    digits = _prefix(x, N + k - 1)
    last = min(N, len(digits) - k + 1)
    return sum(1 for j in range(last) if digits[j:j + k] == pattern)


def pattern_counts(x, length: int, N: int) -> Counter:
    """Counts of every window of the given length starting at j <= N, in one pass."""
    digits = _prefix(x, N + length - 1)
    counts: Counter = Counter()
    window: deque = deque(maxlen=length)
    for j, a in enumerate(digits):
        window.append(a)
        start = j - length + 2
        if len(window) == length and start <= N:
            counts[tuple(window)] += 1
    return counts


def hamming(v: Sequence, w: Sequence) -> Fraction:
    """
    d_H(v, w) = #{j : v_j != w_j} / n.

    Raises:
        LengthMismatch: |v| != |w| or the words are empty.
    """
    v, w = tuple(v), tuple(w)
    if len(v) != len(w) or not v:
        raise LengthMismatch(f"Hamming distance needs equal nonzero lengths, got {len(v)} and {len(w)}")
    return Fraction(sum(1 for a, b in zip(v, w) if a != b), len(v))


# ============================================================================
# TABLES
# ============================================================================

@dataclass
class FrequencyTable:
    """Pattern -> (count, N, frequency) for one sequence and orbit length N."""

    N: int
    rows: Dict[Word, int] = field(default_factory=dict)

    def count(self, w: Word) -> int:
        return self.rows[w]

    def frequency(self, w: Word) -> float:
        return self.rows[w] / self.N if self.N else 0.0

    def to_json(self) -> List[dict]:
        return [
            {"pattern": w.to_json(), "count": c, "N": self.N, "frequency": self.frequency(w)}
            for w, c in self.rows.items()
        ]


def frequency_table(x, patterns: Iterable, N: int) -> FrequencyTable:
    table = FrequencyTable(N)
    for w in patterns:
        w = Word.from_json(w)
        table.rows[w] = pattern_count(x, w, N)
    return table
