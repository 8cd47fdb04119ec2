"""
Repetitions, W U V U prefix decompositions and shuffles of finite words.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from config.settings import settings
from services.errors import LengthMismatch
from services.gaussian_core import GaussianInt
from services.symbolic_shift import Word
from .constants import REPETITION_EXTRA

logging.basicConfig(level=getattr(logging, settings.LOG_LEVEL, logging.WARNING))
logger = logging.getLogger("hcf.wordlab")


# ============================================================================
# REPETITION
# ============================================================================

def repetition(a: Sequence, n: int, extra: int = REPETITION_EXTRA) -> Optional[int]:
    """
    r(n, a): the least m such that the window of length n + extra at m
    already occurred at some i <= m - n.

    Args:
        a: a finite word (or any sequence of digits)
        n: the index n >= 1
        extra: window length minus n

    Returns:
        m, or None when no such repetition fits in the prefix

    Example:
        >>> repetition(Word.from_json([[2, 0], [3, 0]] * 6), 1)
        3
    """
    digits = tuple(a)
    size = n + extra
    for m in range(n + 1, len(digits) - size + 2):
        window = digits[m - 1:m - 1 + size]
        for i in range(1, m - n + 1):
            if digits[i - 1:i - 1 + size] == window:
                return m
    return None


def repetition_by_index(a: Sequence, n: int, extra: int = REPETITION_EXTRA) -> Optional[int]:
    """r(n, a) again, from the first occurrence of every window."""
    digits = tuple(a)
    size = n + extra
    first: Dict[Tuple, int] = {}
    for m in range(1, len(digits) - size + 2):
        window = digits[m - 1:m - 1 + size]
        i = first.setdefault(window, m)
        if i <= m - n:
            return m
    return None


@dataclass
class RepetitionProfile:
    """r(n, a) over a prefix and the ratios it suggests for rep(a)."""

    r_values: List[Tuple[int, Optional[int]]]
    rep_low: Optional[Fraction] = None
    rep_high: Optional[Fraction] = None
    caveat: str = "rep(a) is a liminf and cannot be certified from a prefix"

    def to_json(self) -> dict:
        return {
            "r_values": [[n, r] for n, r in self.r_values],
            "rep_estimate": None if self.rep_low is None else [str(self.rep_low), str(self.rep_high)],
            "caveat": self.caveat,
        }


def repetition_profile(a: Sequence, max_n: int, extra: int = REPETITION_EXTRA) -> RepetitionProfile:
    """
    r(n, a) for n = 1 .. max_n and the bracket [min, max] of r(n, a)/n over
    the upper half of the computed n.
    """
    values = [(n, repetition(a, n, extra)) for n in range(1, max_n + 1)]
    found = [(n, r) for n, r in values if r is not None]
    profile = RepetitionProfile(values)
    if found:
        tail = found[len(found) // 2:]
        ratios = [Fraction(r, n) for n, r in tail]
        profile.rep_low, profile.rep_high = min(ratios), max(ratios)
    return profile


# ============================================================================
# W U V U DECOMPOSITIONS
# ============================================================================

@dataclass(frozen=True)
class WUVDecomposition:
    """A prefix W U V U of a word, with U nonempty."""

    W: Word
    U: Word
    V: Word

    @property
    def ratio(self) -> Fraction:
        return Fraction(len(self.W) + len(self.V), len(self.U))

    def word(self) -> Word:
        return self.W + self.U + self.V + self.U

    def lengths(self) -> Tuple[int, int, int]:
        return len(self.W), len(self.U), len(self.V)

    def to_json(self) -> dict:
        return {
            "W": self.W.to_json(),
            "U": self.U.to_json(),
            "V": self.V.to_json(),
            "ratio": str(self.ratio),
        }


def find_wuv(a: Sequence, min_u: int = 1) -> List[WUVDecomposition]:
    """
    Every decomposition of a prefix of a as W U V U with |U| >= min_u,
    sorted by (|W|, |U|, |V|).
    """
    digits = tuple(a)
    total = len(digits)
    out = []
    for w in range(total):
        for u in range(min_u, (total - w) // 2 + 1):
            block = digits[w:w + u]
            for v in range(0, total - w - 2 * u + 1):
                start = w + u + v
                if digits[start:start + u] == block:
                    out.append(WUVDecomposition(Word(digits[:w]), Word(block), Word(digits[w + u:start])))
    out.sort(key=lambda d: d.lengths())
    return out


def normalize_even(d: WUVDecomposition) -> WUVDecomposition:
    """
    Make |U| even: W U V U = W U' x V U' x, so W U' (x V) U' is again a prefix.

    Decompositions with |U| = 1 or |U| even are returned unchanged.
    """
    if len(d.U) % 2 == 0 or len(d.U) == 1:
        return d
    return WUVDecomposition(d.W, d.U[:-1], Word((d.U.last,)) + d.V)


# ============================================================================
# SHUFFLES
# ============================================================================

def shuffle(A: Sequence, B: Sequence) -> Word:
    """
    s(A, B) = (a_1, b_1, a_2, b_2, ..., a_n, b_n).

    Raises:
        LengthMismatch: |A| != |B|.
    """
    A, B = tuple(A), tuple(B)
    if len(A) != len(B):
        raise LengthMismatch(f"cannot shuffle words of lengths {len(A)} and {len(B)}")
    out = []
    for x, y in zip(A, B):
        out.extend((x, y))
    return Word(out)


def alternating_twos(n: int) -> Word:
    """(-2, 2, -2, 2, ...) of length n: the k-th letter is (-1)^k * 2."""
    return Word(GaussianInt(2 if k % 2 == 0 else -2) for k in range(1, n + 1))
