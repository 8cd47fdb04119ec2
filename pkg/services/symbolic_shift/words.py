"""
Finite words and lazily produced digit sequences over the HCF alphabet.
"""

from typing import Callable, Dict, Iterable, Iterator, Optional, Sequence, Tuple, Union

from services.errors import InvalidWord, PreconditionViolated, UsageError
from services.gaussian_core import GaussianInt, Symmetry, apply_symmetry, require_digit


class Word:
    """
    A finite word a_1 ... a_n of HCF digits; the empty word is allowed.

    Words are immutable; slicing and concatenation return new words.

    Example:
        >>> w = Word.from_json([[-2, 0], [1, 3]])
        >>> str(w)
        '(-2, 1+3i)'
    """

    __slots__ = ("digits",)

    def __init__(self, digits: Iterable[GaussianInt] = ()):
        self.digits: Tuple[GaussianInt, ...] = tuple(require_digit(GaussianInt.from_json(a)) for a in digits)

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self) -> Iterator[GaussianInt]:
        return iter(self.digits)

    def __getitem__(self, item: Union[int, slice]):
        if isinstance(item, slice):
            return Word(self.digits[item])
        return self.digits[item]

    def __add__(self, other) -> "Word":
        if isinstance(other, Word):
            return Word(self.digits + other.digits)
        if isinstance(other, GaussianInt):
            return Word(self.digits + (other,))
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.digits == other.digits

    def __hash__(self) -> int:
        return hash(self.digits)

    def __bool__(self) -> bool:
        return bool(self.digits)

    @property
    def last(self) -> GaussianInt:
        if not self.digits:
            raise InvalidWord("the empty word has no last letter")
        return self.digits[-1]

    def prefix(self, n: int) -> "Word":
        return Word(self.digits[:n])

    def prefixes(self) -> Iterator["Word"]:
        """Every prefix, shortest first, starting with the empty word."""
        for n in range(len(self.digits) + 1):
            yield Word(self.digits[:n])

    def with_last(self, b: GaussianInt) -> "Word":
        """The word with its last letter replaced by b."""
        if not self.digits:
            raise InvalidWord("the empty word has no last letter")
        return Word(self.digits[:-1] + (b,))

    def apply_symmetry(self, s: Symmetry) -> "Word":
        return Word(apply_symmetry(s, a) for a in self.digits)

    def to_json(self) -> list:
        return [a.to_json() for a in self.digits]

    @classmethod
    def from_json(cls, value) -> "Word":
        if isinstance(value, Word):
            return value
        if not isinstance(value, (list, tuple)):
            raise UsageError(f"a word is a list of [re, im] pairs, got {value!r}")
        return cls(GaussianInt.from_json(p) for p in value)

    def __str__(self) -> str:
        return "(" + ", ".join(str(a) for a in self.digits) + ")"

    def __repr__(self) -> str:
        return f"Word{self}"


EMPTY_WORD = Word()


class DigitSeq:
    """
    A finite or infinite digit sequence a_1, a_2, ... produced on demand.

    Positions are 1-based as in a_n. Produced digits are checked once and
    cached, so a producer is called at most once per position.
    """

    def __init__(self, producer: Callable[[int], GaussianInt], length: Optional[int] = None,
                 description: str = ""):
        self._producer = producer
        self.length = length
        self.description = description
        self._cache: Dict[int, GaussianInt] = {}

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------

    @classmethod
    def finite(cls, digits: Iterable, description: str = "finite") -> "DigitSeq":
        word = Word.from_json(list(digits)) if not isinstance(digits, Word) else digits
        data = word.digits
        return cls(lambda n: data[n - 1], len(data), description)

    @classmethod
    def periodic(cls, block: Sequence, prefix: Sequence = ()) -> "DigitSeq":
        """prefix followed by block repeated forever."""
        head = Word.from_json(list(prefix)) if not isinstance(prefix, Word) else prefix
        body = Word.from_json(list(block)) if not isinstance(block, Word) else block
        if not body:
            raise InvalidWord("a periodic sequence needs a nonempty block")
        h, p = head.digits, body.digits

        def produce(n: int) -> GaussianInt:
            if n <= len(h):
                return h[n - 1]
            return p[(n - len(h) - 1) % len(p)]

        return cls(produce, None, f"{head} then {body} repeated")

    @classmethod
    def from_function(cls, fn: Callable[[int], GaussianInt], length: Optional[int] = None,
                      description: str = "generated") -> "DigitSeq":
        return cls(fn, length, description)

    # ------------------------------------------------------------------
    # access
    # ------------------------------------------------------------------

    def is_finite(self) -> bool:
        return self.length is not None

    def digit(self, n: int) -> GaussianInt:
        """The digit a_n (1-based)."""
        if n < 1 or (self.length is not None and n > self.length):
            raise PreconditionViolated(f"position {n} is outside the sequence (length {self.length})")
        if n not in self._cache:
            self._cache[n] = require_digit(GaussianInt.from_json(self._producer(n)))
        return self._cache[n]

    def available(self, n: int) -> int:
        """How many of the first n digits exist."""
        return n if self.length is None else min(n, self.length)

    def take(self, n: int) -> Word:
        """The prefix of length n (shorter for a finite sequence that ends first)."""
        return Word(self.digit(k) for k in range(1, self.available(n) + 1))

    # ------------------------------------------------------------------
    # derived sequences
    # ------------------------------------------------------------------

    def apply_symmetry(self, s: Symmetry) -> "DigitSeq":
        return DigitSeq(lambda n: apply_symmetry(s, self.digit(n)), self.length,
                        f"{s.name} of {self.description}")

    def prepended(self, word: Word) -> "DigitSeq":
        """word followed by this sequence."""
        head = word.digits
        length = None if self.length is None else self.length + len(head)

        def produce(n: int) -> GaussianInt:
            return head[n - 1] if n <= len(head) else self.digit(n - len(head))

        return DigitSeq(produce, length, f"{word} then {self.description}")

    def shifted(self, k: int) -> "DigitSeq":
        """The tail a_{k+1}, a_{k+2}, ..."""
        length = None if self.length is None else max(0, self.length - k)
        return DigitSeq(lambda n: self.digit(n + k), length, f"tail after {k} of {self.description}")

    def to_json(self, n: int) -> dict:
        return {"description": self.description, "digits": self.take(n).to_json()}

    def __repr__(self) -> str:
        size = "infinite" if self.length is None else f"length {self.length}"
        return f"DigitSeq({self.description}, {size})"


def as_digit_seq(value) -> DigitSeq:
    """Accept a DigitSeq, a Word or a wire-form list of digits."""
    if isinstance(value, DigitSeq):
        return value
    if isinstance(value, Word):
        return DigitSeq.finite(value)
    return DigitSeq.finite(Word.from_json(value))
