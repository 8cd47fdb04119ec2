"""
Digit-family generators with their hypothesis checks.

Integer sequences B are described by rules, each of which either carries
a non-periodicity argument (power positions, square positions, the
Fibonacci word), is explicitly periodic (rejected), or is an explicit list
whose aperiodicity the caller asserts.

Families:
- thm14:  (-2, 1+iB_1, -2, 1+iB_2, ...) with 3 <= |B_n| bounded
- new-i:  (-2, 1+iB_1, -2, 1+iB_2, ...) with |B_n| >= 2, validity checked
- new-ii: s(A, B) with A in {2, 2i, -2, -2i} and B_n (or iB_n) digits, validity checked
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, List, Optional

from services.errors import HypothesisViolated, NotValid, UsageError
from services.gaussian_core import GaussianInt
from services.symbolic_shift import INVALID, DigitSeq, classify
from .constants import (
    APERIODIC_RULES,
    FAMILY_NEW_I,
    FAMILY_NEW_II,
    FAMILY_THM14,
    MIN_B,
    NEW_II_LETTERS,
    RULE_FIBONACCI,
    RULE_PERIODIC,
    RULE_POWER_POSITIONS,
    RULE_SQUARE_POSITIONS,
    SEQUENCE_RULES,
)

logger = logging.getLogger("hcf.wordlab")


def _is_power(n: int, base: int) -> bool:
    while n % base == 0 and n > 1:
        n //= base
    return n == 1


def _fibonacci_letter(n: int) -> int:
    """Letter n (1-based) of the Sturmian word of slope 1/phi."""
    phi = (1 + math.sqrt(5)) / 2
    return 0 if math.floor((n + 1) / phi) - math.floor(n / phi) == 1 else 1


# ============================================================================
# INTEGER SEQUENCES
# ============================================================================

@dataclass
class SequenceRule:
    """
    A rule producing an integer sequence B_1, B_2, ...

    Example:
        >>> SequenceRule.from_json({"rule": "power-positions", "base": 3, "bump": 4, "power": 2}).take(5)
        [4, 4, 3, 4, 3]
    """

    rule: str
    base: int = 3
    bump: int = 4
    power: int = 2
    values: List[int] = field(default_factory=list)
    assert_aperiodic: bool = False

    @classmethod
    def from_json(cls, spec: dict) -> "SequenceRule":
        if not isinstance(spec, dict) or spec.get("rule") not in SEQUENCE_RULES:
            raise UsageError(f"a sequence spec needs a rule among {list(SEQUENCE_RULES)}, got {spec!r}")
        try:
            return cls(
                rule=spec["rule"],
                base=int(spec.get("base", 3)),
                bump=int(spec.get("bump", 4)),
                power=int(spec.get("power", 2)),
                values=[int(v) for v in spec.get("values", [])],
                assert_aperiodic=bool(spec.get("assert_aperiodic", False)),
            )
        except (TypeError, ValueError) as e:
            raise UsageError(f"bad sequence spec {spec!r}: {e}")

    def value(self, n: int) -> int:
        if self.rule == RULE_POWER_POSITIONS:
            return self.bump if _is_power(n, self.power) else self.base
        if self.rule == RULE_SQUARE_POSITIONS:
            return self.bump if math.isqrt(n) ** 2 == n else self.base
        if self.rule == RULE_FIBONACCI:
            return self.bump if _fibonacci_letter(n) else self.base
        if not self.values:
            raise HypothesisViolated(f"the {self.rule} rule needs a nonempty value list")
        if self.rule == RULE_PERIODIC:
            return self.values[(n - 1) % len(self.values)]
        if n > len(self.values):
            raise HypothesisViolated(f"explicit sequence has {len(self.values)} values, B_{n} was requested")
        return self.values[n - 1]

    def take(self, n: int) -> List[int]:
        return [self.value(k) for k in range(1, n + 1)]

    def bound(self) -> Optional[int]:
        if self.rule in APERIODIC_RULES:
            return max(abs(self.base), abs(self.bump))
        return max((abs(v) for v in self.values), default=None)

    def require_aperiodic(self):
        """
        Raises:
            HypothesisViolated: the rule is periodic, or explicit without an
                aperiodicity assertion.
        """
        if self.rule in APERIODIC_RULES:
            if self.base == self.bump:
                raise HypothesisViolated(f"{self.rule} with base == bump is constant")
            if self.rule == RULE_POWER_POSITIONS and self.power < 2:
                raise HypothesisViolated("power-positions needs a power base >= 2")
            return
        if self.rule == RULE_PERIODIC:
            raise HypothesisViolated("a periodic B sequence breaks the non-periodicity hypothesis")
        if not self.assert_aperiodic:
            raise HypothesisViolated("an explicit B sequence needs assert_aperiodic to stand in for a proof")
        logger.warning("Aperiodicity of an explicit B sequence is asserted by the caller, not proven")


def _require_min(values: List[int], least: int, family: str):
    for n, b in enumerate(values, start=1):
        if abs(b) < least:
            raise HypothesisViolated(f"{family} needs |B_n| >= {least}, but B_{n} = {b}")


# ============================================================================
# A SEQUENCES
# ============================================================================

def a_sequence(spec) -> Callable[[int], GaussianInt]:
    """
    The A letters of family new-ii: "alternating" (-2, 2, ...), or
    {"rule": "cycle", "digits": [[re, im], ...]}, or a constant digit.
    """
    if spec in (None, "alternating") or (isinstance(spec, dict) and spec.get("rule") == "alternating"):
        return lambda n: GaussianInt(2 if n % 2 == 0 else -2)
    if isinstance(spec, dict) and spec.get("rule") == "cycle":
        letters = [GaussianInt.from_json(d) for d in spec.get("digits", [])]
        if not letters:
            raise UsageError("a cycle A spec needs digits")
    elif isinstance(spec, dict) and spec.get("rule") == "constant":
        letters = [GaussianInt.from_json(spec.get("digit", [-2, 0]))]
    else:
        raise UsageError(f"cannot read an A spec from {spec!r}")
    allowed = {GaussianInt(*p) for p in NEW_II_LETTERS}
    for a in letters:
        if a not in allowed:
            raise HypothesisViolated(f"A letters must lie in {{2, 2i, -2, -2i}}, got {a}")
    return lambda n: letters[(n - 1) % len(letters)]


# ============================================================================
# FAMILIES
# ============================================================================

def theorem14_digits(b_values: Callable[[int], int], length: Optional[int] = None,
                     description: str = "(-2, 1+iB_n)") -> DigitSeq:
    """(-2, 1+iB_1, -2, 1+iB_2, ...) with no hypothesis checks."""
    def produce(k: int) -> GaussianInt:
        return GaussianInt(-2) if k % 2 == 1 else GaussianInt(1, b_values(k // 2))
    return DigitSeq.from_function(produce, length, description)


def _require_valid(seq: DigitSeq, length: int, family: str):
    report = classify(seq.take(length))
    if report.tag == INVALID:
        raise NotValid(f"the {family} prefix of length {length} is not valid")
    logger.debug(f"{family} prefix of length {length} classifies {report.tag}")


def gen_theorem14(b_spec, length: int) -> DigitSeq:
    """
    The digits (-2, 1+iB_1, -2, 1+iB_2, ...) truncated to length.

    Args:
        b_spec: a SequenceRule or its JSON form
        length: number of digits

    Raises:
        HypothesisViolated: min |B_n| < 3 on the emitted prefix, an unbounded
            rule, or no non-periodicity argument.
    """
    rule = b_spec if isinstance(b_spec, SequenceRule) else SequenceRule.from_json(b_spec)
    rule.require_aperiodic()
    if rule.bound() is None:
        raise HypothesisViolated("the B sequence must be bounded")
    values = rule.take((length + 1) // 2)
    _require_min(values, MIN_B[FAMILY_THM14], FAMILY_THM14)
    return theorem14_digits(rule.value, length, f"thm14 with {rule.rule} B")


def gen_theorem_new(a_spec, b_spec, length: int, family: str = FAMILY_NEW_II, b_form: str = "real") -> DigitSeq:
    """
    Digit sequences of the "new" families, truncated to length.

    Args:
        a_spec: the A letters (new-ii only; new-i uses the constant -2)
        b_spec: a SequenceRule or its JSON form
        length: number of digits
        family: "new-i" or "new-ii"
        b_form: for new-ii, "real" uses B_n and "imaginary" uses iB_n

    Raises:
        HypothesisViolated: hypotheses of the family fail on the emitted prefix.
        NotValid: the emitted prefix is not valid.
    """
    rule = b_spec if isinstance(b_spec, SequenceRule) else SequenceRule.from_json(b_spec)
    rule.require_aperiodic()
    values = rule.take((length + 1) // 2 + 1)
    if family == FAMILY_NEW_I:
        _require_min(values, MIN_B[FAMILY_NEW_I], family)
        seq = theorem14_digits(rule.value, length, f"new-i with {rule.rule} B")
    elif family == FAMILY_NEW_II:
        _require_min(values, MIN_B[FAMILY_NEW_II], family)
        if b_form not in ("real", "imaginary"):
            raise UsageError(f"b_form must be real or imaginary, got {b_form!r}")
        a_of = a_sequence(a_spec)

        def produce(k: int) -> GaussianInt:
            if k % 2 == 1:
                return a_of((k + 1) // 2)
            b = rule.value(k // 2)
            return GaussianInt(b) if b_form == "real" else GaussianInt(0, b)

        seq = DigitSeq.from_function(produce, length, f"new-ii s(A, B) with {rule.rule} B")
    else:
        raise UsageError(f"unknown family {family!r}")
    _require_valid(seq, length, family)
    return seq
