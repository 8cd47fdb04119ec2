"""
Rewriting an irregular digit sequence into the closed regular shift.

Each round finds the least breakpoint j (the first j digits are regular,
the first j+1 are not), keeps the prefix, replaces digit j+1 by its S
value and reflects everything after it. Breakpoints strictly increase, so
every position is rewritten finitely often and any finite prefix of the
limit is reached after finitely many rounds.

The current sequence is never materialised: a RewriteState keeps the
fixed prefix and one symmetry M, and the digit at position k beyond the
prefix is M(a_k).
"""

import logging
from dataclasses import dataclass, field
from typing import Iterator, List, Optional

from config.settings import settings
from services.errors import InternalInvariantViolation, NotInDomain, NotValid, PreconditionViolated
from services.gaussian_core import IDENTITY, GaussianInt, Symmetry, apply_symmetry
from services.symbolic_shift import (
    INVALID,
    DigitSeq,
    SoficGraph,
    Word,
    as_digit_seq,
    build_sofic_graph,
    classify,
)
from .constants import REGULARIZE_SLACK
from .smap import substitute

logging.basicConfig(level=getattr(logging, settings.LOG_LEVEL, logging.WARNING))
logger = logging.getLogger("hcf.regularizer")


@dataclass
class RewriteState:
    """
    b_N as (prefix, M): b_N(k) = prefix[k] for k <= |prefix|, else M(a_k).
    """

    source: DigitSeq
    prefix: Word = field(default_factory=Word)
    tail_symmetry: Symmetry = IDENTITY
    N: int = 0
    j_history: List[int] = field(default_factory=list)
    mir_history: List[Symmetry] = field(default_factory=list)

    def digit(self, k: int) -> GaussianInt:
        if k <= len(self.prefix):
            return self.prefix[k - 1]
        return apply_symmetry(self.tail_symmetry, self.source.digit(k))

    def sequence(self) -> DigitSeq:
        """The current b_N as a lazy digit sequence."""
        return DigitSeq.from_function(self.digit, self.source.length, f"b_{self.N}")

    def take(self, n: int) -> Word:
        return Word(self.digit(k) for k in range(1, self.source.available(n) + 1))


def find_breakpoint(b, start: int = 0, horizon: int = 0, graph: Optional[SoficGraph] = None) -> Optional[int]:
    """
    The least j in [start, horizon] with b(1..j) regular and b(1..j+1) not.

    Args:
        b: the sequence (DigitSeq, Word or wire-form list)
        start: the prefix b(1..start) is known to be regular
        horizon: largest breakpoint looked for

    Returns:
        the breakpoint, or None when b(1..horizon+1) is regular

    Raises:
        PreconditionViolated: the walk breaks before position start + 1.
    """
    seq = as_digit_seq(b)
    walk = (graph or build_sofic_graph()).walk(seq.take(horizon + 1))
    if walk.regular:
        return None
    j = walk.broke_at - 1
    if j < start:
        raise PreconditionViolated(f"b(1..{start}) was assumed regular but breaks at {walk.broke_at}")
    return j


def rewrite_step(st: RewriteState, j: int, graph: Optional[SoficGraph] = None) -> RewriteState:
    """
    Apply one rewrite at breakpoint j.

    Raises:
        InternalInvariantViolation: the digit at j+1 is outside the domain of
            S, or the new prefix fails regularity.
    """
    offending = st.digit(j + 1)
    try:
        replacement, mir = substitute(offending)
    except NotInDomain as e:
        raise InternalInvariantViolation(f"breakpoint digit {offending} at position {j + 1}: {e}")
    prefix = st.take(j) + replacement
    if not (graph or build_sofic_graph()).walk(prefix).regular:
        raise InternalInvariantViolation(f"rewritten prefix {prefix} is not regular")
    logger.debug(f"N={st.N}: breakpoint {j}, {offending} -> {replacement}, tail reflected by {mir.name}")
    return RewriteState(
        source=st.source,
        prefix=prefix,
        tail_symmetry=mir.compose(st.tail_symmetry),
        N=st.N + 1,
        j_history=st.j_history + [j],
        mir_history=st.mir_history + [mir],
    )


@dataclass
class Regularization:
    """Output of the regularizer: the emitted digits and one record per rewrite."""

    digits: Word
    trace: List[dict]
    state: RewriteState

    @property
    def breakpoints(self) -> List[int]:
        return list(self.state.j_history)

    def as_seq(self) -> DigitSeq:
        return DigitSeq.finite(self.digits, "regularized")

    def to_json(self) -> dict:
        return {
            "digits": self.digits.to_json(),
            "breakpoints": self.breakpoints,
            "symmetries": [m.name for m in self.state.mir_history],
            "tail_symmetry": self.state.tail_symmetry.name,
            "rounds": self.state.N,
        }


def iterate_rewrites(a, out_len: int, slack: int = REGULARIZE_SLACK,
                     graph: Optional[SoficGraph] = None) -> Iterator[dict]:
    """
    Run the rewrite loop and yield one trace record per round.

    The final RewriteState is the generator's return value.
    """
    graph = graph or build_sofic_graph()
    st = RewriteState(as_digit_seq(a))
    horizon = out_len + slack
    while len(st.prefix) < out_len:
        j = find_breakpoint(st.sequence(), len(st.prefix), horizon, graph)
        if j is None:
            break
        offending = st.digit(j + 1)
        st = rewrite_step(st, j, graph)
        yield {
            "N": st.N - 1,
            "j": j,
            "digit": offending.to_json(),
            "replacement": st.prefix.last.to_json(),
            "mir": st.mir_history[-1].name,
            "tail_symmetry": st.tail_symmetry.name,
            "prefix": st.prefix.to_json(),
        }
    return st


def check_valid(seq: DigitSeq, n: int, graph: SoficGraph):
    """Raise NotValid when the first n digits of seq classify invalid."""
    word = seq.take(n)
    report = classify(word, graph)
    if report.tag == INVALID:
        logger.error(f"regularize: input prefix {word} is not valid")
        raise NotValid(f"the input is not valid: its first {len(word)} digits have an empty cylinder")


def run_regularizer(a, out_len: int, slack: int = REGULARIZE_SLACK, validate: bool = True,
                    graph: Optional[SoficGraph] = None) -> Regularization:
    """
    Regularize a valid sequence and keep the trace.

    Args:
        a: the input (DigitSeq, Word or wire-form list)
        out_len: number of output digits
        slack: extra breakpoint horizon beyond out_len
        validate: classify the input prefix first and refuse invalid input

    Returns:
        Regularization: first out_len digits of the limit sequence with the trace

    Raises:
        NotValid: validate is on and the input prefix is invalid.
    """
    if out_len < 0:
        raise PreconditionViolated("out_len must be non-negative")
    graph = graph or build_sofic_graph()
    seq = as_digit_seq(a)
    if validate:
        check_valid(seq, out_len + slack + 1, graph)

    trace = []
    rounds = iterate_rewrites(seq, out_len, slack, graph)
    while True:
        try:
            trace.append(next(rounds))
        except StopIteration as done:
            st = done.value
            break
    if trace:
        logger.info(f"Regularized {seq.description} in {len(trace)} rounds, breakpoints {st.j_history[:8]}")
    return Regularization(st.take(out_len), trace, st)


def regularize(a, out_len: int, slack: int = REGULARIZE_SLACK, validate: bool = True,
               graph: Optional[SoficGraph] = None) -> DigitSeq:
    """First out_len digits of the regularized sequence, as a finite DigitSeq."""
    return run_regularizer(a, out_len, slack, validate, graph).as_seq()
