"""
Empirical check of the convergent growth inequality

    psi^(2u) >= |q_{2w} q_{2w+2u+2v}|^eps,

evaluated in log form: 2u log psi >= eps (log|q_{2w}| + log|q_{2w+2u+2v}|).
"""

from dataclasses import dataclass
from typing import Iterable, List, Tuple

import mpmath

from services.errors import PreconditionViolated
from services.hcf_engine import PSI, convergents
from services.symbolic_shift import as_digit_seq


@dataclass
class GrowthCheck:
    """One instance (w, u, v) of the inequality at a given eps."""

    w: int
    u: int
    v: int
    eps: mpmath.mpf
    lhs: mpmath.mpf
    rhs: mpmath.mpf

    @property
    def holds(self) -> bool:
        return self.lhs >= self.rhs

    def to_json(self) -> dict:
        return {
            "w": self.w, "u": self.u, "v": self.v, "t": self.w + self.u + self.v,
            "eps": mpmath.nstr(self.eps, 6),
            "lhs": mpmath.nstr(self.lhs, 12),
            "rhs": mpmath.nstr(self.rhs, 12),
            "holds": self.holds,
        }


def _log_abs(q) -> mpmath.mpf:
    return mpmath.log(mpmath.mpf(q.norm())) / 2


def check_growth_inequality(a, triples: Iterable[Tuple[int, int, int]], eps) -> List[GrowthCheck]:
    """
    Evaluate the inequality for every (w, u, v) triple.

    Raises:
        PreconditionViolated: the sequence is too short for some q index.
    """
    seq = as_digit_seq(a)
    triples = list(triples)
    need = max((2 * (w + u + v) for w, u, v in triples), default=0)
    if seq.available(need) < need:
        raise PreconditionViolated(f"q_{need} needs {need} digits, the sequence has {seq.available(need)}")
    qs = [c.q for c in convergents(seq.take(need))]
    eps = mpmath.mpf(eps)
    out = []
    with mpmath.workdps(40):
        log_psi = mpmath.log(PSI)
        for w, u, v in triples:
            lhs = 2 * u * log_psi
            rhs = eps * (_log_abs(qs[2 * w]) + _log_abs(qs[2 * (w + u + v)]))
            out.append(GrowthCheck(w, u, v, eps, lhs, rhs))
    return out
