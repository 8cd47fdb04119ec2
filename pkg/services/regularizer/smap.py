"""
The digit substitution S and the reflection it pairs with.

    S(1 + im) = S(-1 + im) = im        (paired with Mir2)
    S(m + i)  = S(m - i)   = m         (paired with Mir1)

for |m| >= 2.
"""

from typing import Tuple

from services.errors import NotInDomain
from services.gaussian_core import MIR1, MIR2, GaussianInt, Symmetry


def in_s_domain(a: GaussianInt) -> bool:
    return (abs(a.re) == 1 and abs(a.im) >= 2) or (abs(a.im) == 1 and abs(a.re) >= 2)


def s_map(a: GaussianInt) -> GaussianInt:
    """
    Apply S.

    Raises:
        NotInDomain: a is not of the form +-1 + im or m +- i with |m| >= 2.

    Example:
        >>> s_map(GaussianInt(1, 3))
        GaussianInt(re=0, im=3)
    """
    if abs(a.re) == 1 and abs(a.im) >= 2:
        return GaussianInt(0, a.im)
    if abs(a.im) == 1 and abs(a.re) >= 2:
        return GaussianInt(a.re, 0)
    raise NotInDomain(f"S is undefined at {a}")


def paired_reflection(a: GaussianInt) -> Symmetry:
    """Mir1 for digits m +- i, Mir2 for digits +-1 + im."""
    if abs(a.im) == 1 and abs(a.re) >= 2:
        return MIR1
    if abs(a.re) == 1 and abs(a.im) >= 2:
        return MIR2
    raise NotInDomain(f"S is undefined at {a}")


def substitute(a: GaussianInt) -> Tuple[GaussianInt, Symmetry]:
    """(S(a), reflection applied to the tail after a)."""
    return s_map(a), paired_reflection(a)
