"""
Prototype sets and cylinders of finite words.

The prototype set of a word follows the recurrence

    F_0 = F,    F_n = F ∩ τ_{-a_n} ι(F_{n-1} minus 0),

which is T applied to the level-n cylinder. The cylinder itself is the image
of F_n under t -> (p_{n-1} t + p_n)/(q_{n-1} t + q_n).
"""

import logging
from typing import List, Tuple

from services.errors import InvalidWord
from services.exact_geometry import (
    Region,
    fundamental_domain,
    intersect,
    invert,
    mobius,
    open_fundamental_domain,
    translate,
)
from services.gaussian_core import GaussianInt
from .words import Word

logger = logging.getLogger("hcf.shift")


def _inverted_translate(region: Region, b: GaussianInt) -> Region:
    if region.contains(0):
        region = region.punctured(0)
    return translate(invert(region), -b)


def prototype_step(region: Region, b: GaussianInt, allow_uncertified: bool = False) -> Region:
    """F ∩ τ_{-b} ι(region minus 0): the prototype set after one more digit."""
    if region.is_empty():
        return region
    return intersect(fundamental_domain(), _inverted_translate(region, b), allow_uncertified)


def open_step(region: Region, b: GaussianInt) -> Region:
    """F° ∩ τ_{-b} ι(region minus 0): the open-prototype transition."""
    if region.is_empty():
        return region
    return intersect(open_fundamental_domain(), _inverted_translate(region, b))


def prototype_chain(w: Word, allow_uncertified: bool = False) -> List[Region]:
    """
    [F_0, F_1(a_1), ..., F_n(a_1..a_n)], stopping early after an empty set.
    """
    regions = [fundamental_domain()]
    for b in w:
        nxt = prototype_step(regions[-1], b, allow_uncertified)
        regions.append(nxt)
        if nxt.is_empty():
            break
    return regions


def prototype_region(w: Word, allow_uncertified: bool = False) -> Region:
    """
    The prototype set F_n(w); F_0(ε) = F.

    Args:
        w: the word a_1 ... a_n
        allow_uncertified: continue with flagged numerics when a degenerate
            set leaves the exact field

    Returns:
        Region: the exact prototype set (empty when w is not valid)
    """
    chain = prototype_chain(w, allow_uncertified)
    if len(chain) <= len(w):
        return Region.empty()
    return chain[-1]


def open_prototype(w: Word) -> Region:
    """The open prototype set F°_n(w), built with open squares throughout."""
    region = open_fundamental_domain()
    for b in w:
        region = open_step(region, b)
        if region.is_empty():
            break
    return region


def convergent_matrix(w: Word) -> Tuple[Tuple[GaussianInt, GaussianInt], Tuple[GaussianInt, GaussianInt]]:
    """[[p_{n-1}, p_n], [q_{n-1}, q_n]] for the word a_1 ... a_n."""
    p_prev, p = GaussianInt(1), GaussianInt(0)
    q_prev, q = GaussianInt(0), GaussianInt(1)
    for a in w:
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
    return ((p_prev, p), (q_prev, q))


def cylinder_region(w: Word, allow_uncertified: bool = False) -> Region:
    """
    The cylinder C_n(w) = {z in F : a_1(z) = w_1, ..., a_n(z) = w_n}.

    Raises:
        InvalidWord: when the cylinder is empty.
    """
    proto = prototype_region(w, allow_uncertified)
    if proto.is_empty():
        raise InvalidWord(f"the word {w} is not valid: its cylinder is empty")
    logger.debug(f"Cylinder of {w} from a {proto.kind} prototype set")
    return mobius(proto, convergent_matrix(w))
