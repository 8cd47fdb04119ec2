"""
Gaussian core: exact scalars, Gaussian integers, digits and D8 symmetry.

Modules:
- gaussian.py: GaussianInt, the digit set and pm
- scalars.py: QuadScalar and QuadComplex over Q(sqrt d)
- domain.py: nearest Gaussian integer, the fundamental domain F, alpha and zeta1..zeta4
- symmetry.py: the dihedral group D8 (ROTA, MIR1, MIR2)
"""

from .gaussian import GaussianInt, ZERO, ONE, I, is_digit, require_digit, pm, digits_from_pairs
from .scalars import QuadScalar, QuadComplex, qc, rational_sqrt, is_squarefree
from .domain import nearest_gaussian, in_fundamental_domain, in_closed_domain, alpha, zeta
from .symmetry import Symmetry, IDENTITY, ROTA, MIR1, MIR2, apply_symmetry

__all__ = [
    # Gaussian integers and digits
    "GaussianInt",
    "ZERO",
    "ONE",
    "I",
    "is_digit",
    "require_digit",
    "pm",
    "digits_from_pairs",

    # Exact scalars
    "QuadScalar",
    "QuadComplex",
    "qc",
    "rational_sqrt",
    "is_squarefree",

    # Fundamental domain
    "nearest_gaussian",
    "in_fundamental_domain",
    "in_closed_domain",
    "alpha",
    "zeta",

    # Symmetry
    "Symmetry",
    "IDENTITY",
    "ROTA",
    "MIR1",
    "MIR2",
    "apply_symmetry",
]
