"""
Services package for the Hurwitz CF toolkit.

Packages:
- gaussian_core: exact scalars, digits, D8
- exact_geometry: regions of the plane and their Mobius images
- symbolic_shift: words, prototype sets, the regular-word graph
- hcf_engine: expansions, convergents, certified evaluation
- regularizer: the irregular-to-regular rewriting loop
- wordlab: repetitions, shuffles, digit families
- normality_stats: frequencies and Monte Carlo measures
- corpus: the fixture corpus

Modules:
- errors.py: the error hierarchy and its exit codes
- hcf_service.py: dispatch shared by the CLI and the router
- figures.py: the figure registry
"""

from .errors import HCFError, Undecidable, UsageError

__all__ = ["HCFError", "Undecidable", "UsageError"]
