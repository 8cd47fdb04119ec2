"""
Error types shared by every service package.

Each error carries the CLI exit code it maps to:
1 for domain errors, 2 for precision problems, 3 for usage errors.
"""


class HCFError(Exception):
    """Base class of all toolkit errors."""

    exit_code: int = 1
    http_status: int = 422


class InvalidDigit(HCFError):
    """A digit outside Z[i] minus {0, 1, i, -1, -i}."""


class InvalidWord(HCFError):
    """A word that cannot be used for the requested construction."""


class NotValid(HCFError):
    """A digit sequence that is not the expansion of any point of F."""


class NotRegular(HCFError):
    """A word whose open cylinder is empty."""


class NotInClosedShift(HCFError):
    """A sequence with an irregular prefix handed to the closed-shift evaluator."""


class NotInDomain(HCFError):
    """A digit outside the domain of the S substitution."""


class PreconditionViolated(HCFError):
    """An operation called outside of its documented precondition."""


class HypothesisViolated(HCFError):
    """A generator spec that breaks the hypotheses of its digit family."""


class LengthMismatch(HCFError):
    """Two words that should have the same length do not."""


class ZeroInput(HCFError):
    """The Gauss map was asked to act on 0."""


class ZeroDenominator(HCFError):
    """A formal continued fraction hit a zero denominator."""


class OriginInRegion(HCFError):
    """Inversion of a region that contains 0."""


class FieldOverflow(HCFError):
    """An exact construction left the session field Q(sqrt d)."""


class CatalogueViolation(HCFError):
    """A computed open prototype set matched none of the 13 catalogued shapes."""


class InternalInvariantViolation(HCFError):
    """A proven invariant failed; always a bug."""


class Undecidable(HCFError):
    """A ball straddles a decision boundary at the current precision."""

    exit_code = 2
    http_status = 409


class UsageError(HCFError):
    """Malformed command line or payload."""

    exit_code = 3
    http_status = 400


class UnknownFigure(UsageError):
    """A figure name missing from the registry."""
