"""Exception taxonomy shared across the package."""

from __future__ import annotations


class CurvactError(Exception):
    """Base class for all package-specific failures."""


class DegenerateInputError(CurvactError):
    """An operation received input outside its domain (e.g. gcd of two zeros)."""


class DimensionMismatchError(CurvactError):
    """Dimensions of interacting objects disagree."""


class DegenerateCurveError(CurvactError):
    """A wedge or projection collapsed; carries the offending span when known."""

    def __init__(self, message: str, span=None):
        super().__init__(message)
        self.span = span


class PluckerInconsistencyError(CurvactError):
    """The Plücker relation failed to determine a single integer genus."""


class InversionAmbiguousError(CurvactError):
    """Point inversion on a parametrized curve had no unique solution."""


class NotMonomialError(CurvactError):
    """Normalization found a W-point structure incompatible with a monomial model."""


class NoParametrizationError(CurvactError):
    """The supplied target map does not parametrize the projected curve."""
