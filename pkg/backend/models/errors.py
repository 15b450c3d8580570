"""Error types shared across the lattice, search and tropical modules.

Validation errors derive from ValueError so callers that only care about
"bad input" can keep catching ValueError; DocumentReadError is an OSError.
"""


class LatticeDomainError(ValueError):
    """An operation was called outside its mathematical domain."""


class ConfigurationValidationError(ValueError):
    """A polytope, vector configuration or JSON document failed validation."""


class NormalizationError(ValueError):
    """A normalization step could not establish its postconditions."""


class SearchRangeError(ValueError):
    """A search was requested for parameters outside its supported range."""


class CurveValidationError(ValueError):
    """Base class for tropical curve validation failures."""


class NonCanonicalRayError(CurveValidationError):
    """A ray representative does not have minimum coordinate 0."""


class NonPrimitiveRayError(CurveValidationError):
    """A ray representative is not primitive."""


class DuplicateRayError(CurveValidationError):
    """Two rays share a direction."""


class UnbalancedCurveError(CurveValidationError):
    """The weighted rays do not sum to a multiple of (1, ..., 1)."""


class DegreeMismatchError(CurveValidationError):
    """The computed degree differs from the degree claimed by the caller."""


class InconsistentCurveError(CurveValidationError):
    """A curve claims more rays than any plane curve of its degree can have."""


class DocumentReadError(OSError):
    """An input document is missing, unreadable or not valid JSON."""
