"""Exception types shared across the package."""


class PostLieError(Exception):
    """Base class for every error raised by this package."""


class FieldMismatchError(PostLieError):
    """Two values tagged with different fields met in one operation."""


class DimensionError(PostLieError):
    """Vector or matrix shapes do not line up."""


class NotValidatedError(PostLieError):
    """An analysis routine received an object whose axioms were never checked."""


class StructureError(PostLieError):
    """A construction violates its defining axioms.

    When the failure came out of an axiom scan, `report` carries the full
    per-identity breakdown including the failing basis tuple.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class UnsupportedFieldError(PostLieError):
    """The requested computation is not defined over the given field."""


class ParameterError(PostLieError):
    """A catalog family was asked for a parameter outside its admissible set."""


class GuardError(PostLieError):
    """An enumeration would exceed the configured candidate budget."""


class DocumentError(PostLieError):
    """A pair document failed to parse; `where` points at the offender."""

    def __init__(self, message, where=None):
        if where:
            message = "%s: %s" % (where, message)
        super().__init__(message)
        self.where = where
