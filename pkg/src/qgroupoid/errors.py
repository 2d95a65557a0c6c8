"""Exception types raised by the library.

Every error derives from :class:`QGError` so the CLI can turn any domain
failure into a JSON error object with a single ``except`` clause.
"""


class QGError(ValueError):
    """Base class for all domain errors."""


class InvalidOrderError(QGError):
    """Graph order N is below the supported minimum."""


class DomainError(QGError):
    """A vertex, generator or parameter is outside its valid range."""


class MalformedPathError(QGError):
    """A vertex sequence is not a walk on the graph."""


class ArityError(QGError):
    """An operator was applied to a path with too few steps."""


class PositionError(QGError):
    """An operator position lies outside the path."""


class GradingError(QGError):
    """A graded operation received a vector mixing step counts."""


class UnsupportedVariantError(QGError):
    """A product variant was requested for a graph it is not defined on."""


class CatalogueError(QGError):
    """Unknown axiom identifier."""
