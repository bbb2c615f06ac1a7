"""Exception hierarchy shared across the package."""


class Fea2vrError(Exception):
    """Base class for all errors raised by fea2vr."""


class ListingError(Fea2vrError):
    """A solver listing could not be parsed.

    Attributes:
        line_number: 1-based line of the offending input, when known.
    """

    def __init__(self, message, line_number=None):
        super().__init__(message)
        self.line_number = line_number


class ElementError(Fea2vrError):
    """An element record is inconsistent with its assigned class."""

    def __init__(self, message, element_id=None):
        super().__init__(message)
        self.element_id = element_id


class ConversionError(Fea2vrError):
    """The mesh pipeline could not produce a valid mesh."""


class VrMeshFormatError(Fea2vrError):
    """A vrmesh document violates the schema."""
