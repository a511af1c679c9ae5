"""Exception hierarchy shared by the library and the command line."""


class EnvlatError(Exception):
    """Base class for all errors raised by envlat."""


class InvalidInputError(EnvlatError, ValueError):
    """Malformed diagram, subset, or element specification."""


class ResourceLimitError(EnvlatError):
    """An enumeration would exceed its configured cap."""


class UndefinedClassificationError(EnvlatError):
    """A classification predicate was asked about an element it does not cover."""


class UnsupportedError(EnvlatError):
    """The requested closed form is not available for this input."""


class EmptyDecompositionError(EnvlatError):
    """The bottom element is not a join of atoms."""
