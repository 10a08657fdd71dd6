"""Exception types shared across the package."""


class AmbigcolorError(Exception):
    """Base class for all package-specific errors."""


class InputFormatError(AmbigcolorError):
    """Malformed matrix / graph / tensor input (CLI exit code 2)."""


class ResourceLimitError(AmbigcolorError):
    """A configured size bound was exceeded (CLI exit code 3)."""


class PreconditionError(AmbigcolorError, ValueError):
    """An operation was called outside its documented domain."""


class ReconstructionError(AmbigcolorError):
    """Certificate-matrix reconstruction failed one of its checks.

    On a graph that really is maximal ambiguously k-colorable this never
    happens; the verification harness treats it as "no certificate".
    """
