"""Exception types shared by the library and mapped to CLI exit codes."""


class ClosureLabError(Exception):
    """Base class for all library errors."""

    exit_code = 1


class GraphParseError(ClosureLabError, ValueError):
    exit_code = 2

    def __init__(self, message, line=None, source=None):
        self.line = line
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}:"
        if line is not None:
            where += f"line {line}: "
        elif where:
            where += " "
        super().__init__(where + message)


class CapacityError(ClosureLabError):
    """Raised when an exhaustive search would exceed a configured cap."""

    exit_code = 3

    def __init__(self, message, cap_name=None):
        self.cap_name = cap_name
        if cap_name:
            message += f" (raise the '{cap_name}' cap via CLOSURELAB_CAPS)"
        super().__init__(message)


class PreconditionError(ClosureLabError, ValueError):
    exit_code = 4


class InvalidArgument(PreconditionError):
    """Bad argument value (out of range vertex, c < 1, ...)."""


class ConstructionError(PreconditionError):
    """A gadget builder could not satisfy its requirements."""
