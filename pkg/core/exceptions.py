# core/exceptions.py


class TeachingError(Exception):
    """Base class for every error raised by the concept-class toolkit."""


class InputError(TeachingError, ValueError):
    """Malformed input: coordinate out of range, length mismatch, unknown concept."""


class ConceptParseError(InputError):
    def __init__(self, message, line=None, source=None):
        self.line = line
        self.source = source
        location = ""
        if source:
            location = f"{source}:"
        if line is not None:
            location = f"{location}{line}:"
        super().__init__(f"{location} {message}" if location else message)


class DomainError(TeachingError, ValueError):
    """A measure was asked of a class outside its domain (e.g. the empty class)."""


class ParameterError(TeachingError, ValueError):
    """Numeric parameters violate an operation's preconditions."""


class InfeasibleError(ParameterError):
    """Parameters are valid but beyond what exact computation can handle."""


class CapacityError(TeachingError):
    """The instance space would exceed the configured representation ceiling."""


class ConvergenceError(TeachingError, ArithmeticError):
    pass


class InvariantError(TeachingError, RuntimeError):
    """An internal guarantee failed; always a bug, never bad input."""
