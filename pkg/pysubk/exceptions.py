""" Error types raised by pysubk.

Everything derives from a builtin, so ``except ValueError`` keeps working
for callers that do not care about the finer distinctions.
"""


class PysubkError(Exception):
    """ Root of all pysubk errors. """


class DomainError(PysubkError, ValueError):
    """ Argument outside the domain of an operation (bad k, bad vertex, ...). """


class MalformedInputError(DomainError):
    """ Unparseable graph input.

    Parameters
    ----------
    msg : str
        Human readable description
    line : int/None
        1-based line number in the input stream (if known)
    offset : int/None
        0-based byte offset inside the line (graph6 only)
    """

    def __init__(self, msg, line=None, offset=None):
        self.line = line
        self.offset = offset
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        if where:
            msg = f"{msg} ({', '.join(where)})"
        super().__init__(msg)


class PreconditionError(DomainError):
    """ The hypothesis of a bound does not hold for this input. """


class ConfigError(DomainError):
    """ Incompatible run configuration. """


class ResourceLimitError(PysubkError, RuntimeError):
    """ The exact oracle was asked to go beyond its vertex cap. """
