# errors.py ---
#
# Filename: errors.py
#
# Commentary:
#
# Exceptions raised by polyzoo. The command line maps each family to its
# own exit status.
#

class PolyzooError(Exception):
    """Base class of all polyzoo errors."""


class GraphParseError(PolyzooError, ValueError):
    """Malformed textual input (edge list, graph6, matrix, catalog, ...)."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class FormulaSyntaxError(GraphParseError):
    """Syntax error in a color formula."""


class BudgetExceeded(PolyzooError, RuntimeError):
    """A configured computation budget has been hit."""

    def __init__(self, key, limit, detail=""):
        message = f"budget '{key}' exceeded (limit {limit})"
        if detail:
            message += f": {detail}"
        super().__init__(message)
        self.key = key
        self.limit = limit


class InvalidDecomposition(PolyzooError, ValueError):
    """A tree decomposition violates one of its defining conditions."""


class InterpolationError(PolyzooError, ArithmeticError):
    """A forward difference is not divisible by the matching factorial."""


class UsageError(PolyzooError):
    """Options that cannot be combined, or a missing required option."""

# 
# errors.py ends here
