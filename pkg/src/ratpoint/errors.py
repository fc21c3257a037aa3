"""Exception types shared across the package."""


class RatpointError(Exception):
    """Base class for all package-specific errors."""


class ParseError(RatpointError):
    """Raised on malformed polynomial or formula text; carries position info."""

    def __init__(self, message, position=None, token=None):
        self.position = position
        self.token = token
        if position is not None:
            message = f"{message} (at position {position}" + (
                f", token {token!r})" if token is not None else ")"
            )
        super().__init__(message)


class BudgetExhaustedError(RatpointError):
    """A configured resource budget (cells, degree, variables) was exceeded.

    Raised instead of ever returning a possibly-wrong answer.
    """


class ConvexitySuspectError(RatpointError):
    """The search observed behaviour impossible for a convex input set."""


class GramInfeasibleError(RatpointError):
    """No symmetric matrix over the chosen monomial basis reproduces the input."""


class NotPSDMatrixError(RatpointError):
    """A positive semidefinite matrix was required but the input is not one."""
