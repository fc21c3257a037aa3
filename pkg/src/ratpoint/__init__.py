"""Exact rational points in convex semi-algebraic sets and rational SOS certificates.

Everything here computes over the rationals with arbitrary precision; no
floating point is used anywhere in the decision paths.
"""

from ratpoint.errors import (
    BudgetExhaustedError,
    ConvexitySuspectError,
    GramInfeasibleError,
    NotPSDMatrixError,
    ParseError,
    RatpointError,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExhaustedError",
    "ConvexitySuspectError",
    "GramInfeasibleError",
    "NotPSDMatrixError",
    "ParseError",
    "RatpointError",
    "__version__",
]
