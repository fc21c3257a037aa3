"""Small helpers around ``fractions.Fraction``.

``Fraction`` already enforces the invariants we need (reduced form, positive
denominator, arbitrary precision), so it is used directly as the rational
scalar type throughout the package.
"""

from __future__ import annotations

from fractions import Fraction


def qq(value) -> Fraction:
    """Coerce ints, Fractions, or 'p/q' strings to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a rational")


def qsign(x) -> int:
    """Sign of a rational (or int) as -1, 0, or +1."""
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def qbits(x: Fraction) -> int:
    """Bit length of a rational: bits of |numerator| plus bits of denominator."""
    x = qq(x)
    return abs(x.numerator).bit_length() + x.denominator.bit_length()


def format_q(x: Fraction) -> str:
    """Render as 'p' or 'p/q' with no whitespace."""
    x = qq(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
