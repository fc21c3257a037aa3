"""Encodings of algebraic sample points over a single algebraic number.

A ``RationalParametrization`` packages finitely many algebraic points as
integer polynomials evaluated at roots of one irreducible integer polynomial,
over a single positive integer denominator; the flagged intervals mark the
real roots whose point satisfies the originating formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from ratpoint import unipoly as up
from ratpoint.realroots import AlgebraicNumber


@dataclass(frozen=True)
class RationalParametrization:
    """Points (1/q) * (G_1(root), ..., G_m(root)) for roots of G.

    minpoly: integer coefficients of G, ascending, irreducible, positive lead
    q: positive integer denominator
    coords: integer coefficient tuples, each of degree < deg G
    flagged: isolating intervals for the accepted real roots of G, sorted
    """

    minpoly: tuple
    q: int
    coords: tuple
    flagged: tuple

    def __post_init__(self):
        if self.q <= 0:
            raise ValueError("denominator must be positive")
        d = len(self.minpoly) - 1
        if d < 1:
            raise ValueError("minimal polynomial must be nonconstant")
        for g in self.coords:
            if len(g) - 1 >= d and any(g[d:]):
                raise ValueError("coordinate polynomial degree must be below deg G")

    @property
    def degree(self) -> int:
        return len(self.minpoly) - 1

    @property
    def dimension(self) -> int:
        return len(self.coords)

    def flagged_numbers(self) -> list:
        return [
            AlgebraicNumber.from_minpoly_interval(list(self.minpoly), lo, hi)
            for lo, hi in self.flagged
        ]

    def point_at_rational_root(self, root: Fraction) -> list:
        return [Fraction(up.eval_at(list(g), root)) / self.q for g in self.coords]

    def rational_root(self):
        """The root itself when deg G == 1, else None."""
        if self.degree != 1:
            return None
        return Fraction(-self.minpoly[0], self.minpoly[1])


def parametrization_from_rational_point(point, flag: bool) -> RationalParametrization:
    """Encode an all-rational point with G = T and the point at the root 0."""
    point = [Fraction(c) for c in point]
    q = lcm(*(c.denominator for c in point)) if point else 1
    coords = tuple((int(c * q),) if c else () for c in point)
    return RationalParametrization(
        minpoly=(0, 1),
        q=q,
        coords=coords,
        flagged=((Fraction(0), Fraction(0)),) if flag else (),
    )
