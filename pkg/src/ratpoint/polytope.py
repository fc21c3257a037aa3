"""Monomial basis selection for squared decompositions.

The support of any representation f = sum of squares uses only monomials
whose doubled exponent vector lies in the Newton polytope of f, so the pruned
basis is exactly the lattice points of the half polytope.
"""

from __future__ import annotations

from ratpoint.multipoly import MultiPoly
from ratpoint.simplex import in_convex_hull


def monomials_up_to(n_vars: int, degree: int) -> list:
    """Exponent tuples with total degree <= degree, degree-major order and
    lexicographically descending inside each degree."""
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + (e,), remaining - e, slots - 1)

    result = []
    for total in range(degree + 1):
        out.clear()
        if n_vars == 0:
            continue
        rec((), total, n_vars)
        result.extend(out)
    return result


def half_newton_points(f: MultiPoly) -> list:
    """Exponent tuples a with 2a inside the Newton polytope of f, in the same
    order as monomials_up_to."""
    support = [list(e) for e in f.terms]
    if not support:
        return []
    d = f.total_degree()
    half = d // 2
    picked = []
    for alpha in monomials_up_to(len(f.variables), half):
        doubled = [2 * e for e in alpha]
        if in_convex_hull(doubled, support):
            picked.append(alpha)
    return picked
