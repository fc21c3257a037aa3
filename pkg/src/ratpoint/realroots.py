"""Real-root machinery: isolation, rational roots, algebraic numbers, root sums.

An ``AlgebraicNumber`` is an irreducible integer minimal polynomial plus an
isolating interval with rational endpoints; the interval is degenerate exactly
when the number is rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from ratpoint import unipoly as up
from ratpoint.factorization import factor_over_Q
from ratpoint.rationals import qq, qsign

# spec'd operations re-exported from the low-level engine
from ratpoint.unipoly import sturm_count  # noqa: F401


def isolate_real_roots(p) -> list:
    """Disjoint isolating intervals, one per distinct real root of p.

    Intervals are sorted (lo, hi) pairs of rationals; repeated roots of p are
    reported once (isolation works on the squarefree part).
    """
    if up.is_zero(p):
        raise ValueError("zero polynomial has no isolated roots")
    return up.isolate_roots(p)


def _divisors(n: int) -> list:
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def rational_roots(p) -> list:
    """All rational roots, each reported once, via root candidates p/q with
    p dividing the constant and q the leading coefficient of the primitive
    integer form."""
    if up.is_zero(p):
        raise ValueError("zero polynomial")
    _, f = up.to_integer(p)
    roots = []
    # strip powers of T
    shift = 0
    while f and f[0] == 0:
        f = f[1:]
        shift += 1
    if shift:
        roots.append(Fraction(0))
    if len(f) <= 1:
        return sorted(roots)
    f = up.int_primitive(f)
    seen = set(roots)
    for num in _divisors(f[0]):
        for den in _divisors(f[-1]):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if cand not in seen and up.int_sign_at(f, cand) == 0:
                    seen.add(cand)
                    roots.append(cand)
    return sorted(roots)


def all_roots_real(p) -> bool:
    """True iff every complex root of p is real."""
    if up.is_zero(p):
        raise ValueError("zero polynomial")
    sf = up.squarefree_part(p)
    if len(sf) == 1:
        return True
    return up.count_real_roots(sf) == len(sf) - 1


def root_sum_evaluate(g, h) -> Fraction:
    """Sum of h over all complex roots of g, with multiplicity, exactly.

    Computed from the power sums of g's roots (Newton's identities), so no
    root is ever approximated.
    """
    if up.is_zero(g) or len(g) == 1:
        raise ValueError("need a nonconstant polynomial to sum over")
    g = up.monic([qq(c) for c in g])
    n = len(g) - 1
    h = [qq(c) for c in h]
    _, hr = up.divmod_exact(h, g)
    # power sums s_0 .. s_{n-1}: s_k = -k*a_{n-k} - sum_{i<k} a_{n-i} s_{k-i}
    sums = [Fraction(n)]
    for k in range(1, n):
        acc = Fraction(k) * g[n - k]
        for i in range(1, k):
            acc += g[n - i] * sums[k - i]
        sums.append(-acc)
    total = Fraction(0)
    for j, c in enumerate(hr):
        total += c * sums[j]
    return total


@dataclass(frozen=True)
class AlgebraicNumber:
    """A real algebraic number: irreducible minimal polynomial plus isolating
    interval.  The minimal polynomial is a primitive integer coefficient tuple
    (ascending) with positive leading coefficient."""

    minpoly: tuple
    interval: tuple

    @staticmethod
    def from_rational(r) -> "AlgebraicNumber":
        r = qq(r)
        mp = (-r.numerator, r.denominator)
        return AlgebraicNumber(minpoly=mp, interval=(r, r))

    @staticmethod
    def from_minpoly_interval(minpoly, lo, hi) -> "AlgebraicNumber":
        minpoly = [int(c) for c in minpoly]
        if minpoly and minpoly[-1] < 0:
            minpoly = [-c for c in minpoly]
        lo, hi = qq(lo), qq(hi)
        if len(minpoly) == 2:
            r = Fraction(-minpoly[0], minpoly[1])
            return AlgebraicNumber(minpoly=tuple(minpoly), interval=(r, r))
        return AlgebraicNumber(minpoly=tuple(minpoly), interval=(lo, hi))

    @property
    def degree(self) -> int:
        return len(self.minpoly) - 1

    def is_rational(self) -> bool:
        return self.degree == 1

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational number")
        return Fraction(-self.minpoly[0], self.minpoly[1])

    def check_isolating(self) -> bool:
        lo, hi = self.interval
        if lo == hi:
            return self.is_rational() and up.int_sign_at(list(self.minpoly), lo) == 0
        if up.int_sign_at(list(self.minpoly), lo) == 0:
            return False
        return up.sturm_count(list(self.minpoly), lo, hi) == 1

    def refined(self, width) -> "AlgebraicNumber":
        lo, hi = self.interval
        if lo == hi:
            return self
        lo, hi = up.refine_interval(list(self.minpoly), lo, hi, qq(width))
        return AlgebraicNumber(minpoly=self.minpoly, interval=(lo, hi))

    def bounds(self) -> tuple:
        return self.interval

    def __str__(self):
        lo, hi = self.interval
        if lo == hi:
            return str(lo)
        return f"root of {up.format_poly(list(self.minpoly))} in [{lo}, {hi}]"


def _interval_mul(a, b):
    products = [a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]]
    return min(products), max(products)


def _interval_eval(p, box):
    acc = (qq(p[-1]), qq(p[-1]))
    for c in reversed(p[:-1]):
        acc = _interval_mul(acc, box)
        c = qq(c)
        acc = (acc[0] + c, acc[1] + c)
    return acc


def sign_at(p, alpha: AlgebraicNumber) -> int:
    """Exact sign of p at an algebraic number: -1, 0, or +1."""
    if up.is_zero(p):
        return 0
    if not alpha.check_isolating():
        raise ValueError("interval does not isolate a root of the minimal polynomial")
    if alpha.is_rational():
        r = alpha.to_rational()
        _, p_int = up.to_integer(p)
        return up.int_sign_at(p_int, r)
    mp = [Fraction(c) for c in alpha.minpoly]
    if not up.rem([qq(c) for c in p], mp):
        return 0
    cur = alpha
    while True:
        lo, hi = cur.interval
        val_lo, val_hi = _interval_eval([qq(c) for c in p], (lo, hi))
        if val_lo > 0:
            return 1
        if val_hi < 0:
            return -1
        cur = cur.refined((hi - lo) / 2)
