"""Sparse multivariate polynomials with exact rational coefficients.

Terms are stored as a map from exponent tuples to nonzero coefficients.  The
canonical term order is graded lexicographic.  Instances are immutable by
convention: no method mutates ``terms`` after construction.

Coefficients are normally ``Fraction``; the arithmetic is written so that any
exact field scalar with the usual operators works (the CAD lifting stage
evaluates polynomials partially at algebraic numbers).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from ratpoint.rationals import format_q, qq


def _is_zero(c) -> bool:
    return not c


class MultiPoly:
    __slots__ = ("variables", "terms")

    def __init__(self, variables: Iterable[str], terms: Mapping[tuple, object] | None = None):
        self.variables = tuple(variables)
        n = len(self.variables)
        clean = {}
        if terms:
            for exps, c in terms.items():
                exps = tuple(exps)
                if len(exps) != n:
                    raise ValueError(
                        f"exponent vector {exps} has length {len(exps)}, expected {n}"
                    )
                if any(e < 0 for e in exps):
                    raise ValueError(f"negative exponent in {exps}")
                if not _is_zero(c):
                    prev = clean.get(exps)
                    c = c if prev is None else prev + c
                    if _is_zero(c):
                        clean.pop(exps, None)
                    else:
                        clean[exps] = c
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(variables: Iterable[str]) -> "MultiPoly":
        return MultiPoly(variables, {})

    @staticmethod
    def constant(variables: Iterable[str], value) -> "MultiPoly":
        variables = tuple(variables)
        value = qq(value) if isinstance(value, (int, str)) else value
        return MultiPoly(variables, {(0,) * len(variables): value})

    @staticmethod
    def variable(variables: Iterable[str], name: str) -> "MultiPoly":
        variables = tuple(variables)
        i = variables.index(name)
        exps = tuple(1 if j == i else 0 for j in range(len(variables)))
        return MultiPoly(variables, {exps: Fraction(1)})

    @staticmethod
    def monomial(variables: Iterable[str], exps: tuple, coeff=Fraction(1)) -> "MultiPoly":
        return MultiPoly(variables, {tuple(exps): coeff})

    # -- basic queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        zero = (0,) * len(self.variables)
        return self.terms.get(zero, Fraction(0))

    def total_degree(self) -> int:
        """Total degree; the zero polynomial reports -1."""
        if not self.terms:
            return -1
        return max(sum(exps) for exps in self.terms)

    def degree_in(self, name: str) -> int:
        if not self.terms:
            return -1
        i = self.variables.index(name)
        return max(exps[i] for exps in self.terms)

    def coefficient(self, exps: tuple):
        return self.terms.get(tuple(exps), Fraction(0))

    def sorted_terms(self):
        """Terms in descending graded lexicographic order."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    # -- arithmetic ----------------------------------------------------------

    def _check_compatible(self, other: "MultiPoly"):
        if self.variables != other.variables:
            raise ValueError(
                f"variable mismatch: {self.variables} vs {other.variables}"
            )

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.variables, other)
        self._check_compatible(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            s = out.get(exps)
            s = c if s is None else s + c
            if _is_zero(s):
                out.pop(exps, None)
            else:
                out[exps] = s
        p = MultiPoly.__new__(MultiPoly)
        p.variables = self.variables
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = MultiPoly.__new__(MultiPoly)
        p.variables = self.variables
        p.terms = {exps: -c for exps, c in self.terms.items()}
        return p

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.variables, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if _is_zero(other):
                return MultiPoly.zero(self.variables)
            p = MultiPoly.__new__(MultiPoly)
            p.variables = self.variables
            p.terms = {exps: c * other for exps, c in self.terms.items()}
            return p
        self._check_compatible(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(exps)
                s = c1 * c2 if s is None else s + c1 * c2
                if _is_zero(s):
                    out.pop(exps, None)
                else:
                    out[exps] = s
        p = MultiPoly.__new__(MultiPoly)
        p.variables = self.variables
        p.terms = out
        return p

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.constant(self.variables, Fraction(1))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    # -- evaluation and substitution ------------------------------------------

    def eval(self, point):
        """Evaluate at a full point (one scalar per variable, in order)."""
        point = list(point)
        if len(point) != len(self.variables):
            raise ValueError(
                f"point has {len(point)} coordinates, expected {len(self.variables)}"
            )
        total = None
        for exps, c in self.terms.items():
            term = c
            for x, e in zip(point, exps):
                if e:
                    term = term * x**e
            total = term if total is None else total + term
        return Fraction(0) if total is None else total

    def eval_partial(self, assignment: Mapping[str, object]) -> "MultiPoly":
        """Substitute scalars for a subset of variables; they stay in the list."""
        idx = {self.variables.index(name): val for name, val in assignment.items()}
        out = {}
        for exps, c in self.terms.items():
            factor = c
            new_exps = list(exps)
            for i, val in idx.items():
                if exps[i]:
                    factor = factor * val ** exps[i]
                new_exps[i] = 0
            key = tuple(new_exps)
            s = out.get(key)
            s = factor if s is None else s + factor
            if _is_zero(s):
                out.pop(key, None)
            else:
                out[key] = s
        p = MultiPoly.__new__(MultiPoly)
        p.variables = self.variables
        p.terms = out
        return p

    def substitute(self, name: str, replacement: "MultiPoly") -> "MultiPoly":
        """Replace a variable by a polynomial over the same variable list."""
        self._check_compatible(replacement)
        i = self.variables.index(name)
        result = MultiPoly.zero(self.variables)
        powers = {0: MultiPoly.constant(self.variables, Fraction(1))}
        for exps, c in self.sorted_terms():
            e = exps[i]
            if e not in powers:
                powers[e] = replacement**e
            reduced = tuple(0 if j == i else x for j, x in enumerate(exps))
            result = result + powers[e] * MultiPoly(self.variables, {reduced: c})
        return result

    # -- structural helpers ----------------------------------------------------

    def with_variables(self, variables: Iterable[str]) -> "MultiPoly":
        """Re-express over a different variable list (must cover all used names)."""
        variables = tuple(variables)
        pos = {name: j for j, name in enumerate(variables)}
        out = {}
        for exps, c in self.terms.items():
            new = [0] * len(variables)
            for name, e in zip(self.variables, exps):
                if e:
                    if name not in pos:
                        raise ValueError(f"variable {name} not in target list")
                    new[pos[name]] = e
            out[tuple(new)] = c
        return MultiPoly(variables, out)

    def used_variables(self) -> set:
        used = set()
        for exps in self.terms:
            for name, e in zip(self.variables, exps):
                if e:
                    used.add(name)
        return used

    def as_univariate_in(self, name: str) -> list:
        """Coefficient list (ascending) in one variable; entries are MultiPoly.

        The returned coefficients keep the full variable list with the chosen
        variable's exponent set to zero.
        """
        i = self.variables.index(name)
        deg = self.degree_in(name)
        coeffs = [MultiPoly.zero(self.variables) for _ in range(max(deg, 0) + 1)]
        for exps, c in self.terms.items():
            e = exps[i]
            rest = tuple(0 if j == i else x for j, x in enumerate(exps))
            coeffs[e] = coeffs[e] + MultiPoly(self.variables, {rest: c})
        while len(coeffs) > 1 and coeffs[-1].is_zero():
            coeffs.pop()
        return coeffs

    def content_and_primitive(self):
        """Positive rational content and the primitive integer-coefficient part.

        Returns (c, p) with self == c * p, p having integer coefficients with
        gcd 1 and the graded-lex leading coefficient kept sign-faithful.
        """
        if not self.terms:
            return Fraction(0), self
        from math import gcd, lcm

        den = lcm(*(qq(c).denominator for c in self.terms.values()))
        nums = [qq(c).numerator * (den // qq(c).denominator) for c in self.terms.values()]
        g = 0
        for nval in nums:
            g = gcd(g, abs(nval))
        content = Fraction(g, den)
        p = MultiPoly.__new__(MultiPoly)
        p.variables = self.variables
        p.terms = {exps: qq(c) / content for exps, c in self.terms.items()}
        return content, p

    def sign_canonical(self) -> "MultiPoly":
        """Primitive integer form with positive graded-lex leading coefficient."""
        if self.is_zero():
            return self
        _, prim = self.content_and_primitive()
        lead = prim.sorted_terms()[0][1]
        return -prim if lead < 0 else prim

    def derivative(self, name: str) -> "MultiPoly":
        i = self.variables.index(name)
        out = {}
        for exps, c in self.terms.items():
            e = exps[i]
            if e:
                new = tuple(x - 1 if j == i else x for j, x in enumerate(exps))
                out[new] = out.get(new, Fraction(0)) + c * e
        return MultiPoly(self.variables, out)

    # -- display ---------------------------------------------------------------

    def __repr__(self):
        return f"MultiPoly({self!s})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            factors = []
            for name, e in zip(self.variables, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            c = qq(c) if isinstance(c, (int, Fraction)) else c
            if isinstance(c, Fraction):
                mag = format_q(abs(c))
                neg = c < 0
            else:
                mag = str(c)
                neg = False
            if factors and mag == "1":
                body = "*".join(factors)
            elif factors:
                body = mag + "*" + "*".join(factors)
            else:
                body = mag
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)
