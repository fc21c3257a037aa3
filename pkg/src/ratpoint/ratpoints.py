"""Rational points in convex semi-algebraic sets.

The search: probe the interior through the strict relaxation; sample the set
exactly and test the zero-dimensional rational case; otherwise every rational
point must lie on integer hyperplanes read off a sampled point of the
hyperplane set, so substitute one out and recurse in one fewer variable.

Convexity of the input set is the caller's contract; it is what makes a
``None`` answer mean "no rational point exists".  Where the search observes
something impossible for a convex set it raises ConvexitySuspectError rather
than answering.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ratpoint import formulas as fm
from ratpoint.cad import (
    CADConfig,
    DEFAULT_CONFIG,
    quantifier_elimination,
    rational_open_solve,
    semialgebraic_solve,
)
from ratpoint.errors import ConvexitySuspectError
from ratpoint.multipoly import MultiPoly
from ratpoint.parametrization import RationalParametrization


@dataclass(frozen=True)
class RationalPoint:
    coordinates: tuple

    def __iter__(self):
        return iter(self.coordinates)

    def __len__(self):
        return len(self.coordinates)


def rational_zero_dim_solve(param: RationalParametrization, formula: fm.Formula):
    """The parametrized point when it is rational and satisfies the formula.

    A parametrization with an irreducible minimal polynomial encodes a
    rational point exactly when that polynomial is linear."""
    root = param.rational_root()
    if root is None:
        return None
    if len(param.coords) != len(formula.variables):
        raise ValueError("parametrization dimension does not match the formula")
    point = param.point_at_rational_root(root)
    if fm.evaluate(formula, point):
        return RationalPoint(tuple(point))
    return None


def generate_vectors(param: RationalParametrization):
    """Per-power integer data of a parametrization over variables
    (A_1..A_k, B): pairs (a_i, b_i) with a_i[j] the T^i coefficient of the
    j-th coordinate polynomial and b_i that of the last one."""
    m = param.dimension
    if m < 2:
        raise ValueError("need at least coordinates (A_1, B)")
    k = m - 1
    d = param.degree
    out = []
    for i in range(d):
        a = tuple(
            param.coords[j][i] if i < len(param.coords[j]) else 0 for j in range(k)
        )
        b = param.coords[k][i] if i < len(param.coords[k]) else 0
        out.append((a, int(b)))
    return out


def _hyperplane_substitution(formula: fm.Formula, a, b):
    """Solve a . Y = b for the highest indexed variable with a nonzero
    coefficient and substitute it away.  Returns (reduced formula, r, h) where
    r is the eliminated position and h the substitution polynomial."""
    k = len(a)
    r = max(i for i in range(k) if a[i])
    variables = formula.variables
    h = MultiPoly.constant(variables, Fraction(b, a[r]))
    for j in range(r):
        if a[j]:
            h = h - MultiPoly.variable(variables, variables[j]) * Fraction(a[j], a[r])
    reduced = fm.remove_denominators(fm.substitute(formula, variables[r], h))
    return reduced, r, h


def find_rational_points(formula: fm.Formula, config: CADConfig = DEFAULT_CONFIG):
    """A rational point of the convex set defined by the formula, or None
    exactly when the set contains no rational point.

    Any returned point satisfies the formula unconditionally (convex or not);
    the completeness of a None answer relies on convexity of the set."""
    point, _ = find_rational_points_report(formula, config)
    return point


def find_rational_points_report(formula: fm.Formula, config: CADConfig = DEFAULT_CONFIG):
    """Like find_rational_points but also reports emptiness knowledge:
    returns (point_or_None, status) with status one of "point_found",
    "no_rational_point", "empty_set"."""
    formula = fm.remove_denominators(formula)
    k = len(formula.variables)
    if k == 0:
        raise ValueError("need at least one variable")

    # strict relaxation probe: a full-dimensional set yields a rational point
    probe = rational_open_solve(fm.open_relaxation(formula), config)
    if probe is not None:
        return RationalPoint(tuple(probe)), "point_found"

    params = semialgebraic_solve(formula, config)
    flagged = [p for p in params if p.flagged]
    if not flagged:
        return None, "empty_set"

    for param in flagged:
        hit = rational_zero_dim_solve(param, formula)
        if hit is not None:
            return hit, "point_found"
    if k == 1:
        return None, "no_rational_point"

    reduced, r, h = _descend_through_hyperplane(formula, config)
    if reduced is None:
        return None, "no_rational_point"
    sub_point, _ = find_rational_points_report(reduced, config)
    if sub_point is None:
        return None, "no_rational_point"
    partial = list(sub_point.coordinates)
    lifted = partial[:r] + [None] + partial[r:]
    coord_r = h.eval([Fraction(0) if c is None else c for c in lifted])
    lifted[r] = coord_r
    if fm.evaluate(formula, lifted):
        return RationalPoint(tuple(lifted)), "point_found"
    raise ConvexitySuspectError(
        "a lifted rational point failed membership; the input set cannot be convex"
    )


def _descend_through_hyperplane(formula: fm.Formula, config: CADConfig):
    """Steps of the hyperplane descent: build the set of hyperplanes
    containing the input set, eliminate the quantifier, sample it, extract an
    integer hyperplane, and substitute it into the formula.

    Returns (reduced formula, r, h), or (None, None, None) when the first
    satisfiable elimination branch yields no usable hyperplane.  Raises
    ConvexitySuspectError when no hyperplane contains the set at all, which
    is impossible for a nonempty convex set with empty interior probe."""
    k = len(formula.variables)
    a_names = tuple(f"_a{i + 1}" for i in range(k))
    b_name = "_b"
    all_vars = a_names + (b_name,) + formula.variables
    matrix_vars = all_vars
    phi = fm.Formula(
        matrix_vars,
        _embed(formula.root, formula.variables, matrix_vars),
    )
    dot = MultiPoly.zero(matrix_vars)
    for i, nm in enumerate(a_names):
        dot = dot + MultiPoly.variable(matrix_vars, nm) * MultiPoly.variable(
            matrix_vars, formula.variables[i]
        )
    dot = dot - MultiPoly.variable(matrix_vars, b_name)
    matrix = fm.Formula(
        matrix_vars, fm.Or((fm.Not(phi.root), fm.Atom(dot, fm.EQ)))
    )
    qf = fm.QuantifiedFormula(blocks=(("forall", formula.variables),), matrix=matrix)
    branches = quantifier_elimination(qf, config)

    # the hyperplane normal must be nonzero; the condition is free of the
    # quantified variables so it is conjoined after elimination
    free_vars = a_names + (b_name,)
    nonzero = MultiPoly.zero(free_vars)
    for nm in a_names:
        v = MultiPoly.variable(free_vars, nm)
        nonzero = nonzero + v * v
    found = None
    for branch in branches:
        candidate = fm.Formula(
            free_vars, fm.And((branch.root, fm.Atom(nonzero, fm.GT)))
        )
        params = semialgebraic_solve(candidate, config)
        params = [p for p in params if p.flagged]
        if params:
            found = params[0]
            break
    if found is None:
        raise ConvexitySuspectError(
            "no hyperplane contains the set; a convex set with no interior "
            "point and nonempty samples always lies in one"
        )
    for a, b in generate_vectors(found):
        if any(a):
            reduced, r, h = _hyperplane_substitution(formula, a, b)
            return reduced, r, h
    return None, None, None


def _embed(node, old_vars, new_vars):
    def fn(atom: fm.Atom):
        return fm.Atom(atom.poly.with_variables(new_vars), atom.rel)

    return fm._map_atoms(node, fn)
