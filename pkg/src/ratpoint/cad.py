"""Cylindrical algebraic decomposition at desk scale.

Provides the three semi-algebraic primitives everything else consumes:
sampling a set with exact algebraic points (``semialgebraic_solve``), finding
a rational point of a set given by strict inequalities
(``rational_open_solve``), and quantifier elimination
(``quantifier_elimination``).

Projection is Hong's reduced operator; lifting isolates stack roots exactly,
extending the sample's number field when a section coordinate is irrational.
All budgets are explicit and exceeding one raises, never misanswers.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import lcm

from ratpoint import formulas as fm
from ratpoint import unipoly as up
from ratpoint.errors import BudgetExhaustedError
from ratpoint.multipoly import MultiPoly
from ratpoint.numberfield import NFElement, extend_field, field_isolate_roots, scalar_sign
from ratpoint.parametrization import (
    RationalParametrization,
    parametrization_from_rational_point,
)
from ratpoint.prs import lift_coeffs, mpoly_squarefree_part, psc_list
from ratpoint.realroots import AlgebraicNumber, sign_at


@dataclass
class CADConfig:
    max_cells: int = 10**6
    max_projection_degree: int = 64
    max_variables: int = 8
    # projection polynomials whose coefficients outgrow this many bits abort
    # the decomposition; grinding past it would not finish at desk scale
    max_coefficient_bits: int = 4096


DEFAULT_CONFIG = CADConfig()


# -- projection -------------------------------------------------------------------


def _reducta(coeffs):
    """All truncations of the leading term chain, highest degree first."""
    out = []
    cur = list(coeffs)
    while cur:
        out.append(list(cur))
        cur = cur[:-1]
        while cur and cur[-1].is_zero():
            cur.pop()
    return out


def _coefficient_bits(p: MultiPoly) -> int:
    out = 0
    for c in p.terms.values():
        c = Fraction(c)
        out = max(out, abs(c.numerator).bit_length() + c.denominator.bit_length())
    return out


def _normalize_set(polys, config: CADConfig):
    seen = {}
    for p in polys:
        if p.is_zero() or p.is_constant():
            continue
        if p.total_degree() > config.max_projection_degree:
            raise BudgetExhaustedError(
                f"projection degree {p.total_degree()} exceeds budget "
                f"{config.max_projection_degree}"
            )
        bits = _coefficient_bits(p)
        if bits > config.max_coefficient_bits:
            raise BudgetExhaustedError(
                f"projection coefficients at {bits} bits exceed budget "
                f"{config.max_coefficient_bits}"
            )
        p = mpoly_squarefree_part(p)
        if p.is_constant():
            continue
        seen.setdefault(p, None)
    return list(seen.keys())


def hong_projection(polys, var: str, config: CADConfig):
    """Projection polynomials (free of ``var``) whose sign-invariant
    decomposition lifts to one for the given ``var``-using polynomials."""
    with_var = [lift_coeffs(p, var) for p in polys]
    out = []
    red_sets = []
    for f in with_var:
        reds = _reducta(f)
        red_sets.append(reds)
        for g in reds:
            if len(g) >= 2:
                out.append(g[-1])  # leading coefficient
                dg = up.strip([c * i for i, c in enumerate(g)][1:])
                if dg:
                    out.extend(psc_list(g, dg))
            else:
                out.append(g[0])
    for i in range(len(with_var)):
        for j in range(i + 1, len(with_var)):
            for g in red_sets[i]:
                out.extend(psc_list(g, with_var[j]))
    return _normalize_set(out, config)


# -- lifting ------------------------------------------------------------------------


@dataclass
class Cell:
    level: int
    field: object  # NumberField or None
    coords: list
    signs: tuple  # signs of this level's projection polynomials at the sample
    parent: object = None
    kind: str = "sector"

    def sign_vector(self, upto_level: int):
        chain = []
        node = self
        while node is not None and node.level > 0:
            if node.level <= upto_level:
                chain.append(node.signs)
            node = node.parent
        return tuple(x for signs in reversed(chain) for x in signs)


class CADRun:
    """One decomposition: projection sets plus a lifting driver with budgets."""

    def __init__(self, polys, variables, config: CADConfig = DEFAULT_CONFIG):
        self.variables = tuple(variables)
        self.config = config
        n = len(self.variables)
        if n > config.max_variables:
            raise BudgetExhaustedError(
                f"{n} variables exceed the budget {config.max_variables}"
            )
        if n == 0:
            raise ValueError("need at least one variable")
        polys = [p.with_variables(self.variables) for p in polys]
        work = _normalize_set(polys, config)
        levels = [[] for _ in range(n + 1)]
        for j in range(n, 0, -1):
            var = self.variables[j - 1]
            here = [p for p in work if var in p.used_variables()]
            rest = [p for p in work if var not in p.used_variables()]
            levels[j] = here
            if j > 1:
                work = _normalize_set(
                    rest + hong_projection(here, var, config), config
                )
        self.levels = levels
        self.cells_created = 0

    def _charge(self):
        self.cells_created += 1
        if self.cells_created > self.config.max_cells:
            raise BudgetExhaustedError(
                f"cell budget {self.config.max_cells} exhausted"
            )

    def root_cell(self) -> Cell:
        return Cell(level=0, field=None, coords=[], signs=())

    def stack_over(self, cell: Cell) -> list:
        """Children of a cell: alternating sectors and sections along the next
        variable, ordered bottom to top."""
        level = cell.level + 1
        var = self.variables[level - 1]
        assignment = dict(zip(self.variables[: cell.level], cell.coords))
        subbed = []
        for p in self.levels[level]:
            q = p.eval_partial(assignment) if assignment else p
            coeffs = [c.constant_value() for c in q.as_univariate_in(var)]
            coeffs = up.strip(list(coeffs))
            subbed.append(coeffs)
        product = [Fraction(1)]
        for coeffs in subbed:
            if len(coeffs) >= 2:
                product = up.mul(product, coeffs)
        roots = (
            field_isolate_roots(cell.field, product) if len(product) >= 2 else []
        )

        def child_signs(field, coords_new, convert):
            signs = []
            for coeffs in subbed:
                if not coeffs:
                    signs.append(0)
                    continue
                conv = [convert(c) for c in coeffs]
                val = up.eval_at(conv, coords_new[-1])
                signs.append(scalar_sign(val))
            return tuple(signs)

        children = []
        identity = lambda c: c  # noqa: E731

        def add_sector(value: Fraction):
            self._charge()
            coords = cell.coords + [value]
            children.append(
                Cell(
                    level=level,
                    field=cell.field,
                    coords=coords,
                    signs=child_signs(cell.field, coords, identity),
                    parent=cell,
                    kind="sector",
                )
            )

        def add_section(root):
            self._charge()
            new_field, convert, coord = extend_field(cell.field, root)
            coords = [convert(c) for c in cell.coords] + [coord]
            children.append(
                Cell(
                    level=level,
                    field=new_field,
                    coords=coords,
                    signs=child_signs(new_field, coords, convert),
                    parent=cell,
                    kind="section",
                )
            )

        if not roots:
            add_sector(Fraction(0))
            return children
        first_lo = roots[0].interval[0] if roots[0].value is None else roots[0].value
        add_sector(first_lo - 1)
        for i, root in enumerate(roots):
            add_section(root)
            if i + 1 < len(roots):
                gap_lo = root.interval[1]
                nxt = roots[i + 1]
                gap_hi = nxt.interval[0]
                add_sector((gap_lo + gap_hi) / 2)
        last = roots[-1]
        last_hi = last.interval[1] if last.value is None else last.value
        add_sector(last_hi + 1)
        return children

    def leaves(self, upto_level=None):
        """All cells at the requested level, depth-first, deterministic."""
        target = len(self.variables) if upto_level is None else upto_level
        out = []
        stack = [self.root_cell()]
        while stack:
            cell = stack.pop()
            if cell.level == target:
                out.append(cell)
                continue
            for child in reversed(self.stack_over(cell)):
                stack.append(child)
        return out


# -- sample points as parametrizations ------------------------------------------------


def _compose_coordinates(poly: MultiPoly, coord_polys, q: int):
    """Univariate coefficients of poly(G_1(T)/q, ..., G_m(T)/q)."""
    acc = []
    for exps, c in poly.sorted_terms():
        term = [Fraction(c)]
        for g, e in zip(coord_polys, exps):
            if e:
                scaled = [Fraction(x, q) for x in g]
                term = up.mul(term, up.pow_(scaled, e))
        acc = up.add(acc, term)
    return acc


def _formula_true_at_root(formula: fm.Formula, param_coords, q, minpoly, alg: AlgebraicNumber, cache):
    def sign_fn(poly):
        key = poly
        if key not in cache:
            composed = _compose_coordinates(poly, param_coords, q)
            _, composed = up.divmod_exact(composed, [Fraction(c) for c in minpoly])
            cache[key] = composed
        return sign_at(cache[key], alg)

    return fm.evaluate_signs(formula, sign_fn)


def parametrization_from_cell(cell: Cell, formula: fm.Formula):
    """Constant-denominator encoding of a sample cell, with every real root of
    the minimal polynomial flagged exactly when its point satisfies the
    formula."""
    if cell.field is None:
        point = [Fraction(c) for c in cell.coords]
        return parametrization_from_rational_point(point, True)
    minpoly = list(cell.field.minpoly_int)
    reps = []
    for c in cell.coords:
        if isinstance(c, NFElement):
            reps.append(list(c.rep))
        else:
            reps.append([Fraction(c)] if c else [])
    q = 1
    for rep in reps:
        for x in rep:
            q = lcm(q, Fraction(x).denominator)
    coords = tuple(tuple(int(x * q) for x in rep) for rep in reps)
    flagged = []
    cache = {}
    for lo, hi in up.isolate_roots(minpoly):
        alg = AlgebraicNumber.from_minpoly_interval(minpoly, lo, hi)
        if _formula_true_at_root(formula, coords, q, minpoly, alg, cache):
            flagged.append((lo, hi))
    return RationalParametrization(
        minpoly=tuple(minpoly), q=q, coords=coords, flagged=tuple(sorted(flagged))
    )


# -- public operations ----------------------------------------------------------------


def semialgebraic_solve(formula: fm.Formula, config: CADConfig = DEFAULT_CONFIG):
    """Exact sample points meeting every connected component of the solution
    set, as constant-denominator parametrizations with flagged real roots.

    Returns a list (possibly empty: the set is empty if and only if no
    parametrization carries a flagged root, and only satisfied samples are
    returned at all)."""
    if not formula.variables:
        raise ValueError("need at least one variable")
    formula = fm.normalize(formula)
    polys = [p for p in fm.atom_polynomials(formula) if not p.is_constant()]
    run = CADRun(polys, formula.variables, config)
    out = []
    seen = set()
    for leaf in run.leaves():
        if not fm.evaluate(formula, leaf.coords):
            continue
        param = parametrization_from_cell(leaf, formula)
        key = (param.minpoly, param.q, param.coords)
        if key in seen:
            continue
        seen.add(key)
        out.append(param)
    return out


def rational_open_solve(formula: fm.Formula, config: CADConfig = DEFAULT_CONFIG):
    """A rational point satisfying a strict-inequality formula, or None when
    the (open) solution set is empty."""
    if not fm.strict_atoms_only(formula):
        raise ValueError("rational_open_solve requires strict atoms only")
    if not formula.variables:
        raise ValueError("need at least one variable")
    formula = fm.normalize(formula)
    polys = [p for p in fm.atom_polynomials(formula) if not p.is_constant()]
    run = CADRun(polys, formula.variables, config)
    for leaf in run.leaves():
        if leaf.field is not None:
            continue
        if all(isinstance(c, Fraction) for c in leaf.coords) and fm.evaluate(
            formula, leaf.coords
        ):
            return [Fraction(c) for c in leaf.coords]
    return None


def _block_of(qf: fm.QuantifiedFormula, level_index: int) -> str:
    """Quantifier kind governing matrix variable at position level_index."""
    free = len(qf.free_variables)
    idx = level_index - free
    for kind, names in qf.blocks:
        if idx < len(names):
            return kind
        idx -= len(names)
    raise IndexError("level is not quantified")


def decide_quantified(qf: fm.QuantifiedFormula, config: CADConfig = DEFAULT_CONFIG, _run=None, _start_cell=None):
    """Truth value of a fully quantified sentence (no free variables)."""
    matrix = fm.normalize(qf.matrix)
    if _run is None:
        if qf.free_variables:
            raise ValueError("sentence expected; formula has free variables")
        polys = [p for p in fm.atom_polynomials(matrix) if not p.is_constant()]
        _run = CADRun(polys, matrix.variables, config)
        _start_cell = _run.root_cell()
    n = len(matrix.variables)

    def decide(cell):
        if cell.level == n:
            return fm.evaluate(matrix, cell.coords)
        kind = _block_of(qf, cell.level)
        children = _run.stack_over(cell)
        if kind == "exists":
            return any(decide(ch) for ch in children)
        return all(decide(ch) for ch in children)

    return decide(_start_cell)


def quantifier_elimination(qf: fm.QuantifiedFormula, config: CADConfig = DEFAULT_CONFIG):
    """Equivalent quantifier-free description of the free-variable set, as a
    list of conjunctions of atoms (h = 0) or (h > 0).

    The union of the conjunctions' solution sets equals the set defined by the
    quantified formula.  Raises BudgetExhaustedError when budgets do not
    suffice (including the rare case where the decomposition cannot express
    the answer through sign conditions even after augmentation)."""
    free = qf.free_variables
    if not free:
        raise ValueError("use decide_quantified for sentences")
    matrix = fm.normalize(qf.matrix)
    polys = [p for p in fm.atom_polynomials(matrix) if not p.is_constant()]
    extra = []
    for attempt in range(2):
        try:
            return _qe_attempt(qf, matrix, polys + extra, config)
        except _MixedSignGroup:
            if attempt == 1:
                raise BudgetExhaustedError(
                    "sign conditions cannot separate the decomposition; "
                    "augmentation failed"
                )
            # augment with first partial derivatives toward the free variables
            aug = {}
            for p in polys:
                for v in free:
                    d = p.derivative(v)
                    if not d.is_zero() and not d.is_constant():
                        aug.setdefault(d.sign_canonical(), None)
            extra = list(aug.keys())
    raise AssertionError("unreachable")


class _MixedSignGroup(Exception):
    pass


def _qe_attempt(qf, matrix, polys, config):
    free = qf.free_variables
    k = len(free)
    n = len(matrix.variables)
    run = CADRun(polys, matrix.variables, config)

    def decide(cell):
        if cell.level == n:
            return fm.evaluate(matrix, cell.coords)
        kind = _block_of(qf, cell.level)
        children = run.stack_over(cell)
        if kind == "exists":
            return any(decide(ch) for ch in children)
        return all(decide(ch) for ch in children)

    groups = {}
    for cell in run.leaves(upto_level=k):
        vec = cell.sign_vector(k)
        truth = decide(cell)
        if vec in groups and groups[vec] != truth:
            raise _MixedSignGroup()
        groups[vec] = truth

    free_polys = [p for level in range(1, k + 1) for p in run.levels[level]]
    out = []
    for vec in sorted(groups):
        if not groups[vec]:
            continue
        atoms = {}
        for p, s in zip(free_polys, vec):
            p = p.with_variables(free)
            if s == 0:
                a = fm.Atom(p, fm.EQ)
            elif s > 0:
                a = fm.Atom(p, fm.GT)
            else:
                a = fm.Atom(-p, fm.GT)
            atoms.setdefault(a, None)
        root = fm.And(tuple(atoms)) if atoms else fm.TRUE
        out.append(fm.Formula(free, root))
    return out
