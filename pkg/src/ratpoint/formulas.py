"""Quantifier-free formulas over polynomial sign atoms, and quantified wrappers.

A formula owns an ordered variable list; every atom polynomial is expressed
over that full list.  Trees are immutable; transformations return new
formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ratpoint.multipoly import MultiPoly
from ratpoint.rationals import qsign

EQ, NE, LT, GT, LE, GE = "=", "!=", "<", ">", "<=", ">="
RELATIONS = (EQ, NE, LT, GT, LE, GE)

_NEGATION = {EQ: NE, NE: EQ, LT: GE, GE: LT, GT: LE, LE: GT}


@dataclass(frozen=True)
class Atom:
    poly: MultiPoly
    rel: str

    def __post_init__(self):
        if self.rel not in RELATIONS:
            raise ValueError(f"unknown relation {self.rel!r}")


@dataclass(frozen=True)
class And:
    children: tuple


@dataclass(frozen=True)
class Or:
    children: tuple


@dataclass(frozen=True)
class Not:
    child: object


@dataclass(frozen=True)
class BoolConst:
    value: bool


TRUE = BoolConst(True)
FALSE = BoolConst(False)


@dataclass(frozen=True)
class Formula:
    variables: tuple
    root: object

    def __post_init__(self):
        for atom in iter_atoms(self.root):
            if atom.poly.variables != self.variables:
                raise ValueError("atom polynomial over a different variable list")


def atom(poly: MultiPoly, rel: str) -> Atom:
    return Atom(poly, rel)


def land(*children) -> object:
    return And(tuple(children))


def lor(*children) -> object:
    return Or(tuple(children))


def lnot(child) -> object:
    return Not(child)


def iter_atoms(node):
    if isinstance(node, Atom):
        yield node
    elif isinstance(node, (And, Or)):
        for c in node.children:
            yield from iter_atoms(c)
    elif isinstance(node, Not):
        yield from iter_atoms(node.child)


def _map_atoms(node, fn):
    if isinstance(node, Atom):
        return fn(node)
    if isinstance(node, And):
        return And(tuple(_map_atoms(c, fn) for c in node.children))
    if isinstance(node, Or):
        return Or(tuple(_map_atoms(c, fn) for c in node.children))
    if isinstance(node, Not):
        return Not(_map_atoms(node.child, fn))
    return node


def _sign_of(x) -> int:
    if isinstance(x, (int, Fraction)):
        return qsign(x)
    return x.sign()


def _atom_truth(rel: str, sign: int) -> bool:
    if rel == EQ:
        return sign == 0
    if rel == NE:
        return sign != 0
    if rel == LT:
        return sign < 0
    if rel == GT:
        return sign > 0
    if rel == LE:
        return sign <= 0
    return sign >= 0


def _fold_atom(a: Atom):
    """Constant atoms become boolean constants; others get primitive integer
    coefficients (positive scaling keeps every relation's truth)."""
    if a.poly.is_constant():
        return TRUE if _atom_truth(a.rel, _sign_of(a.poly.constant_value())) else FALSE
    _, prim = a.poly.content_and_primitive()
    return Atom(prim, a.rel)


def normalize(f: Formula) -> Formula:
    """Scale every atom to integer coefficients with content one and fold
    constant atoms to boolean constants."""
    return Formula(f.variables, _map_atoms(f.root, _fold_atom))


remove_denominators = normalize


def nnf(node):
    """Push negations onto atoms (which absorb them by flipping the relation)."""

    def walk(n, neg):
        if isinstance(n, Atom):
            return Atom(n.poly, _NEGATION[n.rel]) if neg else n
        if isinstance(n, BoolConst):
            return BoolConst(not n.value) if neg else n
        if isinstance(n, Not):
            return walk(n.child, not neg)
        if isinstance(n, And):
            kids = tuple(walk(c, neg) for c in n.children)
            return Or(kids) if neg else And(kids)
        if isinstance(n, Or):
            kids = tuple(walk(c, neg) for c in n.children)
            return And(kids) if neg else Or(kids)
        raise TypeError(f"unknown node {n!r}")

    return walk(node, False)


def open_relaxation(f: Formula) -> Formula:
    """Strictify: on the negation normal form, weak atoms become strict and
    equations become false, so the result defines an open subset of the
    original set."""

    def relax(a: Atom):
        if a.rel == GE:
            return Atom(a.poly, GT)
        if a.rel == LE:
            return Atom(a.poly, LT)
        if a.rel == EQ:
            return FALSE
        return a

    return normalize(Formula(f.variables, _map_atoms(nnf(f.root), relax)))


def substitute(f: Formula, name: str, h: MultiPoly) -> Formula:
    """Replace a variable by a polynomial free of it; the variable disappears
    from the formula's variable list."""
    if name not in f.variables:
        raise ValueError(f"variable {name} not declared")
    h = h.with_variables(f.variables)
    if name in h.used_variables():
        raise ValueError(f"substitution polynomial mentions {name}")
    new_vars = tuple(v for v in f.variables if v != name)

    def subst(a: Atom):
        p = a.poly.substitute(name, h).with_variables(new_vars)
        return Atom(p, a.rel)

    return Formula(new_vars, _map_atoms(f.root, subst))


def evaluate(f: Formula, point) -> bool:
    """Exact truth value at a point (one exact scalar per variable)."""
    point = list(point)
    if len(point) != len(f.variables):
        raise ValueError(
            f"point has {len(point)} coordinates, formula has {len(f.variables)} variables"
        )

    def walk(n):
        if isinstance(n, Atom):
            return _atom_truth(n.rel, _sign_of(n.poly.eval(point)))
        if isinstance(n, BoolConst):
            return n.value
        if isinstance(n, Not):
            return not walk(n.child)
        if isinstance(n, And):
            return all(walk(c) for c in n.children)
        if isinstance(n, Or):
            return any(walk(c) for c in n.children)
        raise TypeError(f"unknown node {n!r}")

    return walk(f.root)


def evaluate_signs(f: Formula, sign_fn) -> bool:
    """Truth value given an exact sign oracle for atom polynomials."""

    def walk(n):
        if isinstance(n, Atom):
            return _atom_truth(n.rel, sign_fn(n.poly))
        if isinstance(n, BoolConst):
            return n.value
        if isinstance(n, Not):
            return not walk(n.child)
        if isinstance(n, And):
            return all(walk(c) for c in n.children)
        if isinstance(n, Or):
            return any(walk(c) for c in n.children)
        raise TypeError(f"unknown node {n!r}")

    return walk(f.root)


def atom_polynomials(f: Formula) -> list:
    """Distinct atom polynomials in first-appearance order."""
    seen = []
    for a in iter_atoms(f.root):
        if a.poly not in seen:
            seen.append(a.poly)
    return seen


def strict_atoms_only(f: Formula) -> bool:
    return all(a.rel in (LT, GT, NE) for a in iter_atoms(nnf(f.root)))


@dataclass(frozen=True)
class QuantifiedFormula:
    """Prenex formula: quantifier blocks over a quantifier-free matrix.

    The matrix's variable list is the free variables followed by the
    quantified blocks in order.
    """

    blocks: tuple  # of (quantifier, names) with quantifier in {"exists", "forall"}
    matrix: Formula

    def __post_init__(self):
        seen = set()
        for q, names in self.blocks:
            if q not in ("exists", "forall"):
                raise ValueError(f"unknown quantifier {q!r}")
            for nm in names:
                if nm in seen:
                    raise ValueError(f"variable {nm} quantified twice")
                seen.add(nm)
        qvars = [nm for _, names in self.blocks for nm in names]
        if tuple(self.matrix.variables[len(self.matrix.variables) - len(qvars):]) != tuple(qvars):
            raise ValueError("matrix variables must end with the quantified blocks in order")

    @property
    def free_variables(self) -> tuple:
        nq = sum(len(names) for _, names in self.blocks)
        return self.matrix.variables[: len(self.matrix.variables) - nq]

    @property
    def quantified_variables(self) -> tuple:
        nq = sum(len(names) for _, names in self.blocks)
        return self.matrix.variables[len(self.matrix.variables) - nq:]
