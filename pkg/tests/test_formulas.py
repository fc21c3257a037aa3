import random
from fractions import Fraction

import pytest

from ratpoint import formulas as fm
from ratpoint.multipoly import MultiPoly
from ratpoint.parsing import parse_formula, parse_polynomial


def F(text):
    return parse_formula(text)


def test_open_relaxation_examples():
    f = F("(>= y 0)")
    g = fm.open_relaxation(f)
    assert fm.evaluate(g, [Fraction(1)]) and not fm.evaluate(g, [Fraction(0)])

    f = F("(= y 0)")
    g = fm.open_relaxation(f)
    assert g.root is fm.FALSE

    f = F("(and (<= (^ y 2) 2) (>= y 0))")
    g = fm.open_relaxation(f)
    assert fm.evaluate(g, [Fraction(1)])
    assert not fm.evaluate(g, [Fraction(0)])


def test_open_relaxation_under_negation():
    f = F("(not (>= y 0))")
    g = fm.open_relaxation(f)
    # the negation flips to y < 0, already strict and open
    assert fm.evaluate(g, [Fraction(-1)])
    assert not fm.evaluate(g, [Fraction(0)])
    assert not fm.evaluate(g, [Fraction(1)])


def test_open_relaxation_is_subset():
    rng = random.Random(31)
    texts = [
        "(and (<= (+ (^ y1 2) (^ y2 2)) 2) (>= y1 0))",
        "(or (= y1 y2) (> (+ y1 y2) 1))",
        "(not (and (>= y1 0) (<= y2 1)))",
        "(and (!= y1 0) (<= (* y1 y2) 3))",
    ]
    for text in texts:
        f = F(text)
        g = fm.open_relaxation(f)
        for _ in range(200):
            pt = [Fraction(rng.randint(-8, 8), rng.randint(1, 5)) for _ in f.variables]
            if fm.evaluate(g, pt):
                assert fm.evaluate(f, pt)


def test_remove_denominators_examples():
    vs = ("y",)
    y = MultiPoly.variable(vs, "y")
    half_y = y * Fraction(1, 2) - Fraction(1, 3)
    f = fm.Formula(vs, fm.Atom(half_y, fm.GE))
    g = fm.remove_denominators(f)
    a = next(fm.iter_atoms(g.root))
    assert a.poly == 3 * y - 2
    # sign never flips
    m = fm.Formula(vs, fm.Atom(y * Fraction(-1, 4), fm.GT))
    gm = fm.remove_denominators(m)
    am = next(fm.iter_atoms(gm.root))
    assert am.poly == -y
    rng = random.Random(32)
    for _ in range(100):
        pt = [Fraction(rng.randint(-9, 9), rng.randint(1, 9))]
        assert fm.evaluate(f, pt) == fm.evaluate(g, pt)
        assert fm.evaluate(m, pt) == fm.evaluate(gm, pt)


def test_substitute_examples():
    f = F("(>= (+ y1 y2) 0)")
    h = parse_polynomial("1 - y1", list(f.variables))
    g = fm.substitute(f, "y2", h)
    assert g.variables == ("y1",)
    assert g.root == fm.Atom(MultiPoly.constant(("y1",), 1), fm.GE)

    f2 = F("(= (* y1 y2) 1)")
    y2 = MultiPoly.variable(f2.variables, "y2")
    g2 = fm.substitute(f2, "y1", y2)
    a = next(fm.iter_atoms(g2.root))
    yy = MultiPoly.variable(("y2",), "y2")
    assert a.poly == yy * yy - 1


def test_substitute_rejects_self_reference():
    f = F("(>= y1 0)")
    with pytest.raises(ValueError):
        fm.substitute(f, "y1", MultiPoly.variable(f.variables, "y1"))


def test_substitute_then_evaluate_matches_lifted_point():
    rng = random.Random(33)
    f = F("(and (<= (+ (^ y1 2) (* y1 y2)) 3) (> (- y2 y1) 0))")
    for _ in range(100):
        # substitute y2 := 2 - y1
        h = parse_polynomial("2 - y1", list(f.variables))
        g = fm.substitute(f, "y2", h)
        q = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        lifted = [q, h.eval([q, Fraction(0)])]
        assert fm.evaluate(g, [q]) == fm.evaluate(f, lifted)


def test_evaluate_examples():
    f = F("(<= (^ y 2) 2)")
    assert fm.evaluate(f, [Fraction(1)])
    assert not fm.evaluate(f, [Fraction(3, 2)])
    g = F("(and (>= (+ (* 3 y1) (* 4 y2)) 5) (<= (+ (^ y1 2) (^ y2 2)) 1))")
    assert fm.evaluate(g, [Fraction(3, 5), Fraction(4, 5)])


def test_evaluate_dimension_mismatch():
    f = F("(<= (^ y 2) 2)")
    with pytest.raises(ValueError):
        fm.evaluate(f, [Fraction(1), Fraction(2)])


def test_quantified_formula_validation():
    f = F("(vars a y) (> (+ (^ y 2) a) 0)")
    qf = fm.QuantifiedFormula(blocks=(("forall", ("y",)),), matrix=f)
    assert qf.free_variables == ("a",)
    with pytest.raises(ValueError):
        fm.QuantifiedFormula(blocks=(("forall", ("a", "a")),), matrix=f)
