import random
from fractions import Fraction

import pytest

from ratpoint import formulas as fm
from ratpoint.errors import GramInfeasibleError, NotPSDMatrixError
from ratpoint.linalg import RationalMatrix, ldlt_psd
from ratpoint.multipoly import MultiPoly
from ratpoint.parsing import parse_polynomial
from ratpoint.polytope import monomials_up_to
from ratpoint.sos import (
    NOT_SOS_OVER_R,
    SOS_OVER_Q,
    SOSCertificate,
    build_gram_space,
    build_psd_formula,
    decide_rational_sos,
    extract_sos,
    rational_total_real_solve,
)


def P(text):
    return parse_polynomial(text)


# -- build_gram_space ------------------------------------------------------------


def test_gram_single_square():
    gs = build_gram_space(P("x^2"))
    assert gs.monomials == ((1,),)
    assert gs.k == 0
    assert gs.m0.get(0, 0) == 1


def test_gram_bi_quartic_family():
    f = P("x^4 + 2*x^2*y^2 + y^4")
    gs = build_gram_space(f)
    assert gs.monomials == ((2, 0), (1, 1), (0, 2))
    assert gs.k == 1
    # symbolic identity: v^T M(Y) v == f for all Y, as a polynomial identity
    _check_gram_identity(gs, f)


def test_gram_motzkin_basis():
    f = P("x^4*y^2 + x^2*y^4 - 3*x^2*y^2 + 1")
    gs = build_gram_space(f)
    assert gs.monomials == ((0, 0), (1, 1), (2, 1), (1, 2))
    assert gs.k == 0
    assert not ldlt_psd(gs.m0).is_psd


def _check_gram_identity(gs, f):
    """Symbolic check: v^T M(Y) v - f vanishes identically in x and Y."""
    vs = gs.variables
    names = tuple(f"y{i+1}" for i in range(gs.k))
    both = vs + names
    mono = [MultiPoly.monomial(both, e + (0,) * gs.k) for e in gs.monomials]
    acc = MultiPoly.zero(both)
    D = gs.dimension
    for i in range(D):
        for j in range(D):
            entry = MultiPoly.constant(both, gs.m0.get(i, j))
            for t in range(gs.k):
                c = gs.basis[t].get(i, j)
                if c:
                    entry = entry + MultiPoly.variable(both, names[t]) * c
            acc = acc + mono[i] * mono[j] * entry
    assert acc == f.with_variables(both)


def test_gram_odd_degree_rejected():
    with pytest.raises(GramInfeasibleError):
        build_gram_space(P("x^3 + 1"))


def test_gram_infeasible_monomial():
    # x*y alone: basis (from half polytope) cannot produce the monomial
    with pytest.raises(GramInfeasibleError):
        build_gram_space(P("x*y"))


def test_gram_unpruned_basis_is_bigger():
    f = P("x^4 + 2*x^2*y^2 + y^4")
    gs_full = build_gram_space(f, prune=False)
    assert len(gs_full.monomials) == len(monomials_up_to(2, 2))
    _check_gram_identity(gs_full, f)


# -- build_psd_formula -------------------------------------------------------------


def test_psd_formula_diag_parameter():
    # family [[Y, 0], [0, 1]] built by hand
    gs_like = build_gram_space(P("x^2 + y^2"))  # just to reuse the type
    from ratpoint.sos import GramSpace

    m0 = RationalMatrix.from_rows([[0, 0], [0, 1]])
    b1 = RationalMatrix.from_rows([[1, 0], [0, 0]])
    gs = GramSpace(variables=("x",), monomials=((1,), (0,)), m0=m0, basis=(b1,))
    psd = build_psd_formula(gs)
    assert fm.evaluate(psd, [Fraction(0)])
    assert fm.evaluate(psd, [Fraction(3)])
    assert not fm.evaluate(psd, [Fraction(-1, 2)])
    assert gs_like is not None


def test_psd_formula_equals_ldlt_on_family():
    f = P("x^4 + 2*x^2*y^2 + y^4")
    gs = build_gram_space(f)
    psd = build_psd_formula(gs)
    rng = random.Random(72)
    inside = outside = 0
    for _ in range(500):
        y = Fraction(rng.randint(-3 * 8, 3 * 8), 8)
        truth = fm.evaluate(psd, [y])
        exact = ldlt_psd(gs.matrix_at([y])).is_psd
        assert truth == exact
        inside += truth
        outside += not truth
    assert inside and outside


def test_psd_formula_family_interval():
    # the bi-quartic family is PSD exactly on a closed interval of length 4
    # in this parametrization (an affine reparametrization of [-1, 1])
    f = P("x^4 + 2*x^2*y^2 + y^4")
    gs = build_gram_space(f)
    psd = build_psd_formula(gs)
    assert fm.evaluate(psd, [Fraction(0)])
    assert fm.evaluate(psd, [Fraction(4)])
    assert fm.evaluate(psd, [Fraction(2)])
    assert not fm.evaluate(psd, [Fraction(-1, 4)])
    assert not fm.evaluate(psd, [Fraction(17, 4)])
    on = [Fraction(num, 4) for num in range(-20, 21) if fm.evaluate(psd, [Fraction(num, 4)])]
    assert on == [Fraction(num, 4) for num in range(0, 17)]


# -- extract_sos ----------------------------------------------------------------------


def test_extract_examples():
    vs = ("x", "y")
    mono = ((1, 0), (0, 1))
    cert = extract_sos(RationalMatrix.from_rows([[2, 1], [1, 2]]), mono, vs)
    expect = P("2*x^2 + 2*x*y + 2*y^2").with_variables(vs)
    assert cert.recompose(vs) == expect
    assert [c for c, _ in cert.terms] == [Fraction(2), Fraction(3, 2)]

    cert2 = extract_sos(RationalMatrix.identity(2), mono, vs)
    assert cert2.recompose(vs) == P("x^2 + y^2").with_variables(vs)

    cert3 = extract_sos(RationalMatrix.from_rows([[1, 1], [1, 1]]), mono, vs)
    assert len(cert3.terms) == 1
    assert cert3.recompose(vs) == P("x^2 + 2*x*y + y^2").with_variables(vs)


def test_extract_rejects_indefinite():
    with pytest.raises(NotPSDMatrixError):
        extract_sos(RationalMatrix.from_rows([[0, 1], [1, 0]]), ((1, 0), (0, 1)), ("x", "y"))


# -- rational_total_real_solve -----------------------------------------------------------


def test_total_real_solve_interval_family():
    gs = build_gram_space(P("x^4 + 2*x^2*y^2 + y^4"))
    pt = rational_total_real_solve(gs)
    assert pt is not None
    assert ldlt_psd(gs.matrix_at(list(pt.coordinates))).is_psd


def test_total_real_solve_k0():
    gs = build_gram_space(P("x^2 + y^2"))
    pt = rational_total_real_solve(gs)
    assert pt is not None and len(pt.coordinates) == 0


# -- decide_rational_sos -------------------------------------------------------------------


def test_decide_trivial_cases():
    d = decide_rational_sos(P("x^2 + y^2"))
    assert d.status == SOS_OVER_Q
    assert d.certificate.recompose(("x", "y")) == P("x^2 + y^2")
    assert decide_rational_sos(P("x^4*y^2 + x^2*y^4 - 3*x^2*y^2 + 1")).status == NOT_SOS_OVER_R
    assert decide_rational_sos(P("x^2 - 1")).status == NOT_SOS_OVER_R


def test_decide_zero_polynomial():
    d = decide_rational_sos(MultiPoly.zero(("x",)))
    assert d.status == SOS_OVER_Q and d.certificate.terms == ()


def test_decide_no_prune_small():
    d = decide_rational_sos(P("x^2 + 2*x + 1"), prune=False)
    assert d.status == SOS_OVER_Q
    assert d.certificate.recompose(("x",)) == P("x^2 + 2*x + 1")


def _nonzero(rng, bound):
    v = 0
    while not v:
        v = rng.randint(-bound, bound)
    return v


def test_round_trip_random_sums_of_squares():
    rng = random.Random(73)
    vs = ("x", "y")
    for _ in range(12):
        f = MultiPoly.zero(vs)
        for _ in range(3):
            c = Fraction(rng.randint(1, 60), rng.randint(1, 60))
            g = MultiPoly.zero(vs)
            for e in monomials_up_to(2, 2):
                g = g + MultiPoly.monomial(vs, e, Fraction(_nonzero(rng, 9)))
            f = f + g * g * c
        d = decide_rational_sos(f)
        assert d.status == SOS_OVER_Q
        assert d.certificate.recompose(vs) == f
        assert all(c > 0 for c, _ in d.certificate.terms)


def test_round_trip_with_linear_squares():
    # degree-1 squares keep the parameter count small; the complete search
    # settles these even though the family is often thin
    rng = random.Random(74)
    vs = ("x", "y")
    for _ in range(8):
        f = MultiPoly.zero(vs)
        for _ in range(2):
            c = Fraction(rng.randint(1, 20), rng.randint(1, 20))
            g = MultiPoly.zero(vs)
            for e in monomials_up_to(2, 1):
                g = g + MultiPoly.monomial(vs, e, Fraction(rng.randint(-5, 5)))
            f = f + g * g * c
        if f.is_zero():
            continue
        d = decide_rational_sos(f)
        assert d.status == SOS_OVER_Q
        assert d.certificate.recompose(vs) == f


def test_thin_family_never_misanswers():
    # a single dense square: the PSD slice has empty interior at six
    # parameters; the search either certifies exactly or stops with a budget
    # error, never answers wrongly
    from ratpoint.errors import BudgetExhaustedError

    g = P("x^2 + x*y + y^2 + x + y + 1")
    f = g * g
    try:
        d = decide_rational_sos(f)
    except BudgetExhaustedError:
        return
    assert d.status == SOS_OVER_Q
    assert d.certificate.recompose(("x", "y")) == f


def test_negative_definite_shifted():
    assert decide_rational_sos(P("-x^4 - 1")).status == NOT_SOS_OVER_R
    # nonnegative but with negative values on a region
    assert decide_rational_sos(P("x^4 - 3*x^2 + 1")).status == NOT_SOS_OVER_R


def test_certificate_type_round_trip():
    c = SOSCertificate(terms=((Fraction(2), P("x + y").with_variables(("x", "y"))),))
    assert c.recompose(("x", "y")) == P("2*x^2 + 4*x*y + 2*y^2")
