import random
from fractions import Fraction

import pytest

from ratpoint import unipoly as up
from ratpoint.linalg import (
    LDLTFactorization,
    NotPSD,
    RationalMatrix,
    affine_solution_space,
    char_poly,
    char_poly_rational,
    det,
    ldlt_psd,
    quadratic_form,
)
from ratpoint.multipoly import MultiPoly


def M(rows):
    return RationalMatrix.from_rows([[Fraction(x) for x in r] for r in rows])


# -- characteristic polynomial ----------------------------------------------


def test_char_poly_diagonal_with_parameter():
    vs = ("Y",)
    y = MultiPoly.variable(vs, "Y")
    one = MultiPoly.constant(vs, 1)
    zero = MultiPoly.zero(vs)
    coeffs = char_poly([[y, zero], [zero, one]])
    # lambda^2 - (Y+1) lambda + Y
    assert coeffs[2] == one
    assert coeffs[1] == -(y + 1)
    assert coeffs[0] == y


def test_char_poly_2x2_constant():
    got = char_poly_rational(M([[2, 1], [1, 2]]))
    assert got == [Fraction(3), Fraction(-4), Fraction(1)]


def test_char_poly_1x1():
    got = char_poly_rational(M([[5]]))
    assert got == [Fraction(-5), Fraction(1)]


def test_char_poly_matches_det_at_points():
    rng = random.Random(14)
    for n in (3, 4):
        for _ in range(5):
            a = M([[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)])
            coeffs = char_poly_rational(a)
            for _ in range(3):
                t = Fraction(rng.randint(5, 30), rng.randint(1, 5))
                ti = RationalMatrix.from_rows(
                    [
                        [t * int(i == j) - a.get(i, j) for j in range(n)]
                        for i in range(n)
                    ]
                )
                assert up.eval_at(coeffs, t) == det(ti)


# -- LDL^T ---------------------------------------------------------------------


def recompose_error(m, res):
    n = m.rows
    lhs = [[m.get(res.order[i], res.order[j]) for j in range(n)] for i in range(n)]
    d = res.pivots + [Fraction(0)] * (n - len(res.pivots))
    rhs = [
        [
            sum((d[s] * res.lower[i][s] * res.lower[j][s] for s in range(n)), Fraction(0))
            for j in range(n)
        ]
        for i in range(n)
    ]
    return [[lhs[i][j] - rhs[i][j] for j in range(n)] for i in range(n)]


def test_ldlt_derived_example():
    res = ldlt_psd(M([[2, 1], [1, 2]]))
    assert isinstance(res, LDLTFactorization)
    assert res.pivots == [Fraction(2), Fraction(3, 2)]
    err = recompose_error(M([[2, 1], [1, 2]]), res)
    assert all(x == 0 for row in err for x in row)


def test_ldlt_not_psd():
    res = ldlt_psd(M([[0, 1], [1, 0]]))
    assert isinstance(res, NotPSD)
    assert quadratic_form(M([[0, 1], [1, 0]]), res.witness) < 0


def test_ldlt_rank_one():
    res = ldlt_psd(M([[1, 1], [1, 1]]))
    assert isinstance(res, LDLTFactorization)
    assert res.pivots == [Fraction(1)]
    assert res.rank() == 1


def test_ldlt_asymmetric_rejected():
    with pytest.raises(ValueError):
        ldlt_psd(M([[1, 2], [3, 4]]))


def test_ldlt_random_gram_matrices_psd():
    rng = random.Random(15)
    for _ in range(30):
        n = rng.randint(1, 5)
        k = rng.randint(1, n)
        cols = [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(k)]
        rows = [
            [sum((cols[s][i] * cols[s][j] for s in range(k)), Fraction(0)) for j in range(n)]
            for i in range(n)
        ]
        m = M(rows)
        res = ldlt_psd(m)
        assert isinstance(res, LDLTFactorization)
        assert all(p > 0 for p in res.pivots)
        err = recompose_error(m, res)
        assert all(x == 0 for row in err for x in row)


def test_ldlt_random_indefinite_witness():
    rng = random.Random(16)
    found = 0
    for _ in range(60):
        n = rng.randint(2, 5)
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                rows[i][j] = rows[j][i] = rng.randint(-4, 4)
        m = M(rows)
        res = ldlt_psd(m)
        if isinstance(res, NotPSD):
            found += 1
            assert quadratic_form(m, res.witness) < 0
        else:
            err = recompose_error(m, res)
            assert all(x == 0 for row in err for x in row)
    assert found > 10


def test_ldlt_zero_diag_nonzero_row():
    m = M([[1, 0, 2], [0, 0, 1], [2, 1, 0]])
    res = ldlt_psd(m)
    assert isinstance(res, NotPSD)
    assert quadratic_form(m, res.witness) < 0


# -- affine solution spaces ------------------------------------------------------


def test_affine_identity():
    x0, basis = affine_solution_space(RationalMatrix.identity(2), [1, 2])
    assert x0 == [Fraction(1), Fraction(2)]
    assert basis == []


def test_affine_underdetermined():
    sol = affine_solution_space(M([[1, 1]]), [2])
    assert sol is not None
    x0, basis = sol
    assert x0 == [Fraction(2), Fraction(0)]
    assert len(basis) == 1
    assert basis[0][0] * 1 + basis[0][1] * 1 == 0


def test_affine_inconsistent():
    assert affine_solution_space(M([[1], [1]]), [0, 1]) is None


def test_affine_random_consistency():
    rng = random.Random(17)
    for _ in range(40):
        m_, n_ = rng.randint(1, 4), rng.randint(1, 5)
        a = M([[rng.randint(-3, 3) for _ in range(n_)] for _ in range(m_)])
        xtrue = [Fraction(rng.randint(-3, 3)) for _ in range(n_)]
        b = a.matvec(xtrue)
        sol = affine_solution_space(a, b)
        assert sol is not None
        x0, basis = sol
        assert a.matvec(x0) == b
        for v in basis:
            assert a.matvec(v) == [Fraction(0)] * m_
        # solution-space dimension check: x_true - x0 lies in the basis span
        from ratpoint.linalg import rref

        if basis:
            rows, pivots = rref([list(v) for v in basis])
            diff = [x - y for x, y in zip(xtrue, x0)]
            rows2, pivots2 = rref([list(v) for v in basis] + [diff])
            assert len(pivots2) == len(pivots)
        else:
            assert xtrue == x0
