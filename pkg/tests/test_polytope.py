from ratpoint.parsing import parse_polynomial
from ratpoint.polytope import half_newton_points, monomials_up_to


def test_monomials_up_to_order_and_count():
    ms = monomials_up_to(2, 2)
    assert ms == [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
    assert len(monomials_up_to(2, 4)) == 15


def test_half_points_motzkin():
    f = parse_polynomial("x^4*y^2 + x^2*y^4 - 3*x^2*y^2 + 1")
    pts = half_newton_points(f)
    assert pts == [(0, 0), (1, 1), (2, 1), (1, 2)]


def test_half_points_bi_quartic():
    f = parse_polynomial("x^4 + 2*x^2*y^2 + y^4")
    pts = half_newton_points(f)
    assert pts == [(2, 0), (1, 1), (0, 2)]


def test_half_points_full_simplex():
    f = parse_polynomial("x^4 + y^4 + 1")
    pts = half_newton_points(f)
    assert set(pts) == set(monomials_up_to(2, 2))


def test_half_points_single_square():
    f = parse_polynomial("x^2")
    assert half_newton_points(f) == [(1,)]
