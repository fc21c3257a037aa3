import random
from fractions import Fraction

import pytest

from ratpoint import unipoly as up
from ratpoint.factorization import factor_over_Q, squarefree_decomposition


def recompose(factors):
    out = [Fraction(1)]
    for f, m in factors:
        out = up.mul(out, up.pow_([Fraction(c) for c in f], m))
    return out


def assert_same_up_to_constant(p, q):
    p, q = up.strip(list(p)), up.strip(list(q))
    assert len(p) == len(q)
    ratio = Fraction(p[-1]) / Fraction(q[-1])
    assert [Fraction(c) * ratio for c in q] == [Fraction(c) for c in p]


def no_rational_root(f):
    from ratpoint.realroots import rational_roots

    return not rational_roots(list(f))


def independent_irreducible_check(f):
    """Degree <= 3 criteria: no rational roots; quadratics and cubics with a
    rational root would factor."""
    deg = len(f) - 1
    if deg == 1:
        return True
    if deg in (2, 3):
        return no_rational_root(f)
    return None  # not checked here


def test_difference_of_squares():
    # T^4 - 4 = (T^2-2)(T^2+2)
    fs = factor_over_Q([-4, 0, 0, 0, 1])
    polys = sorted(tuple(f) for f, _ in fs)
    assert polys == [(-2, 0, 1), (2, 0, 1)]
    assert all(m == 1 for _, m in fs)


def test_irreducible_quadratic():
    fs = factor_over_Q([-2, 0, 1])
    assert len(fs) == 1
    f, m = fs[0]
    assert list(f) == [-2, 0, 1] and m == 1


def test_cubic_splits():
    # T^3 - T = T (T-1) (T+1)
    fs = factor_over_Q([0, -1, 0, 1])
    polys = sorted(tuple(f) for f, _ in fs)
    assert polys == [(-1, 1), (0, 1), (1, 1)]


def test_multiplicities():
    # (T-1)^2 (T+3)
    p = up.mul(up.mul([-1, 1], [-1, 1]), [3, 1])
    fs = factor_over_Q(p)
    assert sorted((tuple(f), m) for f, m in fs) == [((-1, 1), 2), ((3, 1), 1)]


def test_zero_rejected():
    with pytest.raises(ValueError):
        factor_over_Q([])


def test_squarefree_decomposition_recompose():
    p = up.mul(up.pow_([1, 1], 3), [-2, 0, 1])
    parts = squarefree_decomposition(p)
    assert_same_up_to_constant(p, recompose(parts))


def test_random_products_recompose_and_irreducible():
    rng = random.Random(20)
    pool = [
        [-1, 1], [1, 1], [-2, 1], [3, 1], [0, 1], [-1, 2],
        [-2, 0, 1], [1, 0, 1], [1, 1, 1], [-3, 0, 1], [2, 0, 1],
        [-2, 0, 0, 1], [1, 1, 0, 1],
    ]
    for _ in range(50):
        k = rng.randint(2, 4)
        p = [Fraction(rng.randint(1, 3))]
        for _ in range(k):
            p = up.mul(p, rng.choice(pool))
        fs = factor_over_Q(p)
        assert_same_up_to_constant(p, recompose(fs))
        for f, _ in fs:
            chk = independent_irreducible_check(f)
            assert chk is None or chk


def test_bigger_degree_product():
    rng = random.Random(21)
    # product of two random irreducible-looking quartics via shifted squares
    a = up.mul([1, 0, 1], [2, 0, 1])  # (T^2+1)(T^2+2), irreducible quadratics
    b = up.mul([-2, 0, 1], [-3, 0, 1])
    p = up.mul(a, b)
    fs = factor_over_Q(p)
    assert_same_up_to_constant(p, recompose(fs))
    assert sorted(len(f) - 1 for f, _ in fs) == [2, 2, 2, 2]
    assert rng  # keep the rng import meaningful if edited later
