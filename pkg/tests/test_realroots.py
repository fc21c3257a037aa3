import random
from fractions import Fraction

import pytest

from ratpoint import unipoly as up
from ratpoint.realroots import (
    AlgebraicNumber,
    all_roots_real,
    isolate_real_roots,
    rational_roots,
    root_sum_evaluate,
    sign_at,
)


def test_rational_roots_examples():
    assert rational_roots([1, -3, 2]) == [Fraction(1, 2), Fraction(1)]
    assert rational_roots([-2, 0, 1]) == []
    assert rational_roots([0, 1]) == [Fraction(0)]


def test_rational_roots_random_known():
    rng = random.Random(5)
    for _ in range(200):
        k = rng.randint(1, 4)
        roots = sorted({Fraction(rng.randint(-9, 9), rng.randint(1, 7)) for _ in range(k)})
        p = up.from_roots(roots)
        # scale and add an irrational factor sometimes
        if rng.random() < 0.5:
            p = up.mul(p, [2, 0, 1])
        assert rational_roots(p) == roots


def test_isolation_matches_known_roots():
    rng = random.Random(6)
    for _ in range(200):
        k = rng.randint(1, 5)
        roots = sorted({Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(k)})
        p = up.from_roots(roots)
        ivs = isolate_real_roots(p)
        assert len(ivs) == len(roots)
        for (lo, hi), r in zip(ivs, roots):
            assert lo <= r <= hi


def test_all_roots_real():
    assert all_roots_real([-2, 0, 1]) is True
    assert all_roots_real([1, 0, 1]) is False
    assert all_roots_real([0, -1, 0, 1]) is True


def test_root_sum_examples():
    assert root_sum_evaluate([-2, 0, 1], [1, 1]) == 2
    assert root_sum_evaluate([-3, 1], [0, 0, 1]) == 9
    assert root_sum_evaluate([2, -3, 1], [0, 1]) == 3


def test_root_sum_agrees_with_direct_sum_on_rational_roots():
    rng = random.Random(9)
    for _ in range(50):
        k = rng.randint(1, 4)
        roots = [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(k)]
        g = up.from_roots(roots)
        h = [Fraction(rng.randint(-4, 4)) for _ in range(rng.randint(1, 4))]
        expect = sum((up.eval_at(h, r) for r in roots), Fraction(0))
        assert root_sum_evaluate(g, h) == expect


def test_root_sum_rejects_constant():
    with pytest.raises(ValueError):
        root_sum_evaluate([3], [0, 1])


def sqrt2():
    return AlgebraicNumber.from_minpoly_interval([-2, 0, 1], Fraction(1), Fraction(2))


def test_sign_at_examples():
    a = sqrt2()
    assert sign_at([0, 1], a) == 1
    assert sign_at([-2, 0, 1], a) == 0
    assert sign_at([-2, 1], a) == -1


def test_sign_at_invariant_under_refinement():
    a = sqrt2()
    b = a.refined(Fraction(1, 2**40))
    for p in ([0, 1], [-2, 0, 1], [-2, 1], [1, 2, 3]):
        assert sign_at(p, a) == sign_at(p, b)


def test_sign_at_rejects_bad_interval():
    bad = AlgebraicNumber(minpoly=(-2, 0, 1), interval=(Fraction(-2), Fraction(2)))
    with pytest.raises(ValueError):
        sign_at([0, 1], bad)


def test_rational_algebraic_number():
    r = AlgebraicNumber.from_rational(Fraction(3, 5))
    assert r.is_rational() and r.to_rational() == Fraction(3, 5)
    assert sign_at([0, 1], r) == 1
