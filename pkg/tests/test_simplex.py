import random
from fractions import Fraction

from ratpoint.simplex import equality_feasible, feasible_point, in_convex_hull


def test_equality_feasible_basic():
    x = equality_feasible([[1, 1]], [2])
    assert x is not None
    assert x[0] + x[1] == 2 and x[0] >= 0 and x[1] >= 0


def test_equality_infeasible():
    # x >= 0 with x1 + x2 = -1 has no solution after sign normalization
    assert equality_feasible([[1, 1], [1, 1]], [1, 2]) is None


def test_feasible_point_with_free_vars():
    pt = feasible_point(
        2,
        [
            ([1, 1], "<=", 1),
            ([1, -1], ">=", -3),
            ([0, 1], "=", Fraction(-1, 2)),
        ],
    )
    assert pt is not None
    x, y = pt
    assert x + y <= 1 and x - y >= -3 and y == Fraction(-1, 2)


def test_feasible_point_infeasible():
    assert feasible_point(1, [([1], ">=", 1), ([1], "<=", 0)]) is None


def test_hull_membership_triangle():
    tri = [(0, 0), (4, 2), (2, 4)]
    assert in_convex_hull((2, 2), tri)
    assert in_convex_hull((0, 0), tri)
    assert in_convex_hull((3, 3), tri)
    assert not in_convex_hull((4, 4), tri)
    assert not in_convex_hull((2, 0), tri)


def test_hull_membership_random_combinations():
    rng = random.Random(41)
    verts = [(rng.randint(-5, 5), rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(6)]
    for _ in range(30):
        weights = [Fraction(rng.randint(0, 4)) for _ in verts]
        total = sum(weights)
        if not total:
            continue
        weights = [w / total for w in weights]
        pt = tuple(
            sum((w * Fraction(v[d]) for w, v in zip(weights, verts)), Fraction(0))
            for d in range(3)
        )
        assert in_convex_hull(pt, verts)
