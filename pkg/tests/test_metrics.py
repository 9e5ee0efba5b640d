import itertools
import random

import pytest

from digimetrics.lattice import INF, ContainmentError, DigitalImage, ImageError
from digimetrics.metrics import (
    DiamDiffLp,
    DiamDiffPath,
    EulerDiff,
    HausdorffLp,
    HausdorffPath,
    Lp,
    PathMetric,
    WeightedSum,
    clique_counts,
    diam_diff,
    diameter,
    euler_characteristic,
    euler_diff,
    eval_pseudometric,
    lp_distance,
    path_distance,
)
from digimetrics.shapes import c_bar, full_square, rect_and_c, square_snake
from digimetrics.verify import box, random_connected

from oracles import clique_counts_by_subsets, euler_by_subsets

SQUARE = [(0, 0), (1, 0), (0, 1), (1, 1)]


def test_lp_examples():
    assert lp_distance((0, 0), (3, 4), 1) == 7
    assert lp_distance((0, 0), (3, 4), 2) == 5
    assert isinstance(lp_distance((0, 0), (3, 4), 2), int)
    assert lp_distance((5, 5), (5, 5), 2) == 0
    assert lp_distance((0, 0), (1, 1), 2) == pytest.approx(2**0.5, rel=1e-12)
    assert lp_distance((0, 0), (1, 1), 3) == pytest.approx(2 ** (1 / 3), rel=1e-12)
    assert lp_distance((0, 0, 0), (2, 3, 6), 2) == 7


def test_lp_errors():
    with pytest.raises(ImageError):
        lp_distance((0, 0), (1, 0, 0), 1)
    with pytest.raises(ImageError):
        lp_distance((0, 0), (1, 0), 0.5)


def test_path_distance_examples():
    for u, expected in ((1, 12), (2, 10)):
        B = c_bar(5, u)
        assert path_distance(B, (5, 0), (5, 2)) == expected
        assert path_distance(B, (5, 0), (5, 0)) == 0
    with pytest.raises(ImageError):
        path_distance(c_bar(5, 1), (5, 0), (5, 1))


def test_diameter_examples():
    assert diameter(full_square(6), Lp(1)) == 12
    S = square_snake(6, 1)
    assert diameter(S, PathMetric(S)) == 30
    assert diameter([(4, 4)], Lp(2)) == 0
    assert diameter([(4, 4)], PathMetric(u=1)) == 0
    assert diameter(DigitalImage([(0, 0), (5, 5)], 1), PathMetric(u=1)) == INF


def test_diameter_errors():
    with pytest.raises(ImageError):
        diameter([], Lp(1))
    with pytest.raises(ContainmentError):
        diameter([(0, 0), (9, 9)], PathMetric(full_square(2)))
    with pytest.raises(ImageError):
        PathMetric()


def test_diam_diff_examples():
    Q, S = full_square(6), square_snake(6)
    assert diam_diff(Q, S, Lp(1)) == 0
    assert diam_diff(Q, S, PathMetric(u=1)) == 18
    assert diam_diff(S, S, PathMetric(u=1)) == 0


def test_diam_diff_infinite_conventions():
    broken = DigitalImage([(0, 0), (3, 0)], 1)
    other = DigitalImage([(0, 5), (9, 5)], 1)
    line = DigitalImage([(0, 0), (1, 0)], 1)
    m = PathMetric(u=1)
    assert diam_diff(broken, other, m) == 0
    assert diam_diff(broken, line, m) == INF
    assert diam_diff(broken, broken, m) == 0


@pytest.mark.parametrize("sides", [(1,), (3,), (2, 4), (4, 4), (1, 2, 3), (4, 4, 4)])
def test_box_diameter_is_sum_of_sides(sides):
    pts = list(itertools.product(*[range(s + 1) for s in sides]))
    X = DigitalImage(pts, 1)
    assert diameter(X, Lp(1)) == sum(sides)
    assert diameter(X, PathMetric(X)) == sum(sides)


def test_euler_examples():
    assert euler_characteristic(DigitalImage([(0, 0)], 1)) == 1
    assert euler_characteristic(DigitalImage(SQUARE, 1)) == 0
    assert euler_characteristic(DigitalImage(SQUARE, 2)) == 1
    assert clique_counts(DigitalImage(SQUARE, 2)) == (4, 6, 4, 1)


def test_euler_diff_examples():
    single = DigitalImage([(0, 0)], 1)
    cycle = DigitalImage(SQUARE, 1)
    filled = DigitalImage(SQUARE, 2)
    assert euler_diff(cycle, cycle) == 0
    assert euler_diff(single, cycle) == 1
    assert euler_diff(cycle, filled) == 1


def test_clique_counts_match_subset_enumeration():
    rng = random.Random(3)
    for _ in range(60):
        dim = rng.choice((2, 3))
        u = rng.randint(1, dim)
        pool = list(itertools.product(range(3), repeat=dim))
        pts = rng.sample(pool, rng.randint(1, 9))
        X = DigitalImage(pts, u)
        assert list(clique_counts(X)) == clique_counts_by_subsets(pts, u)
        assert euler_characteristic(X) == euler_by_subsets(pts, u)


def test_euler_additive_over_separated_components():
    rng = random.Random(8)
    left, right = box(3), [(x + 6, y) for x, y in box(3)]
    for _ in range(40):
        u = rng.choice((1, 2))
        A = rng.sample(left, rng.randint(1, 16))
        B = rng.sample(right, rng.randint(1, 16))
        chi = euler_characteristic(DigitalImage(A + B, u))
        assert chi == euler_characteristic(DigitalImage(A, u)) + euler_characteristic(DigitalImage(B, u))


def test_path_distance_triangle_inequality():
    rng = random.Random(21)
    for _ in range(50):
        u = rng.choice((1, 2))
        X = DigitalImage(random_connected(rng, box(6), u, rng.randint(3, 20)), u)
        for _ in range(10):
            x, y, z = (rng.choice(X.sorted_points) for _ in range(3))
            assert path_distance(X, x, z) <= path_distance(X, x, y) + path_distance(X, y, z)


def test_eval_pseudometric_examples():
    A, B = rect_and_c(5)
    spec = WeightedSum(((1, HausdorffLp(1)), (1, DiamDiffLp(1))))
    assert eval_pseudometric(spec, A, B) == 1
    cycle, single = DigitalImage(SQUARE, 1), DigitalImage([(0, 0)], 1)
    assert eval_pseudometric(WeightedSum(((2, EulerDiff()),)), cycle, single) == 2
    for leaf in (HausdorffLp(2), HausdorffPath(A), DiamDiffLp(1), DiamDiffPath(u=1), EulerDiff(), spec):
        assert eval_pseudometric(leaf, B, B) == 0


def test_eval_pseudometric_leaves_delegate():
    A, B = rect_and_c(5, 2)
    assert eval_pseudometric(DiamDiffPath(u=2), A, B) == 5
    assert eval_pseudometric(HausdorffPath(B), B, [(0, 0), (5, 0)]) == 6
    assert eval_pseudometric(EulerDiff(u=1), SQUARE, [(0, 0)]) == 1
    with pytest.raises(ImageError):
        eval_pseudometric(EulerDiff(), SQUARE, [(0, 0)])
    with pytest.raises(ContainmentError):
        eval_pseudometric(HausdorffPath(B), B, [(5, 1)])


def test_weighted_sum_validation():
    with pytest.raises(ImageError):
        WeightedSum(())
    with pytest.raises(ImageError):
        WeightedSum(((0, HausdorffLp(1)),))
    with pytest.raises(ImageError):
        WeightedSum(((-1, HausdorffLp(1)),))
