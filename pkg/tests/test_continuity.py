import random

import pytest

from digimetrics.continuity import (
    BudgetExceeded,
    PointMap,
    continuity_metric,
    feasible_at_threshold,
    is_continuous,
    one_sided_displacement,
)
from digimetrics.hausdorff import hausdorff_lp
from digimetrics.lattice import DigitalImage, ImageError
from digimetrics.metrics import lp_distance
from digimetrics.shapes import c_bar, square_annulus, square_snake
from digimetrics.verify import box, random_connected

from oracles import feasible_by_backtracking, feasible_by_enumeration, lp, one_sided_by_scan


def d1(x, y):
    return lp(x, y, 1)


def test_is_continuous_examples():
    X = square_snake(4)
    assert is_continuous(PointMap(X, X, {x: x for x in X}))
    Y = DigitalImage([(7, 7)], 1)
    assert is_continuous(PointMap(X, Y, {x: (7, 7) for x in X}))
    src = DigitalImage([(0, 0), (1, 0)], 1)
    tgt = DigitalImage([(0, 0), (3, 0)], 1)
    assert not is_continuous(PointMap(src, tgt, {(0, 0): (0, 0), (1, 0): (3, 0)}))


def test_point_map_validation():
    X = DigitalImage([(0, 0), (1, 0)], 1)
    with pytest.raises(ImageError):
        PointMap(X, X, {(0, 0): (0, 0)})
    with pytest.raises(ImageError):
        PointMap(X, X, {(0, 0): (0, 0), (1, 0): (2, 0)})


def test_one_sided_examples():
    X = c_bar(3)
    value, f = one_sided_displacement(X, X)
    assert value == 0 and all(f(x) == x for x in X)
    value, f = one_sided_displacement(DigitalImage([(0, 0)], 1), DigitalImage([(5, 0)], 1))
    assert value == 5 and f((0, 0)) == (5, 0)


def test_mismatched_images_rejected():
    with pytest.raises(ImageError):
        one_sided_displacement(DigitalImage([(0, 0)], 1), DigitalImage([(0, 0)], 2))
    with pytest.raises(ImageError):
        continuity_metric(DigitalImage([(0, 0)], 1), DigitalImage([(0, 0, 0)], 1))
    with pytest.raises(ImageError):
        feasible_at_threshold(DigitalImage([(0, 0)], 1), DigitalImage([(0, 0)], 1), -1)


def test_annulus_metric_of_continuity():
    X, Y = square_annulus(2)
    r = continuity_metric(X, Y, 1)
    # value 4 frozen from the naive backtracking oracle (forward 4, backward 0)
    assert (r.value, r.forward_displacement, r.backward_displacement) == (4, 4, 0)
    assert r.value >= 3 > hausdorff_lp(X, Y, 1).value
    for w, bound in ((r.forward_witness, 4), (r.backward_witness, 0)):
        assert is_continuous(w)
        assert max(lp_distance(x, w(x), 1) for x in w.source) <= bound


def test_annulus_threshold_two_infeasible():
    X, Y = square_annulus(2)
    ok, witness = feasible_at_threshold(X, Y, 2, 1)
    assert not ok and witness is None
    assert not feasible_by_backtracking(X.sorted_points, Y.sorted_points, 1, 2, d1)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_annulus_bound_for_small_n(n):
    X, Y = square_annulus(n)
    assert continuity_metric(X, Y, 1).value >= 2 * n - 1


def test_identity_at_zero_and_constant_maps():
    X = c_bar(4)
    ok, f = feasible_at_threshold(X, X, 0)
    assert ok and all(f(x) == x for x in X)
    Y = DigitalImage([(9, 9), (9, 8)], 1)
    far = max(lp_distance(x, y, 1) for x in X for y in Y)
    assert feasible_at_threshold(X, Y, far)[0]


def test_feasibility_monotone_in_threshold():
    rng = random.Random(12)
    for _ in range(30):
        u = rng.choice((1, 2))
        X = DigitalImage(random_connected(rng, box(4), u, rng.randint(2, 10)), u)
        Y = DigitalImage(random_connected(rng, box(4), u, rng.randint(2, 10)), u)
        results = [feasible_at_threshold(X, Y, t, 1)[0] for t in range(9)]
        assert results == sorted(results)


def test_feasibility_matches_map_enumeration():
    rng = random.Random(31)
    pool = box(3)
    for _ in range(60):
        u = rng.choice((1, 2))
        X = rng.sample(pool, rng.randint(1, 6))
        Y = rng.sample(pool, rng.randint(1, 4))
        p = rng.choice((1, 2))
        t = rng.choice(sorted({lp(x, y, p) for x in X for y in Y}))
        ok, f = feasible_at_threshold(DigitalImage(X, u), DigitalImage(Y, u), t, p)
        assert ok == feasible_by_enumeration(X, Y, u, t, lambda a, b: lp(a, b, p))
        if ok:
            assert is_continuous(f)
            assert all(lp(x, f(x), p) <= t + 1e-9 for x in X)


def test_binary_search_matches_linear_scan():
    rng = random.Random(44)
    for _ in range(40):
        u = rng.choice((1, 2))
        X = random_connected(rng, box(4), u, rng.randint(1, 9))
        Y = random_connected(rng, box(4), u, rng.randint(1, 9))
        for p in (1, 2):
            dist = lambda a, b: lp(a, b, p)  # noqa: E731
            value, f = one_sided_displacement(DigitalImage(X, u), DigitalImage(Y, u), p)
            assert value == pytest.approx(one_sided_by_scan(X, Y, u, dist), rel=1e-12)
            assert is_continuous(f)


def test_witnesses_deterministic():
    X, Y = square_annulus(2)
    a = continuity_metric(X, Y, 1)
    b = continuity_metric(X, Y, 1)
    assert a.forward_witness == b.forward_witness


def test_budget_exceeded_is_raised():
    X, Y = square_annulus(3)
    with pytest.raises(BudgetExceeded):
        continuity_metric(X, Y, 1, budget=3)


def test_hausdorff_below_metric_of_continuity():
    rng = random.Random(1)
    for _ in range(40):
        u = rng.choice((1, 2))
        X = DigitalImage(random_connected(rng, box(5), u, rng.randint(1, 20)), u)
        Y = DigitalImage(random_connected(rng, box(5), u, rng.randint(1, 20)), u)
        for p in (1, 2):
            assert hausdorff_lp(X, Y, p).value <= continuity_metric(X, Y, p).value + 1e-9


def test_disconnected_source_is_handled():
    X = DigitalImage([(0, 0), (4, 0)], 1)
    Y = DigitalImage([(0, 0), (1, 0), (2, 0), (3, 0), (4, 0)], 1)
    assert continuity_metric(X, Y, 1).forward_displacement == 0
    # Y is connected and X is not, so every continuous Y -> X is constant
    assert continuity_metric(X, Y, 1).backward_displacement == 4
